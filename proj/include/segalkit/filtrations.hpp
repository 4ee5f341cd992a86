#pragma once

// Word-length filtrations of the (invertible) nerve of a free group, the
// initial-segment variant over Delta^op, and the comparison of each stage
// with the pushout that attaches the next layer of cells.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "segalkit/nerve.hpp"
#include "segalkit/presheaves.hpp"

namespace segalkit {

enum class FiltrationVariant { invertible, general_n, bousfield };

std::string variant_name(FiltrationVariant variant);

using FreeNervePtr = std::shared_ptr<const FreeNerve>;

struct FiltrationStage {
  FiltrationVariant variant = FiltrationVariant::invertible;
  int k = 0;
  FreeNervePtr nerve;
  SubDiagram stage;
  /// Per level: elements of the bounded nerve meeting the raw membership
  /// predicate, and stage elements that fail it (added by closure).
  std::vector<std::size_t> raw_members;
  std::vector<std::size_t> closure_added;
};

/// Total word length <= k inside inerve_free(generators, J, K). One generator
/// gives the invertible variant, more give general_n. Throws BoundError for
/// k > K and PreconditionError for J < 2.
FiltrationStage psi_invertible(int generators, int k, int truncation, int word_bound);
FiltrationStage psi_invertible(const FreeNervePtr& nerve, int k);

/// Initial-segment coordinates c_i = m_1 + ... + m_i of (x^m_1|...|x^m_j).
/// Stage 1 is the sub-diagram generated by the 1-simplex x; stage k >= 2 is the
/// closure of stage k-1 together with the tuples satisfying sum |c_i| <= k and
///   0 <= c_i <= 1 (k <= 2),  -1 <= c_i <= 1 (k = 3),  -k+1 <= c_i <= k-2 (k >= 4).
/// The closure is taken with word bound 2k and then cut down to K.
FiltrationStage psi_bousfield(int k, int truncation, int word_bound);
FiltrationStage psi_bousfield(const FreeNervePtr& nerve, int k);

/// The closure of the raw predicate alone, without the stage-1 replacement.
SubDiagram bousfield_raw_closure(const FreeNervePtr& nerve, int k);

bool bousfield_predicate(int k, const std::vector<int>& coordinates);
std::vector<int> initial_segment_coordinates(const std::vector<FreeWord>& entries);

struct ChainReport {
  FiltrationVariant variant = FiltrationVariant::invertible;
  int k_max = 0;
  int truncation = 0;
  int word_bound = 0;
  /// sizes[k][j] = |stage k at level j|; full[j] = |nerve level j|.
  std::vector<std::vector<std::size_t>> sizes;
  std::vector<std::size_t> full;
  std::vector<bool> inclusions;  // stage k inside stage k+1
  bool closed = true;            // every stage is a sub-diagram and reduced
  std::optional<bool> exhausted;  // checked when k_max reaches the word bound
  std::vector<std::optional<int>> first_exhausting_stage;  // per level
  bool pass = true;
};

ChainReport stage_chain_report(FiltrationVariant variant, int k_max, int truncation, int word_bound,
                               int generators = 1);

struct AttachmentLevel {
  int level = 0;
  std::size_t pushout_size = 0;
  std::size_t target_size = 0;
  std::size_t image_size = 0;
  bool surjective = false;
  bool injective = false;
};

struct AttachmentOptions {
  int generators = 1;
  std::size_t max_cells = SIZE_MAX;
};

struct AttachmentReport {
  FiltrationVariant variant = FiltrationVariant::invertible;
  int k = 0;
  int truncation = 0;
  int word_bound = 0;
  bool fits = true;
  std::string note;
  /// Attaching maps (k = 1: maps from the reduced spine into stage 1;
  /// otherwise one per new (k+1)-simplex).
  std::size_t cell_count = 0;
  bool comparison_well_defined = true;
  std::vector<AttachmentLevel> levels;
  bool surjective = false;
  bool isomorphic = false;
  /// "level:label" for the first stage k+1 elements outside the image.
  std::vector<std::string> missed;
};

/// Builds the levelwise pushout of
///   coprod A_i -> coprod (reduced representable of rank k+1),  coprod A_i -> stage k
/// and compares it with stage k+1 through the characteristic maps.
AttachmentReport attachment_compare(FiltrationVariant variant, int k, int truncation, int word_bound,
                                    AttachmentOptions options = {});

nlohmann::json to_json(const FiltrationStage& stage);
nlohmann::json to_json(const ChainReport& report);
nlohmann::json to_json(const AttachmentReport& report);

}  // namespace segalkit
