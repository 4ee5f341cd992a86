#pragma once

// Segal-type comparison maps and their strict (bijectivity) checks:
//   segal      X_n -> X_1 x_{X_0} ... x_{X_0} X_1   along alpha^k = (k, k+1)
//   bousfield  X_n -> tuples of edges sharing a source, along gamma^k = (0, k+1)
//   xi         the I-Delta analogue along beta^k
//   gamma_segal / bousfield_gamma for Gamma-spaces, along p_{n,i} and j^k.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "segalkit/gamma_diagram.hpp"
#include "segalkit/presheaves.hpp"

namespace segalkit {

enum class ConditionKind { segal, bousfield, xi, gamma_segal, bousfield_gamma };

std::string condition_name(ConditionKind kind);

struct LevelVerdict {
  int level = 0;
  bool pass = true;
  std::size_t source_size = 0;
  std::size_t target_size = 0;
};

struct ConditionWitness {
  enum class Kind { collision, unhit, precondition };
  Kind kind = Kind::collision;
  int level = 0;
  /// Two distinct simplices with the same image (collision).
  std::vector<ElementId> elements;
  /// The shared image, or the tuple nobody maps to, as level-1 ids.
  std::vector<ElementId> tuple;
  std::vector<std::string> element_labels;
  std::vector<std::string> tuple_labels;
  std::string note;
};

struct ConditionReport {
  ConditionKind condition = ConditionKind::segal;
  int max_level = 0;
  bool pass = true;
  std::vector<LevelVerdict> levels;
  std::optional<ConditionWitness> witness;  // present exactly when pass is false
};

/// Stable fields: condition, level (max level checked), verdict, levels, witness.
nlohmann::json to_json(const ConditionReport& report);

/// Edge tuples of every n-simplex along the named projection family.
std::vector<std::vector<ElementId>> segal_map(const TruncatedDiagram& x, int n);
std::vector<std::vector<ElementId>> bousfield_segal_map(const TruncatedDiagram& x, int n);
std::vector<std::vector<ElementId>> xi_map(const TruncatedDiagram& x, int n);

/// Tuples of n level-1 elements with a common source vertex.
FiberPower shared_source_power(const TruncatedDiagram& x, int n);

struct CheckOptions {
  /// Also require a single vertex.
  bool require_reduced = false;
};

/// Bijectivity of the comparison map for 2 <= n <= n_max. Throws RankError
/// when the truncation is below n_max.
ConditionReport strict_segal_check(const TruncatedDiagram& x, int n_max, CheckOptions options = {});
ConditionReport strict_bousfield_check(const TruncatedDiagram& x, int n_max, CheckOptions options = {});
/// Needs an I-Delta^op diagram (PreconditionError otherwise).
ConditionReport strict_xi_check(const TruncatedDiagram& x, int n_max, CheckOptions options = {});

/// X(n) -> X(1)^n along p_{n,1..n}, and along the pointed forms of j^0..j^{n-1}.
std::vector<std::vector<ElementId>> gamma_segal_map(const GammaDiagram& x, int n);
std::vector<std::vector<ElementId>> bousfield_gamma_map(const GammaDiagram& x, int n);

/// X(0) must be a point: otherwise PreconditionError, or a failed report
/// carrying a precondition witness when survey is set.
ConditionReport gamma_segal_check(const GammaDiagram& x, int n_max, bool survey = false);
ConditionReport bousfield_gamma_check(const GammaDiagram& x, int n_max, bool survey = false);

}  // namespace segalkit
