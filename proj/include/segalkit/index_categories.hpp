#pragma once

// The index categories as enumerable finite truncations: hom-set enumeration,
// the generator closure theorem for the invertible simplex category, the
// distinguished projection families, Segal's functor Delta -> Gamma, and the
// dictionary between the two descriptions of Gamma.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "segalkit/morphisms.hpp"

namespace segalkit {

enum class Category { delta, inv_delta, gamma, gamma_op };

std::string category_name(Category category);
/// Accepts "delta", "idelta", "gamma", "gamma_op" (and the short tags D, ID, G, P).
Category parse_category(const std::string& name);

/// Complete, duplicate-free hom-set in canonical sorted order.
/// delta / inv_delta return MonotoneMap / InvMonotoneMap; gamma returns
/// GammaMorphism; gamma_op returns PointedMap.
std::vector<Morphism> enumerate_hom(Category category, int m, int n);

std::vector<MonotoneMap> delta_hom(int m, int n);
/// Weakly monotone maps I[m] -> I[n] in canonical (direction, values) form.
std::vector<InvMonotoneMap> inv_delta_hom(int m, int n);
std::vector<GammaMorphism> gamma_hom(int m, int n);
std::vector<PointedMap> pointed_hom(int m, int n);

/// Hom-sets of Delta or I-Delta between all ranks <= max_rank, with index
/// lookup. Delta morphisms are stored as ascending InvMonotoneMaps so that
/// diagrams over either category share one representation.
class HomTable {
 public:
  HomTable(Category category, int max_rank);

  Category category() const { return category_; }
  int max_rank() const { return max_rank_; }
  const std::vector<InvMonotoneMap>& homs(int m, int n) const;
  std::optional<std::size_t> find(const InvMonotoneMap& f) const;
  std::size_t index_of(const InvMonotoneMap& f) const;  // throws RankError if absent
  bool contains(const InvMonotoneMap& f) const { return find(f).has_value(); }

  /// Faces, degeneracies and (for I-Delta) flips between ranks <= max_rank.
  const std::vector<InvMonotoneMap>& generators() const { return generators_; }

 private:
  Category category_;
  int max_rank_;
  std::vector<std::vector<std::vector<InvMonotoneMap>>> homs_;
  std::vector<std::vector<std::map<std::vector<int>, std::size_t>>> ascending_index_;
  std::vector<std::vector<std::map<std::vector<int>, std::size_t>>> descending_index_;
  std::vector<InvMonotoneMap> generators_;
};

/// Shared immutable hom table (cached per category and rank).
std::shared_ptr<const HomTable> hom_table(Category category, int max_rank);

/// theta == compose(result[0], compose(result[1], ...)), each factor a face,
/// degeneracy or flip. Descending maps factor as flip after an ascending map.
std::vector<InvMonotoneMap> generator_decomposition(const InvMonotoneMap& theta);

struct ClosureDiscrepancy {
  int m = 0;
  int n = 0;
  std::vector<std::string> only_in_closure;
  std::vector<std::string> only_in_monotone;
};

struct ClosureReport {
  int m_max = 0;
  int n_max = 0;
  bool pass = true;
  /// closure_size[m][n] and monotone_size[m][n].
  std::vector<std::vector<std::size_t>> closure_size;
  std::vector<std::vector<std::size_t>> monotone_size;
  std::vector<ClosureDiscrepancy> discrepancies;
};

inline constexpr int kClosureRankCap = 4;

/// Closes {order-preserving maps, flips} under composition among ranks
/// <= max(m_max, n_max) and compares each hom-set with the set of all weakly
/// monotone functions (found by filtering every function [m] -> [n]).
ClosureReport verify_generated_closure(int m_max, int n_max, int rank_cap = kClosureRankCap);

enum class ProjectionKind { alpha, beta, gamma, p, j };

ProjectionKind parse_projection_kind(const std::string& name);

/// The n morphisms of the named family, indexed as in the literature:
/// alpha^k, beta^k, gamma^k, j^k for k = 0..n-1 and p_{n,i} for i = 1..n.
std::vector<Morphism> projection_family(ProjectionKind kind, int n);

std::vector<MonotoneMap> alpha_maps(int n);
std::vector<InvMonotoneMap> beta_maps(int n);
std::vector<MonotoneMap> gamma_maps(int n);
std::vector<PointedMap> projection_maps(int n);
std::vector<GammaMorphism> j_maps(int n);

/// Segal's functor: theta(i) = { j | f(i-1) < j <= f(i) }.
GammaMorphism delta_to_gamma(const MonotoneMap& f);

/// Gamma -> Gamma^op dictionary: j goes to the unique i with j in theta(i),
/// or to 0. Contravariant: to_pointed(f o g) == to_pointed(g) o to_pointed(f).
PointedMap to_pointed(const GammaMorphism& f);
GammaMorphism to_gamma(const PointedMap& f);

struct LawViolation {
  std::string law;
  std::vector<std::string> morphisms;
};

struct LawsReport {
  Category category = Category::delta;
  int rank_bound = 0;
  std::size_t checked_triples = 0;
  std::size_t checked_pairs = 0;
  bool pass = true;
  std::vector<LawViolation> violations;
};

/// Associativity and identity laws over all composable pairs and triples up to
/// rank_bound. For gamma, also checks that composition agrees with pointed-map
/// composition under the dictionary.
LawsReport category_laws(Category category, int rank_bound);

}  // namespace segalkit
