#pragma once

// Finite set-valued diagrams on Delta^op and I-Delta^op, truncated at a rank:
// representables, reduction, spines, sub-diagrams, coproducts, pushouts, map
// enumeration and isomorphism testing.
//
// Object-decorated diagrams (over I-Delta^op_O) are ordinary I-Delta^op
// diagrams whose level 0 is the object set; the decoration of a k-simplex is
// its vertex tuple.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "segalkit/index_categories.hpp"

namespace segalkit {

using ElementId = std::uint32_t;

class TruncatedDiagram {
 public:
  /// act(theta, x) for theta : [m] -> [n] and x in level n is an element of level m.
  using ActionFunction = std::function<ElementId(const InvMonotoneMap&, ElementId)>;

  /// Materializes the action of every morphism between ranks <= truncation.
  /// Labels must be unique within a level.
  TruncatedDiagram(Category category, int truncation, std::vector<std::vector<std::string>> labels,
                   const ActionFunction& act);

  Category category() const { return category_; }
  int truncation() const { return truncation_; }
  const HomTable& homs() const { return *homs_; }
  std::size_t level_size(int k) const;
  const std::vector<std::string>& labels(int k) const;
  const std::string& label(int k, ElementId x) const;
  std::optional<ElementId> find(int k, const std::string& label) const;
  /// Throws InputError when the label is absent.
  ElementId at(int k, const std::string& label) const;

  ElementId act(const InvMonotoneMap& theta, ElementId x) const;
  const std::vector<ElementId>& action_table(const InvMonotoneMap& theta) const;
  /// The same action computed through the generator decomposition of theta.
  ElementId act_by_generators(const InvMonotoneMap& theta, ElementId x) const;
  /// The images of x under the k+1 vertex maps [0] -> [k].
  std::vector<ElementId> vertices(int k, ElementId x) const;

 private:
  void check_level(int k) const;

  Category category_;
  int truncation_;
  std::shared_ptr<const HomTable> homs_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::map<std::string, ElementId>> label_index_;
  // actions_[m][n][hom index] is the table level n -> level m.
  std::vector<std::vector<std::vector<std::vector<ElementId>>>> actions_;
};

using DiagramPtr = std::shared_ptr<const TruncatedDiagram>;

/// Same category, truncation, labels and action tables.
bool same_structure(const TruncatedDiagram& a, const TruncatedDiagram& b);

struct AuditReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // first few only
};

/// Identity acts trivially, stored actions agree with the generator route,
/// and (theta o g)^* = g^* o theta^* for every stored theta and generator g
/// (which implies the law for all composable pairs). With exhaustive_pairs
/// every composable pair is checked directly.
AuditReport audit_functoriality(const TruncatedDiagram& d, bool exhaustive_pairs = false);

/// Level k = hom(k, n); theta acts by precomposition. Labels "[v0,...,vk]".
DiagramPtr representable(Category category, int n, int truncation);

/// Levelwise natural map; components[k][x] for x in source level k.
struct DiagramMorphism {
  DiagramPtr source;
  DiagramPtr target;
  std::vector<std::vector<ElementId>> components;

  ElementId operator()(int k, ElementId x) const {
    return components[static_cast<std::size_t>(k)][x];
  }
};

DiagramMorphism identity_morphism(const DiagramPtr& d);
/// The map out of representable(category, n, N), or its reduction, sending
/// theta to theta^* x for x in level n of target. The basepoint of a reduced
/// source goes to the image of x under a constant map.
DiagramMorphism classifying_map(const DiagramPtr& source, int n, const DiagramPtr& target, ElementId x);
/// g after f.
DiagramMorphism compose(const DiagramMorphism& g, const DiagramMorphism& f);
/// Commutes with every generator action.
bool is_natural(const DiagramMorphism& f);
bool is_surjective(const DiagramMorphism& f);
bool is_injective(const DiagramMorphism& f);

/// Collapses the degenerate images of level 0 at every level to one basepoint
/// "*" (id 0). Throws PreconditionError when level 0 is empty.
DiagramPtr reduce(const DiagramPtr& d);
struct Reduction {
  DiagramPtr diagram;
  DiagramMorphism quotient;
};
Reduction reduce_with_quotient(const DiagramPtr& d);

/// A sub-diagram closed under every action of its parent.
class SubDiagram {
 public:
  /// Throws PreconditionError unless `selected` is closed.
  SubDiagram(DiagramPtr parent, std::vector<std::vector<bool>> selected);
  /// The smallest closed sub-diagram containing `selected`.
  static SubDiagram closure_of(DiagramPtr parent, std::vector<std::vector<bool>> selected);
  static SubDiagram generated_by(DiagramPtr parent, const std::vector<std::pair<int, ElementId>>& seeds);

  const DiagramPtr& parent() const { return parent_; }
  bool contains(int k, ElementId x) const;
  std::size_t level_size(int k) const;
  std::vector<ElementId> elements(int k) const;
  const std::vector<std::vector<bool>>& selected() const { return selected_; }
  bool is_subset_of(const SubDiagram& other) const;
  /// The sub-diagram as a diagram of its own, labels inherited.
  const DiagramPtr& diagram() const { return materialized_; }
  DiagramMorphism inclusion() const;

 private:
  DiagramPtr parent_;
  std::vector<std::vector<bool>> selected_;
  DiagramPtr materialized_;
  std::vector<std::vector<ElementId>> embedding_;
};

enum class SpineKind { G, IG, H };

/// Union of the images of the alpha (G), beta (IG) or gamma (H) edges inside
/// the (reduced) representable of rank n. Throws PreconditionError for n < 2.
SubDiagram spine(SpineKind kind, int n, int truncation, bool reduced);

struct Coproduct {
  DiagramPtr diagram;
  std::vector<DiagramMorphism> injections;
};

/// Labels "i:label". An empty list gives the empty diagram.
Coproduct coproduct(const std::vector<DiagramPtr>& parts, Category category, int truncation);
/// The sum of parts[i] : from.injections[i].source -> to.injections[i].source.
DiagramMorphism coproduct_map(const Coproduct& from, const Coproduct& to,
                              const std::vector<DiagramMorphism>& parts);
/// The map out of the coproduct restricting to legs[i] on summand i.
DiagramMorphism copair(const Coproduct& from, const std::vector<DiagramMorphism>& legs,
                       const DiagramPtr& target);

struct Pushout {
  DiagramPtr diagram;
  DiagramMorphism left;   // B -> P
  DiagramMorphism right;  // C -> P
};

/// Levelwise pushout of f : A -> B and g : A -> C. Classes are labelled by
/// their first member, "L:label" from B or "R:label" from C.
Pushout pushout(const DiagramMorphism& f, const DiagramMorphism& g);

/// Every natural map d1 -> d2, in deterministic order, stopping after
/// max_count maps. Throws RankError when truncations differ.
std::vector<DiagramMorphism> enumerate_maps(const DiagramPtr& d1, const DiagramPtr& d2,
                                            std::size_t max_count = SIZE_MAX);

struct IsoResult {
  bool isomorphic = false;
  std::optional<DiagramMorphism> witness;
  std::string reason;  // why no isomorphism exists
};

IsoResult iso_check(const DiagramPtr& d1, const DiagramPtr& d2);

/// Tuples (e_1..e_n) of level-1 elements with target(e_k) == source(e_{k+1}),
/// where source and target are the actions of the vertex maps 0 and 1.
struct FiberPower {
  int n = 0;
  std::vector<std::vector<ElementId>> tuples;  // lexicographic
  std::optional<std::size_t> index_of(const std::vector<ElementId>& tuple) const;
};

FiberPower fiber_power(const TruncatedDiagram& x, int n);

/// Keeps only the ascending maps of an I-Delta^op diagram.
DiagramPtr restrict_to_delta(const DiagramPtr& d);

/// Levels, labels and generator action tables, in stable order.
nlohmann::json to_json(const TruncatedDiagram& d);

}  // namespace segalkit
