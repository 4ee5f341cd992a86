#pragma once

// Morphisms of the index categories: order-preserving maps of finite
// ordinals, their invertible extension with flips, Segal's Gamma in both the
// subset-valued and the pointed-map description, and object-decorated maps.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace segalkit {

enum class Direction : std::uint8_t { ascending, descending };

/// Weakly increasing map [m] -> [n].
class MonotoneMap {
 public:
  MonotoneMap(int source_rank, int target_rank, std::vector<int> values);

  static MonotoneMap identity(int rank);
  /// Coface skipping `skipped` : [n-1] -> [n].
  static MonotoneMap coface(int n, int skipped);
  /// Codegeneracy hitting `repeated` twice : [n+1] -> [n].
  static MonotoneMap codegeneracy(int n, int repeated);

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
  bool is_constant() const;

  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  int source_rank_;
  int target_rank_;
  std::vector<int> values_;
};

/// Morphism I[m] -> I[n] of the invertible simplex category: a weakly
/// monotone map tagged with its direction. Constant maps are always stored as
/// ascending, so no value sequence appears under two directions.
class InvMonotoneMap {
 public:
  InvMonotoneMap(int source_rank, int target_rank, std::vector<int> values,
                 Direction direction);

  /// Infers the direction from the values; rejects non-monotone sequences.
  static InvMonotoneMap from_values(int source_rank, int target_rank,
                                    std::vector<int> values);
  static InvMonotoneMap identity(int rank);
  /// i -> n - i on I[n].
  static InvMonotoneMap flip(int rank);
  static InvMonotoneMap ascending(const MonotoneMap& map);

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }
  const std::vector<int>& values() const { return values_; }
  Direction direction() const { return direction_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
  bool is_constant() const;
  bool is_ascending() const { return direction_ == Direction::ascending; }
  /// The underlying order-preserving map; only valid when ascending.
  MonotoneMap as_monotone() const;

  friend auto operator<=>(const InvMonotoneMap&, const InvMonotoneMap&) = default;
  friend bool operator==(const InvMonotoneMap&, const InvMonotoneMap&) = default;

 private:
  int source_rank_;
  int target_rank_;
  std::vector<int> values_;
  Direction direction_;
};

/// If i < j < k and values[i] == values[k] then values[j] == values[i].
bool betweenness_check(const std::vector<int>& values);
bool is_weakly_increasing(const std::vector<int>& values);
bool is_weakly_decreasing(const std::vector<int>& values);

/// A morphism m -> n of Gamma: theta : {1..m} -> P({1..n}) with pairwise
/// disjoint images. images()[i-1] is the sorted subset theta(i).
class GammaMorphism {
 public:
  GammaMorphism(int source_size, int target_size, std::vector<std::vector<int>> images);

  static GammaMorphism identity(int size);

  int source_size() const { return source_size_; }
  int target_size() const { return target_size_; }
  const std::vector<std::vector<int>>& images() const { return images_; }
  const std::vector<int>& image(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  friend auto operator<=>(const GammaMorphism&, const GammaMorphism&) = default;
  friend bool operator==(const GammaMorphism&, const GammaMorphism&) = default;

 private:
  int source_size_;
  int target_size_;
  std::vector<std::vector<int>> images_;
};

/// A based map {0..m} -> {0..n} with 0 -> 0: the Gamma^op description.
class PointedMap {
 public:
  PointedMap(int source_rank, int target_rank, std::vector<int> values);

  static PointedMap identity(int rank);

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }

  friend auto operator<=>(const PointedMap&, const PointedMap&) = default;
  friend bool operator==(const PointedMap&, const PointedMap&) = default;

 private:
  int source_rank_;
  int target_rank_;
  std::vector<int> values_;
};

/// A map [m]_{y} -> [n]_{x} of the object-decorated categories: an
/// underlying (invertible) monotone map with y_i = x_{theta(i)}.
class DecoratedMap {
 public:
  DecoratedMap(InvMonotoneMap underlying, std::vector<int> source_objects,
               std::vector<int> target_objects);

  /// The unique decoration of the source induced by `target_objects`.
  static DecoratedMap induced(InvMonotoneMap underlying, std::vector<int> target_objects);

  const InvMonotoneMap& underlying() const { return underlying_; }
  const std::vector<int>& source_objects() const { return source_objects_; }
  const std::vector<int>& target_objects() const { return target_objects_; }

  friend bool operator==(const DecoratedMap&, const DecoratedMap&) = default;

 private:
  InvMonotoneMap underlying_;
  std::vector<int> source_objects_;
  std::vector<int> target_objects_;
};

/// compose(f, g) is f after g; throws CompositionDomainError unless
/// target(g) == source(f).
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);
InvMonotoneMap compose(const InvMonotoneMap& f, const InvMonotoneMap& g);
GammaMorphism compose(const GammaMorphism& f, const GammaMorphism& g);
PointedMap compose(const PointedMap& f, const PointedMap& g);
DecoratedMap compose(const DecoratedMap& f, const DecoratedMap& g);

using Morphism = std::variant<MonotoneMap, InvMonotoneMap, GammaMorphism, PointedMap>;

// Canonical text form, round-trip exact:
//   D[1->3]:0,2          ID[2->2]:desc:2,1,0
//   G[2->3]:{1}{2,3}     P[2->1]:0,1,1
std::string to_text(const MonotoneMap& f);
std::string to_text(const InvMonotoneMap& f);
std::string to_text(const GammaMorphism& f);
std::string to_text(const PointedMap& f);
std::string to_text(const Morphism& f);

/// Parses any of the four text forms; throws InputError on malformed text and
/// InvalidMorphismError on well-formed text describing an invalid morphism.
Morphism parse_morphism(std::string_view text);

}  // namespace segalkit
