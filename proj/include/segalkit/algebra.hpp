#pragma once

// Finite monoids, groups and groupoids given by composition tables, their law
// checks, brute-force catalogs, and the JSON input schema.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace segalkit {

/// A finite monoid on {0..order-1}; table[a][b] = a * b.
struct FinMonoid {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;

  int multiply(int a, int b) const {
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  bool is_commutative() const;
  /// a*b == a*c implies b == c, and b*a == c*a implies b == c.
  bool is_cancellative() const;
  /// Some element lacks a two-sided inverse exactly when this is empty.
  std::optional<std::vector<int>> inverses() const;
  bool is_group() const { return inverses().has_value(); }
};

/// A finite group: a monoid with an inverse table.
struct FinGroup {
  FinMonoid monoid;
  std::vector<int> inverse;

  int order() const { return monoid.order; }
  int identity() const { return monoid.identity; }
  int multiply(int a, int b) const { return monoid.multiply(a, b); }
  int invert(int a) const { return inverse[static_cast<std::size_t>(a)]; }
  const std::string& name() const { return monoid.name; }

  /// Throws PreconditionError when the monoid has no inverses.
  static FinGroup from_monoid(const FinMonoid& monoid);
};

/// A finite groupoid: morphisms 0..count-1 with endpoints, a partial
/// composition table in diagrammatic order (table[f][g] = "f then g",
/// defined when target(f) == source(g), -1 otherwise), identities per
/// object, and inverses.
struct FinGroupoid {
  std::string name;
  int object_count = 0;
  std::vector<int> source;
  std::vector<int> target;
  std::vector<std::vector<int>> table;
  std::vector<int> identities;
  std::vector<int> inverse;

  int morphism_count() const { return static_cast<int>(source.size()); }
  int then(int f, int g) const {
    return table[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
  }

  /// Every hom-set a singleton.
  static FinGroupoid indiscrete(int objects);
  /// One object; the group itself.
  static FinGroupoid from_group(const FinGroup& group);
};

struct ValidationReport {
  bool pass = true;
  std::string law;                 // first violated law
  std::vector<int> witness;        // elements exhibiting the violation
  std::string message;
};

/// Table shape problems throw InputError; law violations are report content.
ValidationReport validate(const FinMonoid& monoid);
ValidationReport validate(const FinGroup& group);
ValidationReport validate(const FinGroupoid& groupoid);

bool are_isomorphic(const FinMonoid& a, const FinMonoid& b);
/// A bijection phi with phi(a*b) = phi(a)*phi(b) and phi(e) = e, if any.
std::optional<std::vector<int>> find_isomorphism(const FinMonoid& a, const FinMonoid& b);

// Named structures.
FinMonoid cyclic_group(int order);
FinMonoid product(const FinMonoid& a, const FinMonoid& b);
FinMonoid symmetric_group_s3();
/// ({0,1}, *) with identity 1.
FinMonoid boolean_multiplicative();
/// ({0,1}, max) with identity 0.
FinMonoid boolean_max();
/// ({0..n-1}, max) with identity 0: commutative, idempotent, not cancellative.
FinMonoid max_monoid(int order);
/// All self-maps of a 2-element set under composition: non-commutative, not a group.
FinMonoid full_transformation_monoid_2();
FinMonoid trivial_monoid();

enum class CatalogKind { monoids, abelian_monoids, groups, abelian_groups };

CatalogKind parse_catalog_kind(const std::string& name);

inline constexpr int kExhaustiveOrderCap = 3;
inline constexpr int kCuratedOrderCap = 6;

/// Every monoid of order <= min(max_order, 3) up to isomorphism (brute force
/// over tables with identity 0), followed by curated entries of order 4..6
/// when max_order allows. Throws CapabilityError past order 6.
std::vector<FinMonoid> catalog(CatalogKind kind, int max_order);
/// Exhaustive part only.
std::vector<FinMonoid> exhaustive_monoids(int order);
std::vector<FinMonoid> curated_monoids();

/// JSON input schema:
///   {"kind":"monoid"|"group","order":n,"table":[[...]],"identity":e,"name":"..."}
///   {"kind":"groupoid","objects":k,"morphisms":[[src,tgt],...],
///    "identities":[...],"table":[[f;g or null,...],...],"name":"..."}
FinMonoid monoid_from_json(const nlohmann::json& doc);
FinGroup group_from_json(const nlohmann::json& doc);
FinGroupoid groupoid_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const FinMonoid& monoid);
nlohmann::json to_json(const FinGroupoid& groupoid);

}  // namespace segalkit
