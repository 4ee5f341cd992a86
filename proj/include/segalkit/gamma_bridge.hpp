#pragma once

// Abelian monoids as strict Gamma-spaces: the construction t(A), extraction
// of the monoid back out of a strict Gamma-space, the round trip, the group
// variant detected by the Bousfield condition, and restriction along
// Segal's functor Delta -> Gamma.

#include <optional>
#include <string>
#include <vector>

#include "segalkit/algebra.hpp"
#include "segalkit/gamma_diagram.hpp"
#include "segalkit/segal_conditions.hpp"

namespace segalkit {

/// X(n) = A^n, labels "(a|b)"; a pointed map f : m -> n sends (a_1..a_m) to
/// (b_1..b_n) with b_j the product of the a_i with f(i) = j (empty: identity).
/// Throws PreconditionError for non-commutative input or truncation < 2.
GammaDiagram t_construct(const FinMonoid& monoid, int truncation);

struct MonoidExtraction {
  std::optional<FinMonoid> monoid;
  ConditionReport strictness;
  std::string refusal;  // set when monoid is empty
};

/// Underlying set X(1); a * b is the fold map applied to the unique element of
/// X(2) projecting to (a, b); the identity is the image of the point of X(0).
/// Refuses unless the Segal condition holds up to rank min(3, N) and the
/// result is a commutative monoid.
MonoidExtraction extract_monoid(const GammaDiagram& x);

struct RoundTripReport {
  bool pass = false;
  std::string reason;
  /// iso[n][x] is the element of t(extract(X))(n) matched with x.
  std::vector<std::vector<ElementId>> iso;
};

/// Compares X with t(extract_monoid(X)) through the projection-tuple bijections.
RoundTripReport roundtrip_check(const GammaDiagram& x);

struct GroupExtraction {
  std::optional<FinGroup> group;
  ConditionReport bousfield;
  std::string refusal;
};

/// extract_monoid plus inverses solved from the rank-2 partial-sum bijection.
GroupExtraction bousfield_group_extract(const GammaDiagram& x);

/// The Delta^op diagram k -> X(k), with f acting through delta_to_gamma(f)
/// read as a pointed map.
DiagramPtr restrict_to_simplicial(const GammaDiagram& x, int truncation);

}  // namespace segalkit
