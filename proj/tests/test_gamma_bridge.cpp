#include "doctest.h"

#include "segalkit/errors.hpp"
#include "segalkit/gamma_bridge.hpp"
#include "segalkit/nerve.hpp"

using namespace segalkit;

namespace {

std::vector<FinMonoid> abelian_corpus() {
  std::vector<FinMonoid> out;
  for (auto& m : catalog(CatalogKind::abelian_monoids, 4)) out.push_back(std::move(m));
  return out;
}

}  // namespace

TEST_CASE("t(A) structure maps") {
  const auto z2 = cyclic_group(2);
  const auto x = t_construct(z2, 3);
  CHECK(x.level_size(0) == 1);
  CHECK(x.level_size(3) == 8);
  const PointedMap fold(2, 1, {0, 1, 1});
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const auto e = x.at(2, "(" + std::to_string(a) + "|" + std::to_string(b) + ")");
      CHECK(x.label(1, x.act(fold, e)) == "(" + std::to_string((a + b) % 2) + ")");
    }
  }
  // p_{3,i} is the i-th projection.
  const auto e = x.at(3, "(1|0|1)");
  const auto p = projection_maps(3);
  CHECK(x.label(1, x.act(p[0], e)) == "(1)");
  CHECK(x.label(1, x.act(p[1], e)) == "(0)");
  CHECK(x.label(1, x.act(p[2], e)) == "(1)");

  for (const auto& a : abelian_corpus()) CHECK(audit_functoriality(t_construct(a, 3)).pass);
  CHECK_THROWS_AS(t_construct(symmetric_group_s3(), 3), PreconditionError);
  CHECK_THROWS_AS(t_construct(full_transformation_monoid_2(), 3), PreconditionError);
}

TEST_CASE("extraction and round trip") {
  for (const auto& a : abelian_corpus()) {
    const auto x = t_construct(a, 3);
    const auto extracted = extract_monoid(x);
    REQUIRE(extracted.monoid.has_value());
    CHECK(are_isomorphic(*extracted.monoid, a));
    const auto round = roundtrip_check(x);
    CHECK(round.pass);
    CHECK(round.reason.empty());
  }
  const auto z3 = extract_monoid(t_construct(cyclic_group(3), 3));
  CHECK(z3.monoid->table == cyclic_group(3).table);
  CHECK(z3.monoid->identity == 0);

  const auto trivial = t_construct(trivial_monoid(), 3);
  for (int n = 0; n <= 3; ++n) CHECK(trivial.level_size(n) == 1);
  CHECK(roundtrip_check(trivial).pass);
  CHECK(roundtrip_check(t_construct(product(cyclic_group(2), cyclic_group(2)), 3)).pass);

  // Folding after the swap is folding.
  const PointedMap fold(2, 1, {0, 1, 1});
  const PointedMap swap(2, 2, {0, 2, 1});
  CHECK(compose(fold, swap) == fold);
}

TEST_CASE("extraction refuses non-strict input") {
  // All levels a two-point set, every map the identity: X(2) is not X(1)^2.
  const GammaDiagram flat(3, {{"p"}, {"a", "b"}, {"a", "b"}, {"a", "b"}},
                          [](const PointedMap& f, ElementId x) { return f.target_rank() == 0 ? 0 : x; });
  const auto extracted = extract_monoid(flat);
  CHECK_FALSE(extracted.monoid.has_value());
  CHECK_FALSE(extracted.strictness.pass);
  CHECK_FALSE(roundtrip_check(flat).pass);
}

TEST_CASE("Bousfield group extraction") {
  for (const auto& a : abelian_corpus()) {
    const auto g = bousfield_group_extract(t_construct(a, 3));
    CHECK(g.group.has_value() == a.is_group());
    if (g.group) {
      CHECK(validate(*g.group).pass);
      const auto expected = a.inverses();
      CHECK(g.group->inverse == *expected);
    } else {
      CHECK(g.bousfield.witness.has_value());
    }
  }
  const auto z3 = bousfield_group_extract(t_construct(cyclic_group(3), 3));
  CHECK(z3.group->inverse == std::vector<int>{0, 2, 1});
  const auto max = bousfield_group_extract(t_construct(boolean_max(), 3));
  CHECK_FALSE(max.group.has_value());
  CHECK(max.bousfield.witness->kind == ConditionWitness::Kind::collision);
  CHECK(bousfield_group_extract(t_construct(trivial_monoid(), 2)).group->order() == 1);
}

TEST_CASE("restriction along Delta -> Gamma") {
  for (const auto& a : abelian_corpus()) {
    const auto x = t_construct(a, 3);
    const auto restricted = restrict_to_simplicial(x, 3);
    CHECK(same_structure(*restricted, *nerve(a, 3)));
    CHECK(audit_functoriality(*restricted).pass);
  }
  const auto x = t_construct(cyclic_group(3), 3);
  const auto r = restrict_to_simplicial(x, 3);
  for (int k = 0; k <= 3; ++k) {
    const auto& id = r->action_table(InvMonotoneMap::identity(k));
    for (ElementId e = 0; e < id.size(); ++e) CHECK(id[e] == e);
  }
  const auto alpha = alpha_maps(3);
  const auto e = r->at(3, "(0|1|2)");
  for (int k = 0; k < 3; ++k) {
    CHECK(r->label(1, r->act(InvMonotoneMap::ascending(alpha[static_cast<std::size_t>(k)]), e)) ==
          "(" + std::to_string(k) + ")");
  }
  CHECK_THROWS_AS(restrict_to_simplicial(x, 4), RankError);
}
