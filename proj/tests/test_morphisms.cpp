#include "doctest.h"

#include <random>

#include "segalkit/errors.hpp"
#include "segalkit/index_categories.hpp"
#include "segalkit/morphisms.hpp"

using namespace segalkit;

TEST_CASE("flip is an involution and reverses direction") {
  for (int n = 0; n <= 5; ++n) {
    const auto flip = InvMonotoneMap::flip(n);
    CHECK(compose(flip, flip) == InvMonotoneMap::identity(n));
  }
  const auto flip1 = InvMonotoneMap::flip(1);
  CHECK(compose(flip1, flip1) == InvMonotoneMap::identity(1));

  // flip(2) after the ascending edge (0,1) evaluates pointwise to i -> 2 - theta(i).
  const InvMonotoneMap edge(1, 2, {0, 1}, Direction::ascending);
  const auto composite = compose(InvMonotoneMap::flip(2), edge);
  CHECK(composite.direction() == Direction::descending);
  CHECK(composite.values() == std::vector<int>{2, 1});

  // A flip composed with any non-constant ascending map is descending.
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& f : delta_hom(m, n)) {
        const auto g = compose(InvMonotoneMap::flip(n), InvMonotoneMap::ascending(f));
        CHECK(g.is_constant() == f.is_constant());
        if (!f.is_constant()) CHECK(g.direction() == Direction::descending);
      }
    }
  }
}

TEST_CASE("identity laws on a coface") {
  const MonotoneMap alpha0(1, 2, {0, 1});
  CHECK(compose(MonotoneMap::identity(2), alpha0) == alpha0);
  CHECK(compose(alpha0, MonotoneMap::identity(1)) == alpha0);
}

TEST_CASE("composition-domain errors") {
  const MonotoneMap f(1, 2, {0, 1});
  CHECK_THROWS_AS(compose(f, f), CompositionDomainError);
  CHECK_THROWS_AS(compose(InvMonotoneMap::flip(2), InvMonotoneMap::flip(1)), CompositionDomainError);
  CHECK_THROWS_AS(compose(PointedMap::identity(2), PointedMap::identity(3)), CompositionDomainError);
  CHECK_THROWS_AS(compose(GammaMorphism::identity(2), GammaMorphism::identity(1)), CompositionDomainError);
}

TEST_CASE("invariants are enforced at construction") {
  CHECK_THROWS_AS(MonotoneMap(1, 2, {2, 1}), InvalidMorphismError);
  CHECK_THROWS_AS(MonotoneMap(1, 2, {0, 3}), InvalidMorphismError);
  CHECK_THROWS_AS(MonotoneMap(2, 2, {0, 1}), InvalidMorphismError);
  // Constants have exactly one canonical direction.
  CHECK_THROWS_AS(InvMonotoneMap(1, 1, {1, 1}, Direction::descending), InvalidMorphismError);
  CHECK_THROWS_AS(InvMonotoneMap(2, 2, {0, 2, 1}, Direction::ascending), InvalidMorphismError);
  CHECK_THROWS_AS(InvMonotoneMap::from_values(2, 2, {0, 2, 1}), InvalidMorphismError);
  CHECK_THROWS_AS(GammaMorphism(2, 3, {{1, 2}, {2}}), InvalidMorphismError);
  CHECK_THROWS_AS(PointedMap(1, 1, {1, 1}), InvalidMorphismError);
  // Empty images are legal.
  CHECK_NOTHROW(GammaMorphism(2, 1, {{}, {1}}));
}

TEST_CASE("betweenness") {
  CHECK(betweenness_check({1, 1, 1}));
  CHECK(betweenness_check({0, 2, 1}));
  CHECK_FALSE(betweenness_check({1, 0, 1}));
  CHECK_FALSE(betweenness_check({0, 1, 2, 0}));
}

TEST_CASE("decorated composition preserves object compatibility") {
  std::mt19937 rng(7);
  const std::vector<int> objects_pool{0, 1};
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int l = static_cast<int>(rng() % 3);
    const int m = static_cast<int>(rng() % 3);
    const int n = static_cast<int>(rng() % 3);
    const auto inner = inv_delta_hom(l, m);
    const auto outer = inv_delta_hom(m, n);
    std::vector<int> target_objects;
    for (int i = 0; i <= n; ++i) target_objects.push_back(objects_pool[rng() % 2]);
    const auto f = DecoratedMap::induced(outer[rng() % outer.size()], target_objects);
    const auto g = DecoratedMap::induced(inner[rng() % inner.size()], f.source_objects());
    const auto fg = compose(f, g);
    for (int i = 0; i <= l; ++i) {
      CHECK(fg.source_objects()[static_cast<std::size_t>(i)] ==
            target_objects[static_cast<std::size_t>(fg.underlying()(i))]);
    }
    ++checked;
  }
  CHECK(checked == 400);
  const InvMonotoneMap flip = InvMonotoneMap::flip(1);
  // The flip carries [1]_{a,b} to [1]_{b,a}.
  const DecoratedMap decorated(flip, {1, 0}, {0, 1});
  CHECK(decorated.source_objects() == std::vector<int>{1, 0});
  CHECK_THROWS_AS(DecoratedMap(flip, {0, 1}, {0, 1}), InvalidMorphismError);
}

TEST_CASE("canonical text form") {
  CHECK(to_text(MonotoneMap(1, 3, {0, 2})) == "D[1->3]:0,2");
  CHECK(to_text(InvMonotoneMap(2, 2, {2, 1, 0}, Direction::descending)) == "ID[2->2]:desc:2,1,0");
  CHECK(to_text(GammaMorphism(2, 3, {{1}, {2, 3}})) == "G[2->3]:{1}{2,3}");
  CHECK(to_text(PointedMap(2, 1, {0, 1, 1})) == "P[2->1]:0,1,1");
  CHECK(to_text(GammaMorphism(2, 1, {{}, {1}})) == "G[2->1]:{}{1}");

  for (const char* text : {"D[1->3]:0,2", "ID[2->2]:desc:2,1,0", "ID[1->1]:asc:1,1",
                           "G[2->3]:{1}{2,3}", "P[2->1]:0,1,1", "G[0->2]:", "G[2->1]:{}{1}"}) {
    CHECK(to_text(parse_morphism(text)) == text);
  }
  CHECK_THROWS_AS(parse_morphism("D[1->3]:0,2,"), InputError);
  CHECK_THROWS_AS(parse_morphism("X[1->3]:0,2"), InputError);
  CHECK_THROWS_AS(parse_morphism("D[1->3]0,2"), InputError);
  CHECK_THROWS_AS(parse_morphism("ID[1->1]:up:0,1"), InputError);
  CHECK_THROWS_AS(parse_morphism("D[1->3]:2,0"), InvalidMorphismError);
  CHECK_THROWS_AS(parse_morphism("ID[1->1]:desc:0,0"), InvalidMorphismError);
}

TEST_CASE("text form round-trips every small morphism") {
  for (auto category : {Category::delta, Category::inv_delta, Category::gamma, Category::gamma_op}) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        for (const auto& f : enumerate_hom(category, m, n)) {
          const std::string text = to_text(f);
          const Morphism back = parse_morphism(text);
          CHECK(back == f);
          CHECK(to_text(back) == text);
        }
      }
    }
  }
}
