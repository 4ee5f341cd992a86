#include "doctest.h"

#include <algorithm>
#include <set>

#include "segalkit/errors.hpp"
#include "segalkit/presheaves.hpp"

using namespace segalkit;

namespace {

// Count of functions [j] -> [n] that are weakly increasing or weakly decreasing.
std::size_t brute_monotone_count(int j, int n, bool allow_decreasing) {
  std::size_t count = 0;
  std::vector<int> v(static_cast<std::size_t>(j) + 1, 0);
  while (true) {
    const bool inc = std::is_sorted(v.begin(), v.end());
    const bool dec = std::is_sorted(v.rbegin(), v.rend());
    if (inc || (allow_decreasing && dec)) ++count;
    int pos = j;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == n) v[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return count;
    ++v[static_cast<std::size_t>(pos)];
  }
}

// Elements of level k not hit by any degeneracy from level k-1.
std::size_t nondegenerate_count(const TruncatedDiagram& d, int k) {
  std::set<ElementId> degenerate;
  for (const auto& g : d.homs().generators()) {
    if (g.source_rank() == k && g.target_rank() == k - 1) {
      for (ElementId y : d.action_table(g)) degenerate.insert(y);
    }
  }
  return d.level_size(k) - degenerate.size();
}

std::set<std::string> label_set(const TruncatedDiagram& d, int k) {
  return {d.labels(k).begin(), d.labels(k).end()};
}

DiagramMorphism vertex_inclusion(const DiagramPtr& point, const DiagramPtr& edge, int vertex) {
  return classifying_map(point, 0, edge, edge->at(0, "[" + std::to_string(vertex) + "]"));
}

}  // namespace

TEST_CASE("representables match enumeration") {
  const auto d2 = representable(Category::delta, 2, 2);
  CHECK(d2->level_size(1) == 6);
  for (int n = 0; n <= 4; ++n) CHECK(representable(Category::delta, n, 1)->level_size(0) == static_cast<std::size_t>(n + 1));

  const auto i1 = representable(Category::inv_delta, 1, 5);
  for (int j = 0; j <= 5; ++j) {
    CHECK(i1->level_size(j) == brute_monotone_count(j, 1, true));
    CHECK(i1->level_size(j) == static_cast<std::size_t>(2 * j + 2));
  }
  CHECK(nondegenerate_count(*i1, 1) == 2);
  CHECK(label_set(*i1, 1) == std::set<std::string>{"[0,0]", "[0,1]", "[1,0]", "[1,1]"});

  for (int n = 0; n <= 3; ++n) {
    for (auto cat : {Category::delta, Category::inv_delta}) {
      const auto r = representable(cat, n, 3);
      CHECK(audit_functoriality(*r, n <= 2).pass);
      for (int j = 0; j <= 3; ++j) {
        CHECK(r->level_size(j) == brute_monotone_count(j, n, cat == Category::inv_delta));
      }
    }
  }
}

TEST_CASE("reduction") {
  const auto i1 = reduce(representable(Category::inv_delta, 1, 5));
  for (int j = 0; j <= 5; ++j) {
    // Non-constant monotone maps plus the basepoint.
    CHECK(i1->level_size(j) == brute_monotone_count(j, 1, true) - 2 + 1);
    CHECK(i1->level_size(j) == static_cast<std::size_t>(2 * j + 1));
  }
  CHECK(audit_functoriality(*i1, true).pass);
  CHECK(reduce(representable(Category::delta, 1, 2))->level_size(2) == 3);

  const auto point = reduce(representable(Category::delta, 0, 3));
  for (int j = 0; j <= 3; ++j) CHECK(point->level_size(j) == 1);

  // Idempotent up to isomorphism.
  for (auto cat : {Category::delta, Category::inv_delta}) {
    const auto once = reduce(representable(cat, 2, 3));
    CHECK(iso_check(reduce(once), once).isomorphic);
  }

  const auto empty = coproduct({}, Category::delta, 2).diagram;
  CHECK_THROWS_AS(reduce(empty), PreconditionError);
}

TEST_CASE("spines") {
  const auto g2 = spine(SpineKind::G, 2, 2, false);
  CHECK(g2.level_size(1) == 5);
  CHECK(label_set(*g2.diagram(), 1) == std::set<std::string>{"[0,0]", "[1,1]", "[2,2]", "[0,1]", "[1,2]"});

  const auto ig2 = spine(SpineKind::IG, 2, 2, true);
  CHECK(label_set(*ig2.diagram(), 1) == std::set<std::string>{"*", "[0,1]", "[1,0]", "[1,2]", "[2,1]"});

  const auto h2 = spine(SpineKind::H, 2, 2, true);
  CHECK(label_set(*h2.diagram(), 1) == std::set<std::string>{"*", "[0,1]", "[0,2]"});

  for (auto kind : {SpineKind::G, SpineKind::IG, SpineKind::H}) {
    for (bool reduced : {false, true}) {
      const auto s = spine(kind, 3, 3, reduced);
      CHECK(audit_functoriality(*s.diagram()).pass);
      CHECK(is_natural(s.inclusion()));
      // The spine has no nondegenerate simplices above level 1.
      CHECK(nondegenerate_count(*s.diagram(), 2) == 0);
    }
  }
  CHECK_THROWS_AS(spine(SpineKind::G, 1, 2, false), PreconditionError);
  CHECK_THROWS_AS(spine(SpineKind::H, 0, 2, true), PreconditionError);
}

TEST_CASE("sub-diagrams must be closed") {
  const auto d = representable(Category::delta, 2, 2);
  std::vector<std::vector<bool>> sel;
  for (int k = 0; k <= 2; ++k) sel.emplace_back(d->level_size(k), false);
  sel[1][d->at(1, "[0,2]")] = true;
  CHECK_THROWS_AS(SubDiagram(d, sel), PreconditionError);
  const auto closed = SubDiagram::closure_of(d, sel);
  CHECK(closed.level_size(0) == 2);
  CHECK(closed.level_size(1) == 3);
}

TEST_CASE("pushouts") {
  const auto point = representable(Category::delta, 0, 2);
  const auto id = identity_morphism(point);
  const auto p = pushout(id, id);
  for (int k = 0; k <= 2; ++k) CHECK(p.diagram->level_size(k) == 1);

  // Two edges glued end to start.
  const auto edge = representable(Category::delta, 1, 2);
  const auto glued = pushout(vertex_inclusion(point, edge, 1), vertex_inclusion(point, edge, 0));
  CHECK(glued.diagram->level_size(1) == 5);
  CHECK(audit_functoriality(*glued.diagram, true).pass);
  CHECK(iso_check(glued.diagram, spine(SpineKind::G, 2, 2, false).diagram()).isomorphic);
  CHECK(is_natural(glued.left));
  CHECK(is_natural(glued.right));

  // Pushout along an identity returns the other leg's target.
  const auto f = vertex_inclusion(point, edge, 0);
  const auto trivial = pushout(f, identity_morphism(point));
  CHECK(iso_check(trivial.diagram, edge).isomorphic);

  // Universal property: maps out of the pushout correspond to compatible cocones.
  const auto target = representable(Category::delta, 2, 2);
  const auto from_b = enumerate_maps(edge, target);
  std::size_t cocones = 0;
  for (const auto& u : from_b) {
    for (const auto& v : from_b) {
      const auto uf = compose(u, vertex_inclusion(point, edge, 1));
      const auto vg = compose(v, vertex_inclusion(point, edge, 0));
      cocones += uf.components == vg.components;
    }
  }
  CHECK(enumerate_maps(glued.diagram, target).size() == cocones);
  for (const auto& h : enumerate_maps(glued.diagram, target)) CHECK(is_natural(h));
}

TEST_CASE("coproducts") {
  const auto edge = representable(Category::inv_delta, 1, 2);
  const auto sum = coproduct({edge, edge, edge}, Category::inv_delta, 2);
  CHECK(sum.diagram->level_size(2) == 3 * edge->level_size(2));
  CHECK(audit_functoriality(*sum.diagram).pass);
  for (const auto& inj : sum.injections) CHECK(is_natural(inj));
  const auto fold = copair(sum, {identity_morphism(edge), identity_morphism(edge), identity_morphism(edge)}, edge);
  CHECK(is_natural(fold));
  CHECK(is_surjective(fold));
}

TEST_CASE("map enumeration") {
  const auto r1 = reduce(representable(Category::inv_delta, 1, 3));
  const auto self = enumerate_maps(r1, r1);
  CHECK(self.size() == 3);  // trivial, identity, flip-induced
  CHECK(std::any_of(self.begin(), self.end(), [&](const auto& f) { return f.components == identity_morphism(r1).components; }));
  const auto flip_image = r1->at(1, "[1,0]");
  CHECK(std::any_of(self.begin(), self.end(), [&](const auto& f) { return f(1, r1->at(1, "[0,1]")) == flip_image; }));

  // Yoneda: maps out of a representable correspond to elements.
  for (auto cat : {Category::delta, Category::inv_delta}) {
    const auto x = reduce(representable(cat, 2, 2));
    for (int n = 0; n <= 2; ++n) {
      const auto maps = enumerate_maps(representable(cat, n, 2), x);
      CHECK(maps.size() == x->level_size(n));
    }
  }

  const auto d = representable(Category::delta, 2, 3);
  const auto iso = iso_check(d, d);
  REQUIRE(iso.isomorphic);
  CHECK(iso.witness->components == identity_morphism(d).components);
  CHECK_FALSE(iso_check(d, representable(Category::delta, 1, 3)).isomorphic);
  CHECK_THROWS_AS(enumerate_maps(d, representable(Category::delta, 2, 2)), RankError);
}

TEST_CASE("fiber powers") {
  const auto r = reduce(representable(Category::inv_delta, 1, 2));
  for (int n = 1; n <= 3; ++n) {
    std::size_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= r->level_size(1);
    CHECK(fiber_power(*r, n).tuples.size() == expected);
  }
  const auto edge = representable(Category::delta, 1, 2);
  CHECK(fiber_power(*edge, 1).tuples.size() == edge->level_size(1));
  // Edges of Delta[1]: [0,0], [0,1], [1,1]; composable pairs: 00-00, 00-01, 01-11, 11-11.
  CHECK(fiber_power(*edge, 2).tuples.size() == 4);
  CHECK_THROWS_AS(fiber_power(*representable(Category::delta, 1, 0), 2), RankError);
}

TEST_CASE("restriction and dumps") {
  const auto i2 = representable(Category::inv_delta, 2, 2);
  const auto d = restrict_to_delta(i2);
  CHECK(d->category() == Category::delta);
  CHECK(audit_functoriality(*d).pass);
  const auto json = to_json(*representable(Category::delta, 1, 1));
  CHECK(json["levels"][1].size() == 3);
  CHECK(json["generators"][0]["morphism"] == "D[0->1]:1");
  CHECK(json.dump() == to_json(*representable(Category::delta, 1, 1)).dump());
}
