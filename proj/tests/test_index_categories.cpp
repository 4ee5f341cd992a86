#include "doctest.h"

#include <algorithm>
#include <set>

#include "segalkit/errors.hpp"
#include "segalkit/index_categories.hpp"

using namespace segalkit;

namespace {

using Values = std::vector<int>;

// Every function [m] -> [n] as a value sequence.
std::vector<Values> brute_functions(int m, int n) {
  std::vector<Values> out;
  Values v(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.push_back(v);
    int pos = m;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == n) v[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return out;
    ++v[static_cast<std::size_t>(pos)];
  }
}

std::size_t brute_increasing_count(int m, int n) {
  std::size_t count = 0;
  for (const auto& v : brute_functions(m, n)) count += std::is_sorted(v.begin(), v.end());
  return count;
}

// Composition closure of {order-preserving maps, flips} over plain value
// vectors, computed without the library's morphism types.
std::set<std::tuple<int, int, Values>> brute_closure(int bound) {
  std::set<std::tuple<int, int, Values>> closure;
  for (int m = 0; m <= bound; ++m) {
    for (int n = 0; n <= bound; ++n) {
      for (const auto& v : brute_functions(m, n)) {
        if (std::is_sorted(v.begin(), v.end())) closure.insert({m, n, v});
      }
    }
    Values flip;
    for (int i = 0; i <= m; ++i) flip.push_back(m - i);
    closure.insert({m, m, flip});
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = closure;
    for (const auto& [m1, n1, g] : snapshot) {
      for (const auto& [m2, n2, f] : snapshot) {
        if (m2 != n1) continue;
        Values fg;
        for (int x : g) fg.push_back(f[static_cast<std::size_t>(x)]);
        grew |= closure.insert({m1, n2, fg}).second;
      }
    }
  }
  return closure;
}

std::size_t closure_count(const std::set<std::tuple<int, int, Values>>& closure, int m, int n) {
  return static_cast<std::size_t>(std::count_if(closure.begin(), closure.end(), [&](const auto& t) {
    return std::get<0>(t) == m && std::get<1>(t) == n;
  }));
}

}  // namespace

TEST_CASE("hom-set sizes agree with brute-force enumeration") {
  CHECK(delta_hom(1, 2).size() == 6);
  const auto closure = brute_closure(2);
  CHECK(closure_count(closure, 1, 1) == 4);
  CHECK(closure_count(closure, 2, 1) == 6);
  CHECK(inv_delta_hom(1, 1).size() == closure_count(closure, 1, 1));
  CHECK(inv_delta_hom(2, 1).size() == closure_count(closure, 2, 1));

  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      const auto delta = delta_hom(m, n);
      const auto idelta = inv_delta_hom(m, n);
      CHECK(delta.size() == brute_increasing_count(m, n));
      CHECK(idelta.size() == 2 * delta.size() - static_cast<std::size_t>(n + 1));
      // Duplicate-free and canonical.
      CHECK(std::set<InvMonotoneMap>(idelta.begin(), idelta.end()).size() == idelta.size());
      for (const auto& f : idelta) CHECK(betweenness_check(f.values()));
    }
  }
  // gamma: (m+1)^n, pointed: (n+1)^m
  CHECK(gamma_hom(2, 3).size() == 27);
  CHECK(pointed_hom(3, 2).size() == 27);
  CHECK(gamma_hom(0, 2).size() == 1);
}

TEST_CASE("I-Delta is not a full subcategory of groupoids") {
  const Values witness{0, 2, 1};
  CHECK(betweenness_check(witness));
  const auto hom = inv_delta_hom(2, 2);
  CHECK(std::none_of(hom.begin(), hom.end(), [&](const auto& f) { return f.values() == witness; }));
  const auto closure = brute_closure(2);
  CHECK(closure.count({2, 2, witness}) == 0);
}

TEST_CASE("generated closure equals the monotone maps") {
  const auto r11 = verify_generated_closure(1, 1);
  CHECK(r11.pass);
  CHECK(r11.closure_size[1][1] == 4);
  CHECK(r11.monotone_size[1][1] == 4);
  CHECK(verify_generated_closure(2, 2).pass);
  for (int n = 0; n <= 4; ++n) {
    const auto r = verify_generated_closure(0, n);
    CHECK(r.pass);
    CHECK(r.closure_size[0][static_cast<std::size_t>(n)] == static_cast<std::size_t>(n + 1));
  }
  const auto full = verify_generated_closure(4, 4);
  CHECK(full.pass);
  CHECK(full.discrepancies.empty());
  CHECK_THROWS_AS(verify_generated_closure(5, 1), CapabilityError);
}

TEST_CASE("generator decomposition recomposes") {
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& theta : inv_delta_hom(m, n)) {
        const auto factors = generator_decomposition(theta);
        InvMonotoneMap product = InvMonotoneMap::identity(n);
        for (const auto& g : factors) product = compose(product, g);
        CHECK(product == theta);
      }
    }
  }
}

TEST_CASE("projection families") {
  const auto alpha = alpha_maps(3);
  REQUIRE(alpha.size() == 3);
  CHECK(alpha[0].values() == Values{0, 1});
  CHECK(alpha[1].values() == Values{1, 2});
  CHECK(alpha[2].values() == Values{2, 3});

  const auto gamma = gamma_maps(3);
  CHECK(gamma[0].values() == Values{0, 1});
  CHECK(gamma[1].values() == Values{0, 2});
  CHECK(gamma[2].values() == Values{0, 3});

  const auto j = j_maps(2);
  REQUIRE(j.size() == 2);
  CHECK(j[0].images() == std::vector<Values>{{1}});
  CHECK(j[1].images() == std::vector<Values>{{1, 2}});

  const auto p = projection_maps(3);
  CHECK(p[1].values() == Values{0, 0, 1, 0});
  CHECK(beta_maps(2)[1].values() == Values{1, 2});

  CHECK(projection_family(ProjectionKind::alpha, 4).size() == 4);
  CHECK_THROWS_AS(projection_family(ProjectionKind::p, 0), PreconditionError);
}

TEST_CASE("Segal's functor Delta -> Gamma") {
  for (int n = 1; n <= 4; ++n) {
    const auto alpha = alpha_maps(n);
    const auto gamma = gamma_maps(n);
    for (int k = 0; k < n; ++k) {
      CHECK(delta_to_gamma(alpha[static_cast<std::size_t>(k)]).images() == std::vector<Values>{{k + 1}});
      // gamma^k goes to j^k.
      CHECK(delta_to_gamma(gamma[static_cast<std::size_t>(k)]) == j_maps(n)[static_cast<std::size_t>(k)]);
    }
  }
  CHECK(delta_to_gamma(MonotoneMap::identity(2)).images() == std::vector<Values>{{1}, {2}});

  // Functoriality for all composable pairs of rank <= 3.
  for (int l = 0; l <= 3; ++l) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        for (const auto& f : delta_hom(m, n)) {
          for (const auto& g : delta_hom(l, m)) {
            CHECK(delta_to_gamma(compose(f, g)) == compose(delta_to_gamma(f), delta_to_gamma(g)));
          }
        }
      }
    }
  }
}

TEST_CASE("Gamma / pointed-map dictionary") {
  CHECK(to_pointed(GammaMorphism::identity(2)) == PointedMap::identity(2));
  // p_{n,i} corresponds to the Gamma morphism 1 -> n hitting {i}.
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i) {
      const auto g = to_gamma(projection_maps(n)[static_cast<std::size_t>(i - 1)]);
      CHECK(g.source_size() == 1);
      CHECK(g.image(1) == Values{i});
    }
  }
  // j^1 : 1 -> 2 is the fold 2 -> 1.
  CHECK(to_pointed(j_maps(2)[1]) == PointedMap(2, 1, {0, 1, 1}));

  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& f : gamma_hom(m, n)) CHECK(to_gamma(to_pointed(f)) == f);
      for (const auto& f : pointed_hom(m, n)) CHECK(to_pointed(to_gamma(f)) == f);
    }
  }
}

TEST_CASE("category laws") {
  const auto delta = category_laws(Category::delta, 3);
  CHECK(delta.pass);
  CHECK(delta.checked_triples > 0);
  CHECK(category_laws(Category::inv_delta, 3).pass);
  const auto gamma = category_laws(Category::gamma, 3);
  CHECK(gamma.pass);
  CHECK(gamma.violations.empty());
  CHECK(category_laws(Category::gamma_op, 2).pass);
  CHECK_THROWS_AS(category_laws(Category::gamma, 4), CapabilityError);
}

TEST_CASE("hom table lookup") {
  const auto table = hom_table(Category::inv_delta, 3);
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      const auto& hom = table->homs(m, n);
      for (std::size_t i = 0; i < hom.size(); ++i) CHECK(table->index_of(hom[i]) == i);
    }
  }
  CHECK_THROWS_AS(table->homs(4, 0), RankError);
  const auto delta = hom_table(Category::delta, 2);
  CHECK_FALSE(delta->contains(InvMonotoneMap::flip(2)));
  CHECK(hom_table(Category::delta, 2) == delta);
}
