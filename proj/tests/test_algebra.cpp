#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "segalkit/algebra.hpp"
#include "segalkit/errors.hpp"

using namespace segalkit;

namespace {

using Table = std::vector<std::vector<int>>;

bool brute_associative(const Table& t) {
  const auto n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[static_cast<std::size_t>(t[a][b])][c] != t[a][static_cast<std::size_t>(t[b][c])]) return false;
  return true;
}

// Canonical form of a monoid table with identity 0 under all permutations
// fixing 0: the lexicographically least relabelled table.
Table canonical(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Table best;
  do {
    Table r(t.size(), std::vector<int>(t.size()));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        r[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])] =
            perm[static_cast<std::size_t>(t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])];
    if (best.empty() || r < best) best = r;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

std::size_t brute_monoid_classes(int n) {
  std::set<Table> classes;
  const int free_cells = (n - 1) * (n - 1);
  long total = 1;
  for (int i = 0; i < free_cells; ++i) total *= n;
  for (long code = 0; code < total; ++code) {
    Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) t[0][static_cast<std::size_t>(a)] = t[static_cast<std::size_t>(a)][0] = a;
    long c = code;
    for (int i = 0; i < free_cells; ++i) {
      t[static_cast<std::size_t>(1 + i / (n - 1))][static_cast<std::size_t>(1 + i % (n - 1))] = static_cast<int>(c % n);
      c /= n;
    }
    if (brute_associative(t)) classes.insert(canonical(t));
  }
  return classes.size();
}

}  // namespace

TEST_CASE("validation of small structures") {
  CHECK(validate(cyclic_group(3)).pass);
  CHECK(validate(FinGroup::from_monoid(cyclic_group(3))).pass);

  // A two-element magma that is not associative: a*b = 1 - a.
  FinMonoid magma{"magma", 2, {{1, 1}, {0, 0}}, 0};
  const auto bad = validate(magma);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.witness.empty());

  FinMonoid nonassoc{"nonassoc", 3, {{0, 1, 2}, {1, 2, 0}, {2, 2, 0}}, 0};
  const auto r = validate(nonassoc);
  CHECK_FALSE(r.pass);
  CHECK(r.law == "associativity");
  REQUIRE(r.witness.size() == 3);
  const int a = r.witness[0], b = r.witness[1], c = r.witness[2];
  CHECK(nonassoc.multiply(nonassoc.multiply(a, b), c) != nonassoc.multiply(a, nonassoc.multiply(b, c)));

  CHECK(validate(FinGroupoid::indiscrete(2)).pass);
  CHECK(validate(FinGroupoid::indiscrete(3)).pass);
  CHECK(validate(FinGroupoid::from_group(FinGroup::from_monoid(symmetric_group_s3()))).pass);

  CHECK_THROWS_AS(validate(FinMonoid{"bad", 2, {{0, 1}}, 0}), InputError);
  CHECK_THROWS_AS(validate(FinMonoid{"bad", 2, {{0, 1}, {1, 5}}, 0}), InputError);
  CHECK_THROWS_AS(FinGroup::from_monoid(boolean_multiplicative()), PreconditionError);
}

TEST_CASE("named structures satisfy their laws") {
  for (const auto& m : curated_monoids()) CHECK(validate(m).pass);
  CHECK(symmetric_group_s3().is_group());
  CHECK_FALSE(symmetric_group_s3().is_commutative());
  CHECK_FALSE(full_transformation_monoid_2().is_commutative());
  CHECK_FALSE(full_transformation_monoid_2().is_group());
  CHECK_FALSE(max_monoid(4).is_cancellative());
  CHECK(are_isomorphic(product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
  CHECK_FALSE(are_isomorphic(product(cyclic_group(2), cyclic_group(2)), cyclic_group(4)));
  CHECK(are_isomorphic(boolean_max(), boolean_multiplicative()));
}

TEST_CASE("exhaustive catalog matches brute-force class counts") {
  for (int n = 1; n <= 3; ++n) CHECK(exhaustive_monoids(n).size() == brute_monoid_classes(n));
  CHECK(exhaustive_monoids(3).size() == 7);
  CHECK(exhaustive_monoids(1).front().name == "trivial");
  CHECK_THROWS_AS(exhaustive_monoids(4), CapabilityError);
}

TEST_CASE("catalog filters") {
  const auto groups = catalog(CatalogKind::groups, 3);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].order == 1);
  CHECK(are_isomorphic(groups[1], cyclic_group(2)));
  CHECK(are_isomorphic(groups[2], cyclic_group(3)));

  std::vector<FinMonoid> order2;
  for (auto& m : catalog(CatalogKind::abelian_monoids, 2)) {
    if (m.order == 2) order2.push_back(m);
  }
  REQUIRE(order2.size() == 2);
  CHECK(std::any_of(order2.begin(), order2.end(), [](const auto& m) { return are_isomorphic(m, cyclic_group(2)); }));
  CHECK(std::any_of(order2.begin(), order2.end(), [](const auto& m) { return are_isomorphic(m, boolean_multiplicative()); }));

  const auto ones = catalog(CatalogKind::monoids, 1);
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].order == 1);

  // Finite monoids are groups exactly when cancellative.
  for (const auto& m : catalog(CatalogKind::monoids, 6)) {
    CHECK(validate(m).pass);
    CHECK(m.is_group() == m.is_cancellative());
  }
  const auto all = catalog(CatalogKind::monoids, 6);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(are_isomorphic(all[i], all[j]));
  CHECK_THROWS_AS(catalog(CatalogKind::groups, 7), CapabilityError);
}

TEST_CASE("JSON round trip and malformed input") {
  const auto s3 = symmetric_group_s3();
  const auto back = monoid_from_json(to_json(s3));
  CHECK(back.table == s3.table);
  CHECK(back.name == "S3");
  CHECK(group_from_json(to_json(cyclic_group(4))).inverse == std::vector<int>{0, 3, 2, 1});

  const auto g = FinGroupoid::indiscrete(2);
  const auto gback = groupoid_from_json(to_json(g));
  CHECK(gback.table == g.table);
  CHECK(gback.inverse == g.inverse);

  CHECK_THROWS_AS(monoid_from_json(nlohmann::json::parse(R"({"kind":"monoid","order":2})")), InputError);
  CHECK_THROWS_AS(monoid_from_json(nlohmann::json::parse(R"({"kind":"ring","order":1,"table":[[0]],"identity":0})")),
                  InputError);
  CHECK_THROWS_AS(group_from_json(to_json(boolean_multiplicative())), PreconditionError);
  CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(
                      R"({"kind":"group","order":2,"table":[[1,1],[0,0]],"identity":0})")),
                  InputError);
}
