#include "doctest.h"

#include <cstdlib>

#include "segalkit/errors.hpp"
#include "segalkit/free_words.hpp"

using namespace segalkit;

namespace {

FreeWord x(int e = 1) { return FreeWord::generator(0, e); }
FreeWord y(int e = 1) { return FreeWord::generator(1, e); }

// Letter sequences with no adjacent a, -a, counted directly.
std::size_t reduced_count(int n, int length) {
  std::vector<int> letters;
  for (int g = 1; g <= n; ++g) {
    letters.push_back(g);
    letters.push_back(-g);
  }
  std::size_t count = 0;
  std::vector<int> w(static_cast<std::size_t>(length), 0);
  std::vector<std::size_t> pick(static_cast<std::size_t>(length), 0);
  while (true) {
    bool reduced = true;
    for (int i = 0; i < length; ++i) {
      w[static_cast<std::size_t>(i)] = letters[pick[static_cast<std::size_t>(i)]];
      if (i > 0 && w[static_cast<std::size_t>(i)] == -w[static_cast<std::size_t>(i - 1)]) reduced = false;
    }
    count += reduced ? 1 : 0;
    int pos = length - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 == letters.size()) pick[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
  }
  return count;
}

}  // namespace

TEST_CASE("reduction and arithmetic") {
  CHECK(FreeWord({1, -1}).empty());
  CHECK(FreeWord({1, 2, -2, 1}) == x(2));
  CHECK((x() * y()) * y(-1) == x());
  CHECK((x() * y()).inverse() == y(-1) * x(-1));
  CHECK(x(3).length() == 3);
  CHECK((x(2) * y() * x(-5)).exponent_sum(0) == -3);
  CHECK_THROWS_AS(FreeWord({0}), InputError);
  CHECK(to_text(FreeWord(), 2) == "1");
  CHECK(to_text(x(-1) * y(2), 2) == "x^-1y^2");
  CHECK(bar_text({x(), x(-1), x(2)}, 1) == "(x|x^-1|x^2)");
  CHECK(bar_text({}, 1) == "()");
  CHECK(generator_name(3, 5) == "x4");
}

TEST_CASE("shortlex enumeration matches a direct count") {
  for (int n = 1; n <= 2; ++n) {
    for (int len = 0; len <= 4; ++len) {
      std::size_t expected = 0;
      for (int l = 0; l <= len; ++l) expected += reduced_count(n, l);
      const auto words = words_up_to(n, len);
      CHECK(words.size() == expected);
      for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1].length() <= words[i].length());
    }
  }
}

TEST_CASE("theory morphisms") {
  const auto z2 = FinGroup::from_monoid(cyclic_group(2));
  const auto z3 = FinGroup::from_monoid(cyclic_group(3));
  const auto s3 = FinGroup::from_monoid(symmetric_group_s3());

  const auto first = theory_hom(2, 1, {x()});
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) CHECK(first(z3, {a, b}) == std::vector<int>{a});
  }
  const auto sum = theory_hom(2, 1, {x() * y()});
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) CHECK(sum(z2, {a, b}) == std::vector<int>{(a + b) % 2});
  }
  const auto negate = theory_hom(1, 1, {x(-1)});
  for (int a = 0; a < 3; ++a) CHECK(negate(z3, {a}) == std::vector<int>{(3 - a) % 3});

  CHECK_THROWS_AS(theory_hom(1, 1, {y()}), InputError);
  CHECK_THROWS_AS(theory_hom(2, 2, {x()}), InputError);
  CHECK_THROWS_AS(first(z3, {0}), InputError);

  // Evaluation is a homomorphism.
  const auto words = words_up_to(2, 3);
  for (const auto& u : words) {
    for (const auto& v : words) {
      for (int a = 0; a < 6; ++a) {
        const std::vector<int> images{a, (a + 1) % 6};
        CHECK(evaluate(u * v, s3, images) == s3.multiply(evaluate(u, s3, images), evaluate(v, s3, images)));
      }
    }
  }
}
