#pragma once

// Reduced words in a free group on finitely many generators.

#include <string>
#include <vector>

#include "segalkit/algebra.hpp"

namespace segalkit {

/// Letters are signed generator numbers: +(g+1) for generator g, -(g+1) for
/// its inverse. Always freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the given letters.
  explicit FreeWord(std::vector<int> letters);
  static FreeWord generator(int g, int exponent = 1);

  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  FreeWord inverse() const;
  /// Sum of exponents of generator g.
  int exponent_sum(int g) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

/// x, y, z for up to three generators, x1, x2, ... otherwise.
std::string generator_name(int g, int generator_count);
/// "1" for the empty word, otherwise powers like "x^-1y^2".
std::string to_text(const FreeWord& w, int generator_count);
/// Bar notation "(x|x^-1|x^2)"; "()" for the empty tuple.
std::string bar_text(const std::vector<FreeWord>& entries, int generator_count);

/// Every reduced word of length <= max_length, shortlex order.
std::vector<FreeWord> words_up_to(int generator_count, int max_length);

/// The image of w under the homomorphism F_n -> G sending generator g to images[g].
int evaluate(const FreeWord& w, const FinGroup& group, const std::vector<int>& images);

/// A morphism T_n -> T_m of the theory of groups: m words over n generators.
class TheoryHom {
 public:
  TheoryHom(int source_generators, std::vector<FreeWord> words);

  int source_generators() const { return n_; }
  const std::vector<FreeWord>& words() const { return words_; }
  /// G^n -> G^m by substituting args for the generators.
  std::vector<int> operator()(const FinGroup& group, const std::vector<int>& args) const;

 private:
  int n_;
  std::vector<FreeWord> words_;
};

/// Throws InputError when a word mentions a generator >= n or words.size() != m.
TheoryHom theory_hom(int n, int m, std::vector<FreeWord> words);

}  // namespace segalkit
