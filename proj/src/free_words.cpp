#include "segalkit/free_words.hpp"

#include <cstdlib>

#include "segalkit/errors.hpp"

namespace segalkit {

FreeWord::FreeWord(std::vector<int> letters) {
  for (int letter : letters) {
    if (letter == 0) throw InputError("0 is not a letter");
    if (!letters_.empty() && letters_.back() == -letter) {
      letters_.pop_back();
    } else {
      letters_.push_back(letter);
    }
  }
}

FreeWord FreeWord::generator(int g, int exponent) {
  return FreeWord(std::vector<int>(static_cast<std::size_t>(std::abs(exponent)), exponent < 0 ? -(g + 1) : g + 1));
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

int FreeWord::exponent_sum(int g) const {
  int sum = 0;
  for (int letter : letters_) {
    if (std::abs(letter) == g + 1) sum += letter > 0 ? 1 : -1;
  }
  return sum;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(letters));
}

std::string generator_name(int g, int generator_count) {
  if (generator_count <= 3) return std::string(1, "xyz"[g]);
  return "x" + std::to_string(g + 1);
}

std::string to_text(const FreeWord& w, int generator_count) {
  if (w.empty()) return "1";
  std::string out;
  const auto& letters = w.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const int power = static_cast<int>(j - i) * (letters[i] > 0 ? 1 : -1);
    out += generator_name(std::abs(letters[i]) - 1, generator_count);
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

std::string bar_text(const std::vector<FreeWord>& entries, int generator_count) {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += "|";
    out += to_text(entries[i], generator_count);
  }
  return out + ")";
}

std::vector<FreeWord> words_up_to(int generator_count, int max_length) {
  std::vector<FreeWord> out{FreeWord()};
  std::size_t frontier = 0;
  for (int length = 1; length <= max_length; ++length) {
    const std::size_t end = out.size();
    for (std::size_t i = frontier; i < end; ++i) {
      for (int g = 0; g < generator_count; ++g) {
        for (int letter : {g + 1, -(g + 1)}) {
          const auto& prefix = out[i].letters();
          if (!prefix.empty() && prefix.back() == -letter) continue;
          std::vector<int> letters = prefix;
          letters.push_back(letter);
          out.emplace_back(std::move(letters));
        }
      }
    }
    frontier = end;
  }
  return out;
}

int evaluate(const FreeWord& w, const FinGroup& group, const std::vector<int>& images) {
  int value = group.identity();
  for (int letter : w.letters()) {
    const int image = images.at(static_cast<std::size_t>(std::abs(letter) - 1));
    value = group.multiply(value, letter > 0 ? image : group.invert(image));
  }
  return value;
}

TheoryHom::TheoryHom(int source_generators, std::vector<FreeWord> words)
    : n_(source_generators), words_(std::move(words)) {
  if (n_ < 0) throw InputError("generator count must be non-negative");
  for (const auto& w : words_) {
    for (int letter : w.letters()) {
      if (std::abs(letter) > n_) {
        throw InputError("word " + to_text(w, std::abs(letter)) + " uses a generator outside 1.." + std::to_string(n_));
      }
    }
  }
}

std::vector<int> TheoryHom::operator()(const FinGroup& group, const std::vector<int>& args) const {
  if (args.size() != static_cast<std::size_t>(n_)) throw InputError("expected " + std::to_string(n_) + " arguments");
  std::vector<int> out;
  for (const auto& w : words_) out.push_back(evaluate(w, group, args));
  return out;
}

TheoryHom theory_hom(int n, int m, std::vector<FreeWord> words) {
  if (words.size() != static_cast<std::size_t>(m)) {
    throw InputError("a map into T_" + std::to_string(m) + " needs " + std::to_string(m) + " words");
  }
  return TheoryHom(n, std::move(words));
}

}  // namespace segalkit
