#include "segalkit/morphisms.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "segalkit/errors.hpp"

namespace segalkit {

namespace {

void check_ranks(int source, int target, std::size_t value_count, const char* what) {
  if (source < 0 || target < 0) {
    throw InvalidMorphismError(std::string(what) + ": negative rank");
  }
  if (value_count != static_cast<std::size_t>(source) + 1) {
    throw InvalidMorphismError(std::string(what) + ": expected " + std::to_string(source + 1) +
                               " values, got " + std::to_string(value_count));
  }
}

void check_range(const std::vector<int>& values, int lo, int hi, const char* what) {
  for (int v : values) {
    if (v < lo || v > hi) {
      throw InvalidMorphismError(std::string(what) + ": value " + std::to_string(v) +
                                 " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }
}

bool all_equal(const std::vector<int>& values) {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

bool is_weakly_increasing(const std::vector<int>& values) {
  return std::is_sorted(values.begin(), values.end());
}

bool is_weakly_decreasing(const std::vector<int>& values) {
  return std::is_sorted(values.rbegin(), values.rend());
}

bool betweenness_check(const std::vector<int>& values) {
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 2; k < n; ++k) {
      if (values[i] != values[k]) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        if (values[j] != values[i]) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- MonotoneMap

MonotoneMap::MonotoneMap(int source_rank, int target_rank, std::vector<int> values)
    : source_rank_(source_rank), target_rank_(target_rank), values_(std::move(values)) {
  check_ranks(source_rank_, target_rank_, values_.size(), "MonotoneMap");
  check_range(values_, 0, target_rank_, "MonotoneMap");
  if (!is_weakly_increasing(values_)) {
    throw InvalidMorphismError("MonotoneMap: values " + join(values_) + " are not weakly increasing");
  }
}

MonotoneMap MonotoneMap::identity(int rank) {
  std::vector<int> values(static_cast<std::size_t>(rank) + 1);
  for (int i = 0; i <= rank; ++i) values[static_cast<std::size_t>(i)] = i;
  return MonotoneMap(rank, rank, std::move(values));
}

MonotoneMap MonotoneMap::coface(int n, int skipped) {
  std::vector<int> values;
  for (int i = 0; i <= n; ++i) {
    if (i != skipped) values.push_back(i);
  }
  return MonotoneMap(n - 1, n, std::move(values));
}

MonotoneMap MonotoneMap::codegeneracy(int n, int repeated) {
  std::vector<int> values;
  for (int i = 0; i <= n; ++i) {
    values.push_back(i);
    if (i == repeated) values.push_back(i);
  }
  return MonotoneMap(n + 1, n, std::move(values));
}

bool MonotoneMap::is_constant() const { return all_equal(values_); }

// ------------------------------------------------------------- InvMonotoneMap

InvMonotoneMap::InvMonotoneMap(int source_rank, int target_rank, std::vector<int> values,
                               Direction direction)
    : source_rank_(source_rank),
      target_rank_(target_rank),
      values_(std::move(values)),
      direction_(direction) {
  check_ranks(source_rank_, target_rank_, values_.size(), "InvMonotoneMap");
  check_range(values_, 0, target_rank_, "InvMonotoneMap");
  if (all_equal(values_) && direction_ != Direction::ascending) {
    throw InvalidMorphismError("InvMonotoneMap: constant maps are canonically ascending");
  }
  const bool ok = direction_ == Direction::ascending ? is_weakly_increasing(values_)
                                                     : is_weakly_decreasing(values_);
  if (!ok) {
    throw InvalidMorphismError("InvMonotoneMap: values " + join(values_) +
                               " are not monotone in the stated direction");
  }
}

InvMonotoneMap InvMonotoneMap::from_values(int source_rank, int target_rank,
                                           std::vector<int> values) {
  if (is_weakly_increasing(values)) {
    return InvMonotoneMap(source_rank, target_rank, std::move(values), Direction::ascending);
  }
  return InvMonotoneMap(source_rank, target_rank, std::move(values), Direction::descending);
}

InvMonotoneMap InvMonotoneMap::identity(int rank) {
  return ascending(MonotoneMap::identity(rank));
}

InvMonotoneMap InvMonotoneMap::flip(int rank) {
  std::vector<int> values(static_cast<std::size_t>(rank) + 1);
  for (int i = 0; i <= rank; ++i) values[static_cast<std::size_t>(i)] = rank - i;
  return from_values(rank, rank, std::move(values));
}

InvMonotoneMap InvMonotoneMap::ascending(const MonotoneMap& map) {
  return InvMonotoneMap(map.source_rank(), map.target_rank(), map.values(), Direction::ascending);
}

bool InvMonotoneMap::is_constant() const { return all_equal(values_); }

MonotoneMap InvMonotoneMap::as_monotone() const {
  if (!is_ascending()) {
    throw InvalidMorphismError("InvMonotoneMap: descending map has no order-preserving form");
  }
  return MonotoneMap(source_rank_, target_rank_, values_);
}

// -------------------------------------------------------------- GammaMorphism

GammaMorphism::GammaMorphism(int source_size, int target_size,
                             std::vector<std::vector<int>> images)
    : source_size_(source_size), target_size_(target_size), images_(std::move(images)) {
  if (source_size_ < 0 || target_size_ < 0) {
    throw InvalidMorphismError("GammaMorphism: negative size");
  }
  if (images_.size() != static_cast<std::size_t>(source_size_)) {
    throw InvalidMorphismError("GammaMorphism: expected one image per source element");
  }
  std::vector<bool> used(static_cast<std::size_t>(target_size_) + 1, false);
  for (auto& image : images_) {
    std::sort(image.begin(), image.end());
    for (std::size_t i = 0; i < image.size(); ++i) {
      const int j = image[i];
      if (j < 1 || j > target_size_) {
        throw InvalidMorphismError("GammaMorphism: image element " + std::to_string(j) +
                                   " outside {1.." + std::to_string(target_size_) + "}");
      }
      if (used[static_cast<std::size_t>(j)]) {
        throw InvalidMorphismError("GammaMorphism: images are not pairwise disjoint (element " +
                                   std::to_string(j) + ")");
      }
      used[static_cast<std::size_t>(j)] = true;
    }
  }
}

GammaMorphism GammaMorphism::identity(int size) {
  std::vector<std::vector<int>> images;
  for (int i = 1; i <= size; ++i) images.push_back({i});
  return GammaMorphism(size, size, std::move(images));
}

// ----------------------------------------------------------------- PointedMap

PointedMap::PointedMap(int source_rank, int target_rank, std::vector<int> values)
    : source_rank_(source_rank), target_rank_(target_rank), values_(std::move(values)) {
  check_ranks(source_rank_, target_rank_, values_.size(), "PointedMap");
  check_range(values_, 0, target_rank_, "PointedMap");
  if (values_[0] != 0) throw InvalidMorphismError("PointedMap: basepoint must map to 0");
}

PointedMap PointedMap::identity(int rank) {
  std::vector<int> values(static_cast<std::size_t>(rank) + 1);
  for (int i = 0; i <= rank; ++i) values[static_cast<std::size_t>(i)] = i;
  return PointedMap(rank, rank, std::move(values));
}

// --------------------------------------------------------------- DecoratedMap

DecoratedMap::DecoratedMap(InvMonotoneMap underlying, std::vector<int> source_objects,
                           std::vector<int> target_objects)
    : underlying_(std::move(underlying)),
      source_objects_(std::move(source_objects)),
      target_objects_(std::move(target_objects)) {
  if (source_objects_.size() != static_cast<std::size_t>(underlying_.source_rank()) + 1 ||
      target_objects_.size() != static_cast<std::size_t>(underlying_.target_rank()) + 1) {
    throw InvalidMorphismError("DecoratedMap: decoration length does not match ranks");
  }
  for (int i = 0; i <= underlying_.source_rank(); ++i) {
    if (source_objects_[static_cast<std::size_t>(i)] !=
        target_objects_[static_cast<std::size_t>(underlying_(i))]) {
      throw InvalidMorphismError("DecoratedMap: object of vertex " + std::to_string(i) +
                                 " is not carried to the object of its image");
    }
  }
}

DecoratedMap DecoratedMap::induced(InvMonotoneMap underlying, std::vector<int> target_objects) {
  std::vector<int> source_objects;
  for (int v : underlying.values()) {
    source_objects.push_back(target_objects.at(static_cast<std::size_t>(v)));
  }
  return DecoratedMap(std::move(underlying), std::move(source_objects), std::move(target_objects));
}

// ---------------------------------------------------------------- composition

namespace {

void require_composable(int f_source, int g_target) {
  if (f_source != g_target) {
    throw CompositionDomainError("cannot compose: inner map has target " + std::to_string(g_target) +
                                 " but outer map has source " + std::to_string(f_source));
  }
}

std::vector<int> compose_values(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out;
  out.reserve(g.size());
  for (int v : g) out.push_back(f[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  require_composable(f.source_rank(), g.target_rank());
  return MonotoneMap(g.source_rank(), f.target_rank(), compose_values(f.values(), g.values()));
}

InvMonotoneMap compose(const InvMonotoneMap& f, const InvMonotoneMap& g) {
  require_composable(f.source_rank(), g.target_rank());
  return InvMonotoneMap::from_values(g.source_rank(), f.target_rank(),
                                     compose_values(f.values(), g.values()));
}

GammaMorphism compose(const GammaMorphism& f, const GammaMorphism& g) {
  require_composable(f.source_size(), g.target_size());
  std::vector<std::vector<int>> images;
  images.reserve(g.images().size());
  for (const auto& middle : g.images()) {
    std::vector<int> image;
    for (int j : middle) {
      const auto& part = f.image(j);
      image.insert(image.end(), part.begin(), part.end());
    }
    images.push_back(std::move(image));
  }
  return GammaMorphism(g.source_size(), f.target_size(), std::move(images));
}

PointedMap compose(const PointedMap& f, const PointedMap& g) {
  require_composable(f.source_rank(), g.target_rank());
  return PointedMap(g.source_rank(), f.target_rank(), compose_values(f.values(), g.values()));
}

DecoratedMap compose(const DecoratedMap& f, const DecoratedMap& g) {
  if (f.source_objects() != g.target_objects()) {
    throw CompositionDomainError("cannot compose decorated maps: object tuples differ");
  }
  return DecoratedMap(compose(f.underlying(), g.underlying()), g.source_objects(),
                      f.target_objects());
}

// ------------------------------------------------------------------ text form

std::string to_text(const MonotoneMap& f) {
  return "D[" + std::to_string(f.source_rank()) + "->" + std::to_string(f.target_rank()) +
         "]:" + join(f.values());
}

std::string to_text(const InvMonotoneMap& f) {
  return "ID[" + std::to_string(f.source_rank()) + "->" + std::to_string(f.target_rank()) +
         "]:" + (f.is_ascending() ? "asc:" : "desc:") + join(f.values());
}

std::string to_text(const GammaMorphism& f) {
  std::string out =
      "G[" + std::to_string(f.source_size()) + "->" + std::to_string(f.target_size()) + "]:";
  for (const auto& image : f.images()) out += "{" + join(image) + "}";
  return out;
}

std::string to_text(const PointedMap& f) {
  return "P[" + std::to_string(f.source_rank()) + "->" + std::to_string(f.target_rank()) +
         "]:" + join(f.values());
}

std::string to_text(const Morphism& f) {
  return std::visit([](const auto& m) { return to_text(m); }, f);
}

namespace {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  int integer() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin == end || *begin < '0' || *begin > '9') fail("expected a natural number");
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc()) fail("number out of range");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::vector<int> integer_list() {
    std::vector<int> values{integer()};
    while (accept(",")) values.push_back(integer());
    return values;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("morphism text '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::pair<int, int> parse_ranks(TextCursor& cur) {
  cur.expect("[");
  const int source = cur.integer();
  cur.expect("->");
  const int target = cur.integer();
  cur.expect("]:");
  return {source, target};
}

}  // namespace

Morphism parse_morphism(std::string_view text) {
  TextCursor cur(text);
  Morphism result = MonotoneMap::identity(0);
  if (cur.accept("ID")) {
    auto [source, target] = parse_ranks(cur);
    Direction direction = Direction::ascending;
    if (cur.accept("desc:")) {
      direction = Direction::descending;
    } else {
      cur.expect("asc:");
    }
    result = InvMonotoneMap(source, target, cur.integer_list(), direction);
  } else if (cur.accept("D")) {
    auto [source, target] = parse_ranks(cur);
    result = MonotoneMap(source, target, cur.integer_list());
  } else if (cur.accept("G")) {
    auto [source, target] = parse_ranks(cur);
    std::vector<std::vector<int>> images;
    while (cur.accept("{")) {
      images.push_back(cur.peek() == '}' ? std::vector<int>{} : cur.integer_list());
      cur.expect("}");
    }
    result = GammaMorphism(source, target, std::move(images));
  } else if (cur.accept("P")) {
    auto [source, target] = parse_ranks(cur);
    result = PointedMap(source, target, cur.integer_list());
  } else {
    cur.fail("unknown morphism kind");
  }
  if (!cur.done()) cur.fail("trailing characters");
  return result;
}

}  // namespace segalkit
