#include "segalkit/nerve.hpp"

#include <functional>

#include "segalkit/errors.hpp"

namespace segalkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// A finite category presented by tables; inverse is empty unless every
// morphism is invertible.
struct PathData {
  int object_count = 1;
  std::vector<int> source;
  std::vector<int> target;
  std::function<int(int, int)> then;
  std::vector<int> identities;
  std::vector<int> inverse;
};

std::string path_label(const std::vector<int>& path) {
  std::string out = "(";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += "|";
    out += std::to_string(path[i]);
  }
  return out + ")";
}

DiagramPtr path_nerve(const PathData& data, Category category, int truncation) {
  if (truncation < 0) throw RankError("truncation must be non-negative");
  const int count = static_cast<int>(data.source.size());
  // Level 0 stores objects as one-entry vectors.
  std::vector<std::vector<std::vector<int>>> paths(idx(truncation) + 1);
  std::vector<std::map<std::vector<int>, ElementId>> index(idx(truncation) + 1);
  std::vector<std::vector<std::string>> labels(idx(truncation) + 1);
  for (int o = 0; o < data.object_count; ++o) {
    paths[0].push_back({o});
    labels[0].push_back(data.object_count == 1 ? "()" : "o" + std::to_string(o));
  }
  for (int k = 1; k <= truncation; ++k) {
    std::vector<int> path;
    std::function<void()> extend = [&]() {
      if (path.size() == idx(k)) {
        paths[idx(k)].push_back(path);
        labels[idx(k)].push_back(path_label(path));
        return;
      }
      for (int f = 0; f < count; ++f) {
        if (!path.empty() && data.target[idx(path.back())] != data.source[idx(f)]) continue;
        path.push_back(f);
        extend();
        path.pop_back();
      }
    };
    extend();
  }
  for (int k = 0; k <= truncation; ++k) {
    for (std::size_t x = 0; x < paths[idx(k)].size(); ++x) index[idx(k)].emplace(paths[idx(k)][x], static_cast<ElementId>(x));
  }

  auto vertex_object = [&](int k, const std::vector<int>& p, int v) {
    if (k == 0) return p[0];
    return v == 0 ? data.source[idx(p[0])] : data.target[idx(p[idx(v - 1)])];
  };
  auto window = [&](int k, const std::vector<int>& p, int a, int b) {
    int product = data.identities[idx(vertex_object(k, p, a))];
    if (a < b) {
      for (int i = a + 1; i <= b; ++i) product = data.then(product, p[idx(i - 1)]);
    } else if (a > b) {
      if (data.inverse.empty()) throw PreconditionError("descending windows need inverses");
      for (int i = a; i > b; --i) product = data.then(product, data.inverse[idx(p[idx(i - 1)])]);
    }
    return product;
  };
  return std::make_shared<TruncatedDiagram>(
      category, truncation, std::move(labels), [&](const InvMonotoneMap& theta, ElementId x) {
        const int k = theta.target_rank();
        const int m = theta.source_rank();
        const auto& p = paths[idx(k)][x];
        std::vector<int> result;
        if (m == 0) {
          result.push_back(vertex_object(k, p, theta(0)));
        } else {
          for (int i = 1; i <= m; ++i) result.push_back(window(k, p, theta(i - 1), theta(i)));
        }
        return index[idx(m)].at(result);
      });
}

PathData one_object(const FinMonoid& monoid) {
  PathData data;
  data.source.assign(idx(monoid.order), 0);
  data.target.assign(idx(monoid.order), 0);
  data.then = [&monoid](int a, int b) { return monoid.multiply(a, b); };
  data.identities = {monoid.identity};
  return data;
}

}  // namespace

DiagramPtr nerve(const FinMonoid& monoid, int truncation) {
  auto report = validate(monoid);
  if (!report.pass) throw PreconditionError("not a monoid: " + report.message);
  return path_nerve(one_object(monoid), Category::delta, truncation);
}

DiagramPtr inerve(const FinGroup& group, int truncation) {
  auto report = validate(group);
  if (!report.pass) throw PreconditionError("not a group: " + report.message);
  PathData data = one_object(group.monoid);
  data.inverse = group.inverse;
  return path_nerve(data, Category::inv_delta, truncation);
}

DiagramPtr inerve(const FinGroupoid& groupoid, int truncation) {
  auto report = validate(groupoid);
  if (!report.pass) throw PreconditionError("not a groupoid: " + report.message);
  PathData data;
  data.object_count = groupoid.object_count;
  data.source = groupoid.source;
  data.target = groupoid.target;
  data.then = [&groupoid](int f, int g) { return groupoid.then(f, g); };
  data.identities = groupoid.identities;
  data.inverse = groupoid.inverse;
  return path_nerve(data, Category::inv_delta, truncation);
}

// ----------------------------------------------------------------- free nerves

std::optional<ElementId> FreeNerve::find(const std::vector<FreeWord>& tuple) const {
  if (tuple.size() >= index.size()) return std::nullopt;
  const auto& level = index[tuple.size()];
  auto it = level.find(tuple);
  if (it == level.end()) return std::nullopt;
  return it->second;
}

int FreeNerve::total_length(int level, ElementId x) const {
  int total = 0;
  for (const auto& w : entries.at(idx(level)).at(x)) total += w.length();
  return total;
}

namespace {

FreeNerve free_nerve(Category category, int generators, int truncation, int word_bound) {
  if (generators < 1) throw PreconditionError("free nerves need at least one generator");
  if (word_bound < 1) throw PreconditionError("word bound must be at least 1");
  if (truncation < 0) throw RankError("truncation must be non-negative");
  FreeNerve out;
  out.generator_count = generators;
  out.word_bound = word_bound;
  out.entries.resize(idx(truncation) + 1);
  out.index.resize(idx(truncation) + 1);
  std::vector<std::vector<std::string>> labels(idx(truncation) + 1);
  const auto words = words_up_to(generators, word_bound);
  for (int j = 0; j <= truncation; ++j) {
    std::vector<FreeWord> tuple;
    std::function<void(int)> extend = [&](int budget) {
      if (tuple.size() == idx(j)) {
        out.index[idx(j)].emplace(tuple, static_cast<ElementId>(out.entries[idx(j)].size()));
        out.entries[idx(j)].push_back(tuple);
        labels[idx(j)].push_back(bar_text(tuple, generators));
        return;
      }
      for (const auto& w : words) {
        if (w.length() > budget) break;  // shortlex order
        tuple.push_back(w);
        extend(budget - w.length());
        tuple.pop_back();
      }
    };
    extend(word_bound);
  }
  out.diagram = std::make_shared<TruncatedDiagram>(
      category, truncation, std::move(labels), [&](const InvMonotoneMap& theta, ElementId x) {
        const auto& p = out.entries[idx(theta.target_rank())][x];
        std::vector<FreeWord> result;
        for (int i = 1; i <= theta.source_rank(); ++i) {
          const int a = theta(i - 1);
          const int b = theta(i);
          FreeWord w;
          for (int l = a + 1; l <= b; ++l) w = w * p[idx(l - 1)];
          for (int l = a; l > b; --l) w = w * p[idx(l - 1)].inverse();
          result.push_back(std::move(w));
        }
        auto found = out.index[idx(theta.source_rank())].find(result);
        if (found == out.index[idx(theta.source_rank())].end()) {
          throw BoundError(to_text(theta) + " sends " + bar_text(p, generators) + " to " +
                           bar_text(result, generators) + ", beyond word bound " + std::to_string(word_bound));
        }
        return found->second;
      });
  return out;
}

}  // namespace

FreeNerve nerve_free(int generators, int truncation, int word_bound) {
  return free_nerve(Category::delta, generators, truncation, word_bound);
}

FreeNerve inerve_free(int generators, int truncation, int word_bound) {
  return free_nerve(Category::inv_delta, generators, truncation, word_bound);
}

}  // namespace segalkit
