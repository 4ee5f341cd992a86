#include "segalkit/index_categories.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

#include "segalkit/errors.hpp"

namespace segalkit {

std::string category_name(Category category) {
  switch (category) {
    case Category::delta: return "delta";
    case Category::inv_delta: return "idelta";
    case Category::gamma: return "gamma";
    case Category::gamma_op: return "gamma_op";
  }
  return "unknown";
}

Category parse_category(const std::string& name) {
  if (name == "delta" || name == "D") return Category::delta;
  if (name == "idelta" || name == "ID") return Category::inv_delta;
  if (name == "gamma" || name == "G") return Category::gamma;
  if (name == "gamma_op" || name == "P") return Category::gamma_op;
  throw InputError("unknown category '" + name + "'");
}

// ----------------------------------------------------------------- hom-sets

namespace {

void require_ranks(int m, int n) {
  if (m < 0 || n < 0) throw InputError("hom-set ranks must be non-negative");
}

// All weakly increasing sequences of length m+1 in [0, n], lexicographic.
std::vector<std::vector<int>> increasing_sequences(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.push_back(current);
    int pos = m;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n) --pos;
    if (pos < 0) break;
    const int next = current[static_cast<std::size_t>(pos)] + 1;
    for (int i = pos; i <= m; ++i) current[static_cast<std::size_t>(i)] = next;
  }
  return out;
}

}  // namespace

std::vector<MonotoneMap> delta_hom(int m, int n) {
  require_ranks(m, n);
  std::vector<MonotoneMap> out;
  for (auto& values : increasing_sequences(m, n)) out.emplace_back(m, n, std::move(values));
  return out;
}

std::vector<InvMonotoneMap> inv_delta_hom(int m, int n) {
  require_ranks(m, n);
  std::vector<InvMonotoneMap> out;
  const auto sequences = increasing_sequences(m, n);
  for (const auto& values : sequences) out.emplace_back(m, n, values, Direction::ascending);
  for (auto values : sequences) {
    std::reverse(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end()) {
      continue;  // constants are already present as ascending maps
    }
    out.emplace_back(m, n, std::move(values), Direction::descending);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointedMap> pointed_hom(int m, int n) {
  require_ranks(m, n);
  std::vector<PointedMap> out;
  std::vector<int> values(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.emplace_back(m, n, values);
    int pos = m;
    while (pos >= 1 && values[static_cast<std::size_t>(pos)] == n) {
      values[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 1) break;
    ++values[static_cast<std::size_t>(pos)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GammaMorphism> gamma_hom(int m, int n) {
  require_ranks(m, n);
  // Each target element j chooses the source element whose image contains it,
  // or none (0).
  std::vector<GammaMorphism> out;
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, 0);
  while (true) {
    std::vector<std::vector<int>> images(static_cast<std::size_t>(m));
    for (int j = 1; j <= n; ++j) {
      const int i = owner[static_cast<std::size_t>(j)];
      if (i > 0) images[static_cast<std::size_t>(i - 1)].push_back(j);
    }
    out.emplace_back(m, n, std::move(images));
    int pos = n;
    while (pos >= 1 && owner[static_cast<std::size_t>(pos)] == m) {
      owner[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 1) break;
    ++owner[static_cast<std::size_t>(pos)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Morphism> enumerate_hom(Category category, int m, int n) {
  std::vector<Morphism> out;
  switch (category) {
    case Category::delta:
      for (auto& f : delta_hom(m, n)) out.emplace_back(std::move(f));
      break;
    case Category::inv_delta:
      for (auto& f : inv_delta_hom(m, n)) out.emplace_back(std::move(f));
      break;
    case Category::gamma:
      for (auto& f : gamma_hom(m, n)) out.emplace_back(std::move(f));
      break;
    case Category::gamma_op:
      for (auto& f : pointed_hom(m, n)) out.emplace_back(std::move(f));
      break;
  }
  return out;
}

// ----------------------------------------------------------------- HomTable

HomTable::HomTable(Category category, int max_rank) : category_(category), max_rank_(max_rank) {
  if (category != Category::delta && category != Category::inv_delta) {
    throw PreconditionError("HomTable is defined for delta and idelta only");
  }
  if (max_rank < 0) throw InputError("HomTable: negative rank");
  const auto size = static_cast<std::size_t>(max_rank) + 1;
  homs_.assign(size, std::vector<std::vector<InvMonotoneMap>>(size));
  ascending_index_.assign(size, std::vector<std::map<std::vector<int>, std::size_t>>(size));
  descending_index_ = ascending_index_;
  for (int m = 0; m <= max_rank; ++m) {
    for (int n = 0; n <= max_rank; ++n) {
      auto& hom = homs_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
      if (category == Category::delta) {
        for (const auto& f : delta_hom(m, n)) hom.push_back(InvMonotoneMap::ascending(f));
      } else {
        hom = inv_delta_hom(m, n);
      }
      for (std::size_t i = 0; i < hom.size(); ++i) {
        auto& index = hom[i].is_ascending()
                          ? ascending_index_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]
                          : descending_index_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
        index.emplace(hom[i].values(), i);
      }
    }
  }
  for (int n = 1; n <= max_rank; ++n) {
    for (int i = 0; i <= n; ++i) generators_.push_back(InvMonotoneMap::ascending(MonotoneMap::coface(n, i)));
  }
  for (int n = 0; n + 1 <= max_rank; ++n) {
    for (int i = 0; i <= n; ++i) {
      generators_.push_back(InvMonotoneMap::ascending(MonotoneMap::codegeneracy(n, i)));
    }
  }
  if (category == Category::inv_delta) {
    for (int n = 1; n <= max_rank; ++n) generators_.push_back(InvMonotoneMap::flip(n));
  }
}

const std::vector<InvMonotoneMap>& HomTable::homs(int m, int n) const {
  if (m < 0 || n < 0 || m > max_rank_ || n > max_rank_) {
    throw RankError("hom-set [" + std::to_string(m) + "," + std::to_string(n) +
                    "] outside truncation " + std::to_string(max_rank_));
  }
  return homs_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

std::optional<std::size_t> HomTable::find(const InvMonotoneMap& f) const {
  const int m = f.source_rank();
  const int n = f.target_rank();
  if (m > max_rank_ || n > max_rank_) return std::nullopt;
  if (!f.is_ascending() && category_ == Category::delta) return std::nullopt;
  const auto& index = f.is_ascending()
                          ? ascending_index_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]
                          : descending_index_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
  auto it = index.find(f.values());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t HomTable::index_of(const InvMonotoneMap& f) const {
  auto found = find(f);
  if (!found) {
    throw RankError("morphism " + to_text(f) + " is not in the " + category_name(category_) +
                    " hom table of rank " + std::to_string(max_rank_));
  }
  return *found;
}

std::shared_ptr<const HomTable> hom_table(Category category, int max_rank) {
  static std::mutex mutex;
  static std::map<std::pair<Category, int>, std::shared_ptr<const HomTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{category, max_rank}];
  if (!slot) slot = std::make_shared<const HomTable>(category, max_rank);
  return slot;
}

std::vector<InvMonotoneMap> generator_decomposition(const InvMonotoneMap& theta) {
  std::vector<InvMonotoneMap> factors;
  std::vector<int> values = theta.values();
  int target = theta.target_rank();
  if (!theta.is_ascending()) {
    factors.push_back(InvMonotoneMap::flip(target));
    for (int& v : values) v = target - v;
  }
  // Peel cofaces off the left while the map misses a value.
  while (true) {
    int missing = -1;
    for (int j = target; j >= 0; --j) {
      if (std::find(values.begin(), values.end(), j) == values.end()) {
        missing = j;
        break;
      }
    }
    if (missing < 0) break;
    factors.push_back(InvMonotoneMap::ascending(MonotoneMap::coface(target, missing)));
    for (int& v : values) {
      if (v > missing) --v;
    }
    --target;
  }
  // Now surjective; peel codegeneracies off the right.
  std::vector<InvMonotoneMap> right;
  while (static_cast<int>(values.size()) - 1 > target) {
    std::size_t i = 0;
    while (values[i] != values[i + 1]) ++i;
    const int source = static_cast<int>(values.size()) - 1;
    right.push_back(InvMonotoneMap::ascending(MonotoneMap::codegeneracy(source - 1, static_cast<int>(i))));
    values.erase(values.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
  factors.insert(factors.end(), right.rbegin(), right.rend());
  return factors;
}

// ----------------------------------------------------------- closure theorem

namespace {

std::vector<std::vector<int>> all_functions(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> values(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.push_back(values);
    int pos = m;
    while (pos >= 0 && values[static_cast<std::size_t>(pos)] == n) {
      values[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++values[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::string values_text(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

ClosureReport verify_generated_closure(int m_max, int n_max, int rank_cap) {
  if (m_max < 0 || n_max < 0) throw InputError("closure bounds must be non-negative");
  if (m_max > rank_cap || n_max > rank_cap) {
    throw CapabilityError("generator closure is capped at rank " + std::to_string(rank_cap));
  }
  const int bound = std::max(m_max, n_max);

  // Generators: every order-preserving map and every flip among ranks <= bound.
  std::vector<InvMonotoneMap> generators;
  for (int m = 0; m <= bound; ++m) {
    for (int n = 0; n <= bound; ++n) {
      for (const auto& f : delta_hom(m, n)) generators.push_back(InvMonotoneMap::ascending(f));
    }
  }
  for (int n = 0; n <= bound; ++n) generators.push_back(InvMonotoneMap::flip(n));

  std::set<InvMonotoneMap> closure(generators.begin(), generators.end());
  std::deque<InvMonotoneMap> queue(closure.begin(), closure.end());
  while (!queue.empty()) {
    const InvMonotoneMap f = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      if (g.source_rank() != f.target_rank()) continue;
      auto composite = compose(g, f);
      if (closure.insert(composite).second) queue.push_back(std::move(composite));
    }
  }

  ClosureReport report;
  report.m_max = m_max;
  report.n_max = n_max;
  report.closure_size.assign(static_cast<std::size_t>(m_max) + 1,
                             std::vector<std::size_t>(static_cast<std::size_t>(n_max) + 1, 0));
  report.monotone_size = report.closure_size;
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      std::set<std::vector<int>> generated;
      for (const auto& f : closure) {
        if (f.source_rank() == m && f.target_rank() == n) generated.insert(f.values());
      }
      std::set<std::vector<int>> monotone;
      for (auto& values : all_functions(m, n)) {
        if (is_weakly_increasing(values) || is_weakly_decreasing(values)) monotone.insert(values);
      }
      report.closure_size[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = generated.size();
      report.monotone_size[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = monotone.size();
      if (generated != monotone) {
        ClosureDiscrepancy d;
        d.m = m;
        d.n = n;
        for (const auto& v : generated) {
          if (!monotone.count(v)) d.only_in_closure.push_back(values_text(v));
        }
        for (const auto& v : monotone) {
          if (!generated.count(v)) d.only_in_monotone.push_back(values_text(v));
        }
        report.discrepancies.push_back(std::move(d));
        report.pass = false;
      }
    }
  }
  return report;
}

// ------------------------------------------------------- projection families

ProjectionKind parse_projection_kind(const std::string& name) {
  if (name == "alpha") return ProjectionKind::alpha;
  if (name == "beta") return ProjectionKind::beta;
  if (name == "gamma") return ProjectionKind::gamma;
  if (name == "p") return ProjectionKind::p;
  if (name == "j") return ProjectionKind::j;
  throw InputError("unknown projection family '" + name + "'");
}

namespace {

void require_family_rank(int n) {
  if (n < 1) throw PreconditionError("projection family of rank " + std::to_string(n) + " is empty");
}

}  // namespace

std::vector<MonotoneMap> alpha_maps(int n) {
  require_family_rank(n);
  std::vector<MonotoneMap> out;
  for (int k = 0; k < n; ++k) out.emplace_back(1, n, std::vector<int>{k, k + 1});
  return out;
}

std::vector<InvMonotoneMap> beta_maps(int n) {
  require_family_rank(n);
  std::vector<InvMonotoneMap> out;
  for (int k = 0; k < n; ++k) out.emplace_back(1, n, std::vector<int>{k, k + 1}, Direction::ascending);
  return out;
}

std::vector<MonotoneMap> gamma_maps(int n) {
  require_family_rank(n);
  std::vector<MonotoneMap> out;
  for (int k = 0; k < n; ++k) out.emplace_back(1, n, std::vector<int>{0, k + 1});
  return out;
}

std::vector<PointedMap> projection_maps(int n) {
  require_family_rank(n);
  std::vector<PointedMap> out;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> values(static_cast<std::size_t>(n) + 1, 0);
    values[static_cast<std::size_t>(i)] = 1;
    out.emplace_back(n, 1, std::move(values));
  }
  return out;
}

std::vector<GammaMorphism> j_maps(int n) {
  require_family_rank(n);
  std::vector<GammaMorphism> out;
  for (int k = 0; k < n; ++k) {
    std::vector<int> image;
    for (int j = 1; j <= k + 1; ++j) image.push_back(j);
    out.emplace_back(1, n, std::vector<std::vector<int>>{std::move(image)});
  }
  return out;
}

std::vector<Morphism> projection_family(ProjectionKind kind, int n) {
  std::vector<Morphism> out;
  auto append = [&out](auto&& family) {
    for (auto& f : family) out.emplace_back(std::move(f));
  };
  switch (kind) {
    case ProjectionKind::alpha: append(alpha_maps(n)); break;
    case ProjectionKind::beta: append(beta_maps(n)); break;
    case ProjectionKind::gamma: append(gamma_maps(n)); break;
    case ProjectionKind::p: append(projection_maps(n)); break;
    case ProjectionKind::j: append(j_maps(n)); break;
  }
  return out;
}

// --------------------------------------------------------- Delta -> Gamma

GammaMorphism delta_to_gamma(const MonotoneMap& f) {
  std::vector<std::vector<int>> images;
  for (int i = 1; i <= f.source_rank(); ++i) {
    std::vector<int> window;
    for (int j = f(i - 1) + 1; j <= f(i); ++j) window.push_back(j);
    images.push_back(std::move(window));
  }
  return GammaMorphism(f.source_rank(), f.target_rank(), std::move(images));
}

PointedMap to_pointed(const GammaMorphism& f) {
  std::vector<int> values(static_cast<std::size_t>(f.target_size()) + 1, 0);
  for (int i = 1; i <= f.source_size(); ++i) {
    for (int j : f.image(i)) values[static_cast<std::size_t>(j)] = i;
  }
  return PointedMap(f.target_size(), f.source_size(), std::move(values));
}

GammaMorphism to_gamma(const PointedMap& f) {
  std::vector<std::vector<int>> images(static_cast<std::size_t>(f.target_rank()));
  for (int j = 1; j <= f.source_rank(); ++j) {
    const int i = f(j);
    if (i > 0) images[static_cast<std::size_t>(i - 1)].push_back(j);
  }
  return GammaMorphism(f.target_rank(), f.source_rank(), std::move(images));
}

// ----------------------------------------------------------- category laws

namespace {

template <typename Map>
struct IndexedCategory {
  int bound = 0;
  std::vector<std::vector<std::vector<Map>>> homs;
  std::vector<std::vector<std::map<Map, std::size_t>>> index;
  // composition[m][n][p][f * |H(m,n)| + g] = index of f o g in H(m,p)
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> composition;

  template <typename HomFn>
  IndexedCategory(int b, HomFn hom_fn) : bound(b) {
    const auto size = static_cast<std::size_t>(b) + 1;
    homs.assign(size, std::vector<std::vector<Map>>(size));
    index.assign(size, std::vector<std::map<Map, std::size_t>>(size));
    for (int m = 0; m <= b; ++m) {
      for (int n = 0; n <= b; ++n) {
        auto& hom = homs[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
        hom = hom_fn(m, n);
        for (std::size_t i = 0; i < hom.size(); ++i) {
          index[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)].emplace(hom[i], i);
        }
      }
    }
  }

  const std::vector<Map>& hom(int m, int n) const {
    return homs[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
  }

  // Returns false with a recorded violation when a composite leaves the hom-set.
  bool build_composition(LawsReport& report) {
    const auto size = static_cast<std::size_t>(bound) + 1;
    composition.assign(size, std::vector<std::vector<std::vector<std::size_t>>>(
                                 size, std::vector<std::vector<std::size_t>>(size)));
    for (int m = 0; m <= bound; ++m) {
      for (int n = 0; n <= bound; ++n) {
        for (int p = 0; p <= bound; ++p) {
          const auto& inner = hom(m, n);
          const auto& outer = hom(n, p);
          const auto& target_index = index[static_cast<std::size_t>(m)][static_cast<std::size_t>(p)];
          auto& table = composition[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]
                                   [static_cast<std::size_t>(p)];
          table.resize(inner.size() * outer.size());
          for (std::size_t f = 0; f < outer.size(); ++f) {
            for (std::size_t g = 0; g < inner.size(); ++g) {
              const Map composite = compose(outer[f], inner[g]);
              auto it = target_index.find(composite);
              if (it == target_index.end()) {
                report.pass = false;
                report.violations.push_back(
                    {"closure", {to_text(outer[f]), to_text(inner[g]), to_text(composite)}});
                return false;
              }
              table[f * inner.size() + g] = it->second;
            }
          }
          report.checked_pairs += inner.size() * outer.size();
        }
      }
    }
    return true;
  }

  std::size_t composite(int m, int n, int p, std::size_t f, std::size_t g) const {
    return composition[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]
                      [static_cast<std::size_t>(p)][f * hom(m, n).size() + g];
  }
};

template <typename Map, typename HomFn, typename IdFn>
void check_laws(LawsReport& report, int bound, HomFn hom_fn, IdFn identity_fn) {
  IndexedCategory<Map> cat(bound, hom_fn);
  if (!cat.build_composition(report)) return;

  // Identity laws.
  for (int m = 0; m <= bound; ++m) {
    for (int n = 0; n <= bound; ++n) {
      const auto& hom = cat.hom(m, n);
      const std::size_t id_m = cat.index[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)].at(identity_fn(m));
      const std::size_t id_n = cat.index[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)].at(identity_fn(n));
      for (std::size_t f = 0; f < hom.size(); ++f) {
        if (cat.composite(m, n, n, id_n, f) != f || cat.composite(m, m, n, f, id_m) != f) {
          report.pass = false;
          report.violations.push_back({"identity", {to_text(hom[f])}});
        }
      }
    }
  }

  // Associativity: h o (g o f) == (h o g) o f for f: a->b, g: b->c, h: c->d.
  for (int a = 0; a <= bound; ++a) {
    for (int b = 0; b <= bound; ++b) {
      for (int c = 0; c <= bound; ++c) {
        for (int d = 0; d <= bound; ++d) {
          const std::size_t nf = cat.hom(a, b).size();
          const std::size_t ng = cat.hom(b, c).size();
          const std::size_t nh = cat.hom(c, d).size();
          for (std::size_t h = 0; h < nh; ++h) {
            for (std::size_t g = 0; g < ng; ++g) {
              const std::size_t hg = cat.composite(b, c, d, h, g);
              for (std::size_t f = 0; f < nf; ++f) {
                const std::size_t left = cat.composite(a, c, d, h, cat.composite(a, b, c, g, f));
                const std::size_t right = cat.composite(a, b, d, hg, f);
                if (left == right) continue;
                report.pass = false;
                if (report.violations.size() < 16) {
                  report.violations.push_back({"associativity",
                                               {to_text(cat.hom(c, d)[h]), to_text(cat.hom(b, c)[g]),
                                                to_text(cat.hom(a, b)[f])}});
                }
              }
            }
          }
          report.checked_triples += nf * ng * nh;
        }
      }
    }
  }
}

}  // namespace

LawsReport category_laws(Category category, int rank_bound) {
  if (rank_bound < 0) throw InputError("rank bound must be non-negative");
  const int cap = category == Category::gamma || category == Category::gamma_op ? 3 : 4;
  if (rank_bound > cap) {
    throw CapabilityError("exhaustive law check for " + category_name(category) +
                          " is capped at rank " + std::to_string(cap));
  }
  LawsReport report;
  report.category = category;
  report.rank_bound = rank_bound;
  switch (category) {
    case Category::delta:
      check_laws<MonotoneMap>(report, rank_bound, delta_hom, MonotoneMap::identity);
      break;
    case Category::inv_delta:
      check_laws<InvMonotoneMap>(report, rank_bound, inv_delta_hom, InvMonotoneMap::identity);
      break;
    case Category::gamma_op:
      check_laws<PointedMap>(report, rank_bound, pointed_hom, PointedMap::identity);
      break;
    case Category::gamma: {
      check_laws<GammaMorphism>(report, rank_bound, gamma_hom, GammaMorphism::identity);
      // Composition must agree with pointed-map composition under the dictionary.
      for (int m = 0; m <= rank_bound; ++m) {
        for (int n = 0; n <= rank_bound; ++n) {
          for (int p = 0; p <= rank_bound; ++p) {
            const auto inner = gamma_hom(m, n);
            const auto outer = gamma_hom(n, p);
            for (const auto& f : outer) {
              for (const auto& g : inner) {
                const PointedMap lhs = to_pointed(compose(f, g));
                const PointedMap rhs = compose(to_pointed(g), to_pointed(f));
                ++report.checked_pairs;
                if (lhs != rhs) {
                  report.pass = false;
                  report.violations.push_back({"dictionary", {to_text(f), to_text(g)}});
                }
              }
            }
          }
        }
      }
      break;
    }
  }
  return report;
}

}  // namespace segalkit
