#include "segalkit/presheaves.hpp"

#include <algorithm>
#include <numeric>

#include "segalkit/errors.hpp"

namespace segalkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

InvMonotoneMap vertex_map(int k, int i) { return InvMonotoneMap(0, k, {i}, Direction::ascending); }

InvMonotoneMap collapse_map(int k) {
  return InvMonotoneMap(k, 0, std::vector<int>(idx(k) + 1, 0), Direction::ascending);
}

std::string map_label(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

std::string generator_text(Category category, const InvMonotoneMap& g) {
  if (category == Category::delta) return to_text(g.as_monotone());
  return to_text(g);
}

void require_same_shape(const TruncatedDiagram& a, const TruncatedDiagram& b) {
  if (a.category() != b.category()) throw PreconditionError("diagrams live over different categories");
  if (a.truncation() != b.truncation()) {
    throw RankError("diagrams are truncated at different ranks (" + std::to_string(a.truncation()) + " vs " +
                    std::to_string(b.truncation()) + ")");
  }
}

}  // namespace

// ----------------------------------------------------------- TruncatedDiagram

TruncatedDiagram::TruncatedDiagram(Category category, int truncation,
                                   std::vector<std::vector<std::string>> labels, const ActionFunction& act)
    : category_(category), truncation_(truncation), labels_(std::move(labels)) {
  if (truncation < 0) throw RankError("truncation must be non-negative");
  homs_ = hom_table(category, truncation);
  if (labels_.size() != idx(truncation) + 1) throw InputError("one label list per level is required");
  label_index_.resize(labels_.size());
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    for (std::size_t x = 0; x < labels_[k].size(); ++x) {
      if (!label_index_[k].emplace(labels_[k][x], static_cast<ElementId>(x)).second) {
        throw InputError("duplicate label '" + labels_[k][x] + "' at level " + std::to_string(k));
      }
    }
  }
  actions_.resize(idx(truncation) + 1);
  for (int m = 0; m <= truncation; ++m) {
    actions_[idx(m)].resize(idx(truncation) + 1);
    for (int n = 0; n <= truncation; ++n) {
      const auto& hom = homs_->homs(m, n);
      auto& tables = actions_[idx(m)][idx(n)];
      tables.resize(hom.size());
      for (std::size_t i = 0; i < hom.size(); ++i) {
        auto& table = tables[i];
        table.resize(labels_[idx(n)].size());
        for (ElementId x = 0; x < table.size(); ++x) {
          const ElementId y = act(hom[i], x);
          if (y >= labels_[idx(m)].size()) {
            throw InputError("action of " + to_text(hom[i]) + " leaves level " + std::to_string(m));
          }
          table[x] = y;
        }
      }
    }
  }
}

void TruncatedDiagram::check_level(int k) const {
  if (k < 0 || k > truncation_) {
    throw RankError("level " + std::to_string(k) + " is outside truncation " + std::to_string(truncation_));
  }
}

std::size_t TruncatedDiagram::level_size(int k) const {
  check_level(k);
  return labels_[idx(k)].size();
}

const std::vector<std::string>& TruncatedDiagram::labels(int k) const {
  check_level(k);
  return labels_[idx(k)];
}

const std::string& TruncatedDiagram::label(int k, ElementId x) const { return labels(k).at(x); }

std::optional<ElementId> TruncatedDiagram::find(int k, const std::string& label) const {
  check_level(k);
  auto it = label_index_[idx(k)].find(label);
  if (it == label_index_[idx(k)].end()) return std::nullopt;
  return it->second;
}

ElementId TruncatedDiagram::at(int k, const std::string& label) const {
  auto x = find(k, label);
  if (!x) throw InputError("no element '" + label + "' at level " + std::to_string(k));
  return *x;
}

const std::vector<ElementId>& TruncatedDiagram::action_table(const InvMonotoneMap& theta) const {
  check_level(theta.source_rank());
  check_level(theta.target_rank());
  const std::size_t index = homs_->index_of(theta);
  return actions_[idx(theta.source_rank())][idx(theta.target_rank())][index];
}

ElementId TruncatedDiagram::act(const InvMonotoneMap& theta, ElementId x) const {
  return action_table(theta).at(x);
}

ElementId TruncatedDiagram::act_by_generators(const InvMonotoneMap& theta, ElementId x) const {
  // theta = g0 o g1 o ... so theta^* applies g0^* first.
  for (const auto& g : generator_decomposition(theta)) x = act(g, x);
  return x;
}

std::vector<ElementId> TruncatedDiagram::vertices(int k, ElementId x) const {
  std::vector<ElementId> out;
  for (int i = 0; i <= k; ++i) out.push_back(act(vertex_map(k, i), x));
  return out;
}

bool same_structure(const TruncatedDiagram& a, const TruncatedDiagram& b) {
  if (a.category() != b.category() || a.truncation() != b.truncation()) return false;
  for (int k = 0; k <= a.truncation(); ++k) {
    if (a.labels(k) != b.labels(k)) return false;
  }
  for (int m = 0; m <= a.truncation(); ++m) {
    for (int n = 0; n <= a.truncation(); ++n) {
      for (const auto& theta : a.homs().homs(m, n)) {
        if (a.action_table(theta) != b.action_table(theta)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------- audit

AuditReport audit_functoriality(const TruncatedDiagram& d, bool exhaustive_pairs) {
  AuditReport report;
  auto fail = [&](std::string what) {
    report.pass = false;
    if (report.failures.size() < 8) report.failures.push_back(std::move(what));
  };
  const int top = d.truncation();
  const auto& homs = d.homs();
  for (int k = 0; k <= top; ++k) {
    const auto& id = d.action_table(InvMonotoneMap::identity(k));
    for (ElementId x = 0; x < id.size(); ++x) {
      ++report.checked;
      if (id[x] != x) fail("identity moves " + d.label(k, x) + " at level " + std::to_string(k));
    }
  }
  for (int m = 0; m <= top; ++m) {
    for (int n = 0; n <= top; ++n) {
      for (const auto& theta : homs.homs(m, n)) {
        const auto& table = d.action_table(theta);
        std::vector<const std::vector<ElementId>*> factors;
        for (const auto& g : generator_decomposition(theta)) factors.push_back(&d.action_table(g));
        for (ElementId x = 0; x < table.size(); ++x) {
          ++report.checked;
          ElementId routed = x;
          for (const auto* f : factors) routed = (*f)[routed];
          if (table[x] != routed) {
            fail("stored action of " + to_text(theta) + " disagrees with its generator route on " + d.label(n, x));
          }
        }
        auto check_pair = [&](const InvMonotoneMap& g) {
          // (theta o g)^* == g^* o theta^*
          const auto& composite = d.action_table(compose(theta, g));
          const auto& inner = d.action_table(g);
          for (ElementId x = 0; x < table.size(); ++x) {
            ++report.checked;
            if (composite[x] != inner[table[x]]) {
              fail("(" + to_text(theta) + " o " + to_text(g) + ")^* differs on " + d.label(n, x));
            }
          }
        };
        if (exhaustive_pairs) {
          for (int l = 0; l <= top; ++l) {
            for (const auto& g : homs.homs(l, m)) check_pair(g);
          }
        } else {
          for (const auto& g : homs.generators()) {
            if (g.target_rank() == m) check_pair(g);
          }
        }
      }
    }
  }
  return report;
}

// --------------------------------------------------------------- representable

DiagramPtr representable(Category category, int n, int truncation) {
  if (truncation < 0) throw RankError("truncation must be non-negative");
  if (n < 0) throw PreconditionError("representable rank must be non-negative");
  std::vector<std::vector<InvMonotoneMap>> levels;
  std::vector<std::map<InvMonotoneMap, ElementId>> index(idx(truncation) + 1);
  std::vector<std::vector<std::string>> labels;
  for (int k = 0; k <= truncation; ++k) {
    std::vector<InvMonotoneMap> level;
    if (category == Category::delta) {
      for (const auto& f : delta_hom(k, n)) level.push_back(InvMonotoneMap::ascending(f));
    } else if (category == Category::inv_delta) {
      level = inv_delta_hom(k, n);
    } else {
      throw PreconditionError("representables are built over delta or idelta");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < level.size(); ++i) {
      index[idx(k)].emplace(level[i], static_cast<ElementId>(i));
      names.push_back(map_label(level[i].values()));
    }
    levels.push_back(std::move(level));
    labels.push_back(std::move(names));
  }
  return std::make_shared<TruncatedDiagram>(
      category, truncation, std::move(labels), [&](const InvMonotoneMap& theta, ElementId x) {
        const auto& f = levels[idx(theta.target_rank())][x];
        return index[idx(theta.source_rank())].at(compose(f, theta));
      });
}

// ------------------------------------------------------------------ morphisms

DiagramMorphism identity_morphism(const DiagramPtr& d) {
  DiagramMorphism f{d, d, {}};
  for (int k = 0; k <= d->truncation(); ++k) {
    std::vector<ElementId> ids(d->level_size(k));
    std::iota(ids.begin(), ids.end(), ElementId{0});
    f.components.push_back(std::move(ids));
  }
  return f;
}

DiagramMorphism classifying_map(const DiagramPtr& source, int n, const DiagramPtr& target, ElementId x) {
  require_same_shape(*source, *target);
  DiagramMorphism f{source, target, {}};
  for (int k = 0; k <= source->truncation(); ++k) {
    std::vector<ElementId> c;
    for (const auto& label : source->labels(k)) {
      std::vector<int> values(idx(k) + 1, 0);
      if (label != "*") {
        values.clear();
        std::size_t pos = 1;
        while (pos < label.size()) {
          std::size_t used = 0;
          values.push_back(std::stoi(label.substr(pos), &used));
          pos += used + 1;
        }
      }
      c.push_back(target->act(InvMonotoneMap::from_values(k, n, values), x));
    }
    f.components.push_back(std::move(c));
  }
  return f;
}

DiagramMorphism compose(const DiagramMorphism& g, const DiagramMorphism& f) {
  if (f.target.get() != g.source.get() && !same_structure(*f.target, *g.source)) {
    throw CompositionDomainError("diagram morphisms are not composable");
  }
  DiagramMorphism h{f.source, g.target, {}};
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    std::vector<ElementId> c;
    for (ElementId y : f.components[k]) c.push_back(g.components[k][y]);
    h.components.push_back(std::move(c));
  }
  return h;
}

bool is_natural(const DiagramMorphism& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  require_same_shape(s, t);
  for (int k = 0; k <= s.truncation(); ++k) {
    if (f.components[idx(k)].size() != s.level_size(k)) return false;
    for (ElementId y : f.components[idx(k)]) {
      if (y >= t.level_size(k)) return false;
    }
  }
  for (const auto& g : s.homs().generators()) {
    const auto& sg = s.action_table(g);
    const auto& tg = t.action_table(g);
    for (ElementId x = 0; x < sg.size(); ++x) {
      if (f(g.source_rank(), sg[x]) != tg[f(g.target_rank(), x)]) return false;
    }
  }
  return true;
}

bool is_surjective(const DiagramMorphism& f) {
  for (int k = 0; k <= f.target->truncation(); ++k) {
    std::vector<bool> hit(f.target->level_size(k), false);
    for (ElementId y : f.components[idx(k)]) hit[y] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  }
  return true;
}

bool is_injective(const DiagramMorphism& f) {
  for (const auto& c : f.components) {
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }
  return true;
}

// -------------------------------------------------------------------- reduce

Reduction reduce_with_quotient(const DiagramPtr& d) {
  if (d->level_size(0) == 0) throw PreconditionError("reduction is undefined for an empty level 0");
  const int top = d->truncation();
  std::vector<std::vector<ElementId>> to_new(idx(top) + 1);
  std::vector<std::vector<ElementId>> representative(idx(top) + 1);
  std::vector<std::vector<std::string>> labels(idx(top) + 1);
  for (int k = 0; k <= top; ++k) {
    std::vector<bool> degenerate(d->level_size(k), false);
    const auto& collapse = d->action_table(collapse_map(k));
    for (ElementId v = 0; v < d->level_size(0); ++v) degenerate[collapse[v]] = true;
    auto& map = to_new[idx(k)];
    map.assign(d->level_size(k), 0);
    representative[idx(k)].push_back(collapse[0]);
    labels[idx(k)].push_back("*");
    for (ElementId x = 0; x < d->level_size(k); ++x) {
      if (degenerate[x]) continue;
      map[x] = static_cast<ElementId>(representative[idx(k)].size());
      representative[idx(k)].push_back(x);
      labels[idx(k)].push_back(d->label(k, x));
    }
  }
  auto reduced = std::make_shared<TruncatedDiagram>(
      d->category(), top, std::move(labels), [&](const InvMonotoneMap& theta, ElementId y) {
        const ElementId x = representative[idx(theta.target_rank())][y];
        return to_new[idx(theta.source_rank())][d->act(theta, x)];
      });
  return {reduced, DiagramMorphism{d, reduced, std::move(to_new)}};
}

DiagramPtr reduce(const DiagramPtr& d) { return reduce_with_quotient(d).diagram; }

// --------------------------------------------------------------- SubDiagram

SubDiagram::SubDiagram(DiagramPtr parent, std::vector<std::vector<bool>> selected)
    : parent_(std::move(parent)), selected_(std::move(selected)) {
  const int top = parent_->truncation();
  if (selected_.size() != idx(top) + 1) throw InputError("selection needs one mask per level");
  for (int k = 0; k <= top; ++k) {
    if (selected_[idx(k)].size() != parent_->level_size(k)) throw InputError("selection mask has the wrong size");
  }
  for (const auto& g : parent_->homs().generators()) {
    const auto& table = parent_->action_table(g);
    for (ElementId x = 0; x < table.size(); ++x) {
      if (selected_[idx(g.target_rank())][x] && !selected_[idx(g.source_rank())][table[x]]) {
        throw PreconditionError("selection is not closed: " + to_text(g) + " sends " +
                                parent_->label(g.target_rank(), x) + " to " +
                                parent_->label(g.source_rank(), table[x]));
      }
    }
  }
  std::vector<std::vector<ElementId>> to_local(idx(top) + 1);
  std::vector<std::vector<std::string>> labels(idx(top) + 1);
  embedding_.resize(idx(top) + 1);
  for (int k = 0; k <= top; ++k) {
    to_local[idx(k)].assign(parent_->level_size(k), 0);
    for (ElementId x = 0; x < parent_->level_size(k); ++x) {
      if (!selected_[idx(k)][x]) continue;
      to_local[idx(k)][x] = static_cast<ElementId>(embedding_[idx(k)].size());
      embedding_[idx(k)].push_back(x);
      labels[idx(k)].push_back(parent_->label(k, x));
    }
  }
  materialized_ = std::make_shared<TruncatedDiagram>(
      parent_->category(), top, std::move(labels), [&](const InvMonotoneMap& theta, ElementId y) {
        const ElementId x = embedding_[idx(theta.target_rank())][y];
        return to_local[idx(theta.source_rank())][parent_->act(theta, x)];
      });
}

SubDiagram SubDiagram::closure_of(DiagramPtr parent, std::vector<std::vector<bool>> selected) {
  const auto& generators = parent->homs().generators();
  std::vector<std::pair<int, ElementId>> queue;
  for (std::size_t k = 0; k < selected.size(); ++k) {
    for (ElementId x = 0; x < selected[k].size(); ++x) {
      if (selected[k][x]) queue.emplace_back(static_cast<int>(k), x);
    }
  }
  while (!queue.empty()) {
    const auto [k, x] = queue.back();
    queue.pop_back();
    for (const auto& g : generators) {
      if (g.target_rank() != k) continue;
      const ElementId y = parent->act(g, x);
      auto&& slot = selected[idx(g.source_rank())][y];
      if (!slot) {
        slot = true;
        queue.emplace_back(g.source_rank(), y);
      }
    }
  }
  return SubDiagram(std::move(parent), std::move(selected));
}

SubDiagram SubDiagram::generated_by(DiagramPtr parent, const std::vector<std::pair<int, ElementId>>& seeds) {
  std::vector<std::vector<bool>> selected;
  for (int k = 0; k <= parent->truncation(); ++k) selected.emplace_back(parent->level_size(k), false);
  for (const auto& [k, x] : seeds) selected.at(idx(k)).at(x) = true;
  return closure_of(std::move(parent), std::move(selected));
}

bool SubDiagram::contains(int k, ElementId x) const { return selected_.at(idx(k)).at(x); }

std::size_t SubDiagram::level_size(int k) const { return materialized_->level_size(k); }

std::vector<ElementId> SubDiagram::elements(int k) const { return embedding_.at(idx(k)); }

bool SubDiagram::is_subset_of(const SubDiagram& other) const {
  if (selected_.size() != other.selected_.size()) return false;
  for (std::size_t k = 0; k < selected_.size(); ++k) {
    for (std::size_t x = 0; x < selected_[k].size(); ++x) {
      if (selected_[k][x] && !other.selected_[k][x]) return false;
    }
  }
  return true;
}

DiagramMorphism SubDiagram::inclusion() const { return DiagramMorphism{materialized_, parent_, embedding_}; }

SubDiagram spine(SpineKind kind, int n, int truncation, bool reduced) {
  if (n < 2) throw PreconditionError("spines need rank at least 2");
  if (truncation < 1) throw RankError("spines live at level 1; truncation must be at least 1");
  const Category category = kind == SpineKind::IG ? Category::inv_delta : Category::delta;
  DiagramPtr ambient = representable(category, n, truncation);
  if (reduced) ambient = reduce(ambient);
  std::vector<std::pair<int, ElementId>> seeds;
  for (int k = 0; k < n; ++k) {
    const std::vector<int> edge = kind == SpineKind::H ? std::vector<int>{0, k + 1} : std::vector<int>{k, k + 1};
    seeds.emplace_back(1, ambient->at(1, map_label(edge)));
  }
  return SubDiagram::generated_by(ambient, seeds);
}

// -------------------------------------------------------------------- colimits

Coproduct coproduct(const std::vector<DiagramPtr>& parts, Category category, int truncation) {
  for (const auto& p : parts) {
    if (p->category() != category) throw PreconditionError("coproduct summands live over different categories");
    if (p->truncation() != truncation) throw RankError("coproduct summands have different truncations");
  }
  std::vector<std::vector<std::size_t>> offsets(idx(truncation) + 1);
  std::vector<std::vector<std::string>> labels(idx(truncation) + 1);
  for (int k = 0; k <= truncation; ++k) {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      offsets[idx(k)].push_back(offset);
      for (const auto& l : parts[i]->labels(k)) labels[idx(k)].push_back(std::to_string(i) + ":" + l);
      offset += parts[i]->level_size(k);
    }
    offsets[idx(k)].push_back(offset);
  }
  auto locate = [&](int k, ElementId x) {
    const auto& off = offsets[idx(k)];
    const auto it = std::upper_bound(off.begin(), off.end(), static_cast<std::size_t>(x));
    const auto i = static_cast<std::size_t>(it - off.begin()) - 1;
    return std::pair{i, static_cast<ElementId>(x - off[i])};
  };
  auto diagram = std::make_shared<TruncatedDiagram>(
      category, truncation, std::move(labels), [&](const InvMonotoneMap& theta, ElementId x) {
        const auto [i, local] = locate(theta.target_rank(), x);
        return static_cast<ElementId>(offsets[idx(theta.source_rank())][i] + parts[i]->act(theta, local));
      });
  Coproduct out{diagram, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    DiagramMorphism inj{parts[i], diagram, {}};
    for (int k = 0; k <= truncation; ++k) {
      std::vector<ElementId> c(parts[i]->level_size(k));
      std::iota(c.begin(), c.end(), static_cast<ElementId>(offsets[idx(k)][i]));
      inj.components.push_back(std::move(c));
    }
    out.injections.push_back(std::move(inj));
  }
  return out;
}

DiagramMorphism copair(const Coproduct& from, const std::vector<DiagramMorphism>& legs, const DiagramPtr& target) {
  if (legs.size() != from.injections.size()) throw PreconditionError("one leg per summand is required");
  const int top = from.diagram->truncation();
  DiagramMorphism out{from.diagram, target, {}};
  for (int k = 0; k <= top; ++k) {
    std::vector<ElementId> c(from.diagram->level_size(k));
    for (std::size_t i = 0; i < legs.size(); ++i) {
      const auto& inj = from.injections[i].components[idx(k)];
      for (ElementId x = 0; x < inj.size(); ++x) c[inj[x]] = legs[i](k, x);
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

DiagramMorphism coproduct_map(const Coproduct& from, const Coproduct& to, const std::vector<DiagramMorphism>& parts) {
  if (parts.size() != to.injections.size()) throw PreconditionError("one component per summand is required");
  std::vector<DiagramMorphism> legs;
  for (std::size_t i = 0; i < parts.size(); ++i) legs.push_back(compose(to.injections[i], parts[i]));
  return copair(from, legs, to.diagram);
}

Pushout pushout(const DiagramMorphism& f, const DiagramMorphism& g) {
  if (f.source.get() != g.source.get() && !same_structure(*f.source, *g.source)) {
    throw PreconditionError("pushout legs need a shared source");
  }
  const auto& b = *f.target;
  const auto& c = *g.target;
  require_same_shape(b, c);
  const int top = b.truncation();
  std::vector<std::vector<ElementId>> class_of(idx(top) + 1);
  std::vector<std::vector<ElementId>> representative(idx(top) + 1);
  std::vector<std::vector<std::string>> labels(idx(top) + 1);
  for (int k = 0; k <= top; ++k) {
    const std::size_t nb = b.level_size(k);
    const std::size_t total = nb + c.level_size(k);
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (ElementId a = 0; a < f.components[idx(k)].size(); ++a) {
      const std::size_t u = root(f(k, a));
      const std::size_t v = root(nb + g(k, a));
      if (u != v) parent[std::max(u, v)] = std::min(u, v);  // smallest member stays root
    }
    auto& cls = class_of[idx(k)];
    cls.assign(total, 0);
    std::vector<ElementId> root_class(total, 0);
    for (std::size_t x = 0; x < total; ++x) {
      const std::size_t r = root(x);
      if (r == x) {
        root_class[x] = static_cast<ElementId>(representative[idx(k)].size());
        representative[idx(k)].push_back(static_cast<ElementId>(x));
        labels[idx(k)].push_back(x < nb ? "L:" + b.label(k, static_cast<ElementId>(x))
                                       : "R:" + c.label(k, static_cast<ElementId>(x - nb)));
      }
      cls[x] = root_class[r];
    }
  }
  auto diagram = std::make_shared<TruncatedDiagram>(
      b.category(), top, std::move(labels), [&](const InvMonotoneMap& theta, ElementId y) {
        const int n = theta.target_rank();
        const int m = theta.source_rank();
        const ElementId x = representative[idx(n)][y];
        const std::size_t nb = b.level_size(n);
        if (x < nb) return class_of[idx(m)][b.act(theta, x)];
        return class_of[idx(m)][b.level_size(m) + c.act(theta, static_cast<ElementId>(x - nb))];
      });
  Pushout out{diagram, {f.target, diagram, {}}, {g.target, diagram, {}}};
  for (int k = 0; k <= top; ++k) {
    const auto& cls = class_of[idx(k)];
    const std::size_t nb = b.level_size(k);
    out.left.components.emplace_back(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(nb));
    out.right.components.emplace_back(cls.begin() + static_cast<std::ptrdiff_t>(nb), cls.end());
  }
  return out;
}

// ------------------------------------------------------------ map enumeration

namespace {

// Backtracking over natural maps, one element at a time, levels ascending.
// Naturality is imposed generator by generator: faces are checked as soon as
// the element is assigned, degeneracies force values, and flips tie an element
// to its mirror image.
class MapSearch {
 public:
  MapSearch(const DiagramPtr& d1, const DiagramPtr& d2, bool injective, std::size_t max_count)
      : d1_(d1), d2_(d2), injective_(injective), max_count_(max_count) {
    require_same_shape(*d1, *d2);
    top_ = d1->truncation();
    forced_.resize(idx(top_) + 1);
    for (int k = 0; k <= top_; ++k) {
      for (ElementId y = 0; y < d1->level_size(k); ++y) order_.emplace_back(k, y);
      forced_[idx(k)].resize(d1->level_size(k));
    }
    for (const auto& g : d1->homs().generators()) {
      if (g.source_rank() == g.target_rank() + 1) {
        const auto& table = d1->action_table(g);
        for (ElementId x = 0; x < table.size(); ++x) forced_[idx(g.source_rank())][table[x]].push_back({g, x});
      } else if (g.source_rank() + 1 == g.target_rank()) {
        faces_.push_back(g);
      } else if (g.source_rank() == g.target_rank()) {
        flips_.push_back(g);
      }
    }
    // Candidates of level k indexed by the image under the first face of level k.
    first_face_preimages_.resize(idx(top_) + 1);
    for (int k = 1; k <= top_; ++k) {
      const auto& face = first_face(k);
      const auto& table = d2->action_table(face);
      auto& pre = first_face_preimages_[idx(k)];
      pre.resize(d2->level_size(k - 1));
      for (ElementId z = 0; z < table.size(); ++z) pre[table[z]].push_back(z);
    }
    phi_.resize(idx(top_) + 1);
    used_.resize(idx(top_) + 1);
    for (int k = 0; k <= top_; ++k) {
      phi_[idx(k)].assign(d1->level_size(k), kUnset);
      used_[idx(k)].assign(d2->level_size(k), false);
    }
  }

  std::vector<DiagramMorphism> run() {
    search(0);
    return std::move(found_);
  }

 private:
  static constexpr ElementId kUnset = ~ElementId{0};

  const InvMonotoneMap& first_face(int k) const {
    for (const auto& g : faces_) {
      if (g.target_rank() == k) return g;
    }
    throw RankError("no face maps into level " + std::to_string(k));
  }

  bool admissible(int k, ElementId y, ElementId c) const {
    if (injective_ && used_[idx(k)][c]) return false;
    for (const auto& g : faces_) {
      if (g.target_rank() != k) continue;
      if (phi_[idx(k - 1)][d1_->act(g, y)] != d2_->act(g, c)) return false;
    }
    for (const auto& [g, x] : forced_[idx(k)][y]) {
      if (c != d2_->act(g, phi_[idx(k - 1)][x])) return false;
    }
    for (const auto& g : flips_) {
      if (g.target_rank() != k) continue;
      const ElementId mirror = d1_->act(g, y);
      if (mirror == y) {
        if (d2_->act(g, c) != c) return false;
      } else if (phi_[idx(k)][mirror] != kUnset && phi_[idx(k)][mirror] != d2_->act(g, c)) {
        return false;
      }
    }
    return true;
  }

  void search(std::size_t position) {
    if (found_.size() >= max_count_) return;
    if (position == order_.size()) {
      found_.push_back(DiagramMorphism{d1_, d2_, phi_});
      return;
    }
    const auto [k, y] = order_[position];
    auto attempt = [&](ElementId c) {
      if (!admissible(k, y, c)) return;
      phi_[idx(k)][y] = c;
      used_[idx(k)][c] = true;
      search(position + 1);
      phi_[idx(k)][y] = kUnset;
      used_[idx(k)][c] = false;
    };
    if (k == 0) {
      for (ElementId c = 0; c < d2_->level_size(0) && found_.size() < max_count_; ++c) attempt(c);
      return;
    }
    if (!forced_[idx(k)][y].empty()) {
      const auto& [g, x] = forced_[idx(k)][y].front();
      attempt(d2_->act(g, phi_[idx(k - 1)][x]));
      return;
    }
    const ElementId face_image = phi_[idx(k - 1)][d1_->act(first_face(k), y)];
    for (ElementId c : first_face_preimages_[idx(k)][face_image]) {
      if (found_.size() >= max_count_) return;
      attempt(c);
    }
  }

  DiagramPtr d1_;
  DiagramPtr d2_;
  bool injective_;
  std::size_t max_count_;
  int top_ = 0;
  std::vector<std::pair<int, ElementId>> order_;
  std::vector<std::vector<std::vector<std::pair<InvMonotoneMap, ElementId>>>> forced_;
  std::vector<InvMonotoneMap> faces_;
  std::vector<InvMonotoneMap> flips_;
  std::vector<std::vector<std::vector<ElementId>>> first_face_preimages_;
  std::vector<std::vector<ElementId>> phi_;
  std::vector<std::vector<bool>> used_;
  std::vector<DiagramMorphism> found_;
};

}  // namespace

std::vector<DiagramMorphism> enumerate_maps(const DiagramPtr& d1, const DiagramPtr& d2, std::size_t max_count) {
  return MapSearch(d1, d2, false, max_count).run();
}

IsoResult iso_check(const DiagramPtr& d1, const DiagramPtr& d2) {
  require_same_shape(*d1, *d2);
  for (int k = 0; k <= d1->truncation(); ++k) {
    if (d1->level_size(k) != d2->level_size(k)) {
      return {false, std::nullopt,
              "level " + std::to_string(k) + " sizes differ: " + std::to_string(d1->level_size(k)) + " vs " +
                  std::to_string(d2->level_size(k))};
    }
  }
  auto maps = MapSearch(d1, d2, true, 1).run();
  if (maps.empty()) return {false, std::nullopt, "exhaustive search found no levelwise bijective natural map"};
  return {true, std::move(maps.front()), ""};
}

// --------------------------------------------------------------- fiber powers

std::optional<std::size_t> FiberPower::index_of(const std::vector<ElementId>& tuple) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple);
  if (it == tuples.end() || *it != tuple) return std::nullopt;
  return static_cast<std::size_t>(it - tuples.begin());
}

FiberPower fiber_power(const TruncatedDiagram& x, int n) {
  if (n < 1) throw PreconditionError("fiber powers need n >= 1");
  if (x.truncation() < 1) throw RankError("fiber powers need level 1");
  const auto& source = x.action_table(vertex_map(1, 0));
  const auto& target = x.action_table(vertex_map(1, 1));
  const auto edges = static_cast<ElementId>(x.level_size(1));
  FiberPower out;
  out.n = n;
  std::vector<ElementId> tuple;
  std::function<void()> extend = [&]() {
    if (tuple.size() == idx(n)) {
      out.tuples.push_back(tuple);
      return;
    }
    for (ElementId e = 0; e < edges; ++e) {
      if (!tuple.empty() && target[tuple.back()] != source[e]) continue;
      tuple.push_back(e);
      extend();
      tuple.pop_back();
    }
  };
  extend();
  return out;
}

DiagramPtr restrict_to_delta(const DiagramPtr& d) {
  if (d->category() == Category::delta) return d;
  std::vector<std::vector<std::string>> labels;
  for (int k = 0; k <= d->truncation(); ++k) labels.push_back(d->labels(k));
  return std::make_shared<TruncatedDiagram>(Category::delta, d->truncation(), std::move(labels),
                                            [&](const InvMonotoneMap& theta, ElementId x) { return d->act(theta, x); });
}

nlohmann::json to_json(const TruncatedDiagram& d) {
  nlohmann::json levels = nlohmann::json::array();
  for (int k = 0; k <= d.truncation(); ++k) levels.push_back(d.labels(k));
  nlohmann::json actions = nlohmann::json::array();
  for (const auto& g : d.homs().generators()) {
    actions.push_back({{"morphism", generator_text(d.category(), g)}, {"table", d.action_table(g)}});
  }
  return {{"category", category_name(d.category())},
          {"truncation", d.truncation()},
          {"levels", levels},
          {"generators", actions}};
}

}  // namespace segalkit
