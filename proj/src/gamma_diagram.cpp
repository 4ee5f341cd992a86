#include "segalkit/gamma_diagram.hpp"

#include <algorithm>

#include "segalkit/errors.hpp"

namespace segalkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Position of f in pointed_hom(m, n): the values f(1..m) read as base n+1
// digits, most significant first.
std::size_t map_index(const PointedMap& f) {
  std::size_t index = 0;
  for (int i = 1; i <= f.source_rank(); ++i) index = index * idx(f.target_rank() + 1) + idx(f(i));
  return index;
}

}  // namespace

GammaDiagram::GammaDiagram(int truncation, std::vector<std::vector<std::string>> labels, const ActionFunction& act)
    : truncation_(truncation), labels_(std::move(labels)) {
  if (truncation < 0) throw RankError("truncation must be non-negative");
  if (labels_.size() != idx(truncation) + 1) throw InputError("one label list per level is required");
  maps_.resize(idx(truncation) + 1);
  actions_.resize(idx(truncation) + 1);
  for (int m = 0; m <= truncation; ++m) {
    for (int n = 0; n <= truncation; ++n) {
      maps_[idx(m)].push_back(pointed_hom(m, n));
      std::vector<std::vector<ElementId>> tables;
      for (const auto& f : maps_[idx(m)].back()) {
        std::vector<ElementId> table;
        for (ElementId x = 0; x < labels_[idx(m)].size(); ++x) {
          const ElementId y = act(f, x);
          if (y >= labels_[idx(n)].size()) throw InputError("action of " + to_text(f) + " leaves level " + std::to_string(n));
          table.push_back(y);
        }
        tables.push_back(std::move(table));
      }
      actions_[idx(m)].push_back(std::move(tables));
    }
  }
}

void GammaDiagram::check_level(int n) const {
  if (n < 0 || n > truncation_) {
    throw RankError("level " + std::to_string(n) + " is outside truncation " + std::to_string(truncation_));
  }
}

std::size_t GammaDiagram::level_size(int n) const { return labels(n).size(); }

const std::vector<std::string>& GammaDiagram::labels(int n) const {
  check_level(n);
  return labels_[idx(n)];
}

ElementId GammaDiagram::at(int n, const std::string& label) const {
  const auto& l = labels(n);
  auto it = std::find(l.begin(), l.end(), label);
  if (it == l.end()) throw InputError("no element '" + label + "' at level " + std::to_string(n));
  return static_cast<ElementId>(it - l.begin());
}

const std::vector<PointedMap>& GammaDiagram::maps(int m, int n) const {
  check_level(m);
  check_level(n);
  return maps_[idx(m)][idx(n)];
}

const std::vector<ElementId>& GammaDiagram::action_table(const PointedMap& f) const {
  const auto& all = maps(f.source_rank(), f.target_rank());
  const std::size_t index = map_index(f);
  if (index >= all.size() || all[index] != f) throw InputError("unindexed pointed map " + to_text(f));
  return actions_[idx(f.source_rank())][idx(f.target_rank())][index];
}

AuditReport audit_functoriality(const GammaDiagram& x) {
  AuditReport report;
  auto fail = [&](std::string what) {
    report.pass = false;
    if (report.failures.size() < 8) report.failures.push_back(std::move(what));
  };
  const int top = x.truncation();
  for (int n = 0; n <= top; ++n) {
    const auto& id = x.action_table(PointedMap::identity(n));
    for (ElementId e = 0; e < id.size(); ++e) {
      ++report.checked;
      if (id[e] != e) fail("identity moves " + x.label(n, e));
    }
  }
  for (int l = 0; l <= top; ++l) {
    for (int m = 0; m <= top; ++m) {
      for (int n = 0; n <= top; ++n) {
        for (const auto& g : x.maps(l, m)) {
          const auto& tg = x.action_table(g);
          for (const auto& f : x.maps(m, n)) {
            const auto& tf = x.action_table(f);
            const auto& tfg = x.action_table(compose(f, g));
            for (ElementId e = 0; e < tg.size(); ++e) {
              ++report.checked;
              if (tfg[e] != tf[tg[e]]) fail("X(" + to_text(f) + " o " + to_text(g) + ") differs on " + x.label(l, e));
            }
          }
        }
      }
    }
  }
  return report;
}

nlohmann::json to_json(const GammaDiagram& x) {
  nlohmann::json levels = nlohmann::json::array();
  nlohmann::json actions = nlohmann::json::array();
  for (int n = 0; n <= x.truncation(); ++n) levels.push_back(x.labels(n));
  for (int m = 0; m <= x.truncation(); ++m) {
    for (int n = 0; n <= x.truncation(); ++n) {
      for (const auto& f : x.maps(m, n)) actions.push_back({{"morphism", to_text(f)}, {"table", x.action_table(f)}});
    }
  }
  return {{"category", "gamma_op"}, {"truncation", x.truncation()}, {"levels", levels}, {"maps", actions}};
}

}  // namespace segalkit
