#include "segalkit/segal_conditions.hpp"

#include <functional>
#include <map>

#include "segalkit/errors.hpp"

namespace segalkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

InvMonotoneMap vertex_map(int k, int i) { return InvMonotoneMap(0, k, {i}, Direction::ascending); }

std::vector<std::vector<ElementId>> edge_tuples(const TruncatedDiagram& x, int n,
                                                const std::vector<InvMonotoneMap>& edges) {
  std::vector<const std::vector<ElementId>*> tables;
  for (const auto& e : edges) tables.push_back(&x.action_table(e));
  std::vector<std::vector<ElementId>> out(x.level_size(n));
  for (ElementId s = 0; s < out.size(); ++s) {
    for (const auto* t : tables) out[s].push_back((*t)[s]);
  }
  return out;
}

std::vector<InvMonotoneMap> ascending_all(const std::vector<MonotoneMap>& maps) {
  std::vector<InvMonotoneMap> out;
  for (const auto& f : maps) out.push_back(InvMonotoneMap::ascending(f));
  return out;
}

// Bijectivity of images : source -> target tuples, with a witness on failure.
LevelVerdict compare_level(int level, const std::vector<std::vector<ElementId>>& images,
                           const std::vector<std::vector<ElementId>>& targets, std::optional<ConditionWitness>& witness) {
  LevelVerdict verdict{level, true, images.size(), targets.size()};
  std::map<std::vector<ElementId>, ElementId> seen;
  for (ElementId s = 0; s < images.size(); ++s) {
    auto [it, fresh] = seen.emplace(images[s], s);
    if (!fresh) {
      verdict.pass = false;
      if (!witness) {
        witness = ConditionWitness{ConditionWitness::Kind::collision, level, {it->second, s}, images[s], {}, {}, ""};
      }
      return verdict;
    }
  }
  for (const auto& t : targets) {
    if (!seen.count(t)) {
      verdict.pass = false;
      if (!witness) witness = ConditionWitness{ConditionWitness::Kind::unhit, level, {}, t, {}, {}, ""};
      return verdict;
    }
  }
  return verdict;
}

template <typename Labels>
void label_witness(ConditionWitness& w, const Labels& labels_at) {
  for (ElementId e : w.elements) w.element_labels.push_back(labels_at(w.level, e));
  for (ElementId e : w.tuple) w.tuple_labels.push_back(labels_at(1, e));
}

using MapFunction = std::function<std::vector<std::vector<ElementId>>(const TruncatedDiagram&, int)>;
using TargetFunction = std::function<FiberPower(const TruncatedDiagram&, int)>;

ConditionReport run_check(ConditionKind kind, const TruncatedDiagram& x, int n_max, CheckOptions options,
                          const MapFunction& map, const TargetFunction& targets) {
  if (n_max > x.truncation()) {
    throw RankError("checking up to level " + std::to_string(n_max) + " needs truncation >= " + std::to_string(n_max) +
                    ", have " + std::to_string(x.truncation()));
  }
  ConditionReport report;
  report.condition = kind;
  report.max_level = n_max;
  if (options.require_reduced && x.level_size(0) != 1) {
    report.pass = false;
    ConditionWitness w;
    w.kind = ConditionWitness::Kind::precondition;
    w.note = "level 0 has " + std::to_string(x.level_size(0)) + " elements; a single vertex is required";
    report.witness = w;
    return report;
  }
  for (int n = 2; n <= n_max; ++n) {
    const auto verdict = compare_level(n, map(x, n), targets(x, n).tuples, report.witness);
    report.levels.push_back(verdict);
    report.pass = report.pass && verdict.pass;
  }
  if (report.witness) label_witness(*report.witness, [&](int k, ElementId e) { return x.label(k, e); });
  return report;
}

const char* kind_name(ConditionWitness::Kind kind) {
  switch (kind) {
    case ConditionWitness::Kind::collision:
      return "collision";
    case ConditionWitness::Kind::unhit:
      return "unhit";
    case ConditionWitness::Kind::precondition:
      return "precondition";
  }
  return "";
}

}  // namespace

std::string condition_name(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::segal:
      return "segal";
    case ConditionKind::bousfield:
      return "bousfield";
    case ConditionKind::xi:
      return "xi";
    case ConditionKind::gamma_segal:
      return "gamma_segal";
    case ConditionKind::bousfield_gamma:
      return "bousfield_gamma";
  }
  return "";
}

nlohmann::json to_json(const ConditionReport& report) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : report.levels) {
    levels.push_back({{"level", l.level},
                      {"verdict", l.pass ? "pass" : "fail"},
                      {"source_size", l.source_size},
                      {"target_size", l.target_size}});
  }
  nlohmann::json witness = nullptr;
  if (report.witness) {
    const auto& w = *report.witness;
    witness = {{"kind", kind_name(w.kind)}, {"level", w.level}, {"elements", w.element_labels}, {"tuple", w.tuple_labels}};
    if (!w.note.empty()) witness["note"] = w.note;
  }
  return {{"condition", condition_name(report.condition)},
          {"level", report.max_level},
          {"verdict", report.pass ? "pass" : "fail"},
          {"levels", levels},
          {"witness", witness}};
}

std::vector<std::vector<ElementId>> segal_map(const TruncatedDiagram& x, int n) {
  return edge_tuples(x, n, ascending_all(alpha_maps(n)));
}

std::vector<std::vector<ElementId>> bousfield_segal_map(const TruncatedDiagram& x, int n) {
  return edge_tuples(x, n, ascending_all(gamma_maps(n)));
}

std::vector<std::vector<ElementId>> xi_map(const TruncatedDiagram& x, int n) {
  if (x.category() != Category::inv_delta) throw PreconditionError("xi maps need an I-Delta^op diagram");
  return edge_tuples(x, n, beta_maps(n));
}

FiberPower shared_source_power(const TruncatedDiagram& x, int n) {
  if (n < 1) throw PreconditionError("powers need n >= 1");
  const auto& source = x.action_table(vertex_map(1, 0));
  FiberPower out;
  out.n = n;
  const auto edges = static_cast<ElementId>(x.level_size(1));
  std::vector<ElementId> tuple;
  std::function<void()> extend = [&]() {
    if (tuple.size() == idx(n)) {
      out.tuples.push_back(tuple);
      return;
    }
    for (ElementId e = 0; e < edges; ++e) {
      if (!tuple.empty() && source[tuple.front()] != source[e]) continue;
      tuple.push_back(e);
      extend();
      tuple.pop_back();
    }
  };
  extend();
  return out;
}

ConditionReport strict_segal_check(const TruncatedDiagram& x, int n_max, CheckOptions options) {
  return run_check(ConditionKind::segal, x, n_max, options, segal_map, fiber_power);
}

ConditionReport strict_bousfield_check(const TruncatedDiagram& x, int n_max, CheckOptions options) {
  return run_check(ConditionKind::bousfield, x, n_max, options, bousfield_segal_map, shared_source_power);
}

ConditionReport strict_xi_check(const TruncatedDiagram& x, int n_max, CheckOptions options) {
  if (x.category() != Category::inv_delta) throw PreconditionError("the xi condition needs an I-Delta^op diagram");
  return run_check(ConditionKind::xi, x, n_max, options, xi_map, fiber_power);
}

// ------------------------------------------------------------------- Gamma side

namespace {

std::vector<std::vector<ElementId>> gamma_tuples(const GammaDiagram& x, int n, const std::vector<PointedMap>& maps) {
  std::vector<std::vector<ElementId>> out(x.level_size(n));
  for (const auto& f : maps) {
    const auto& table = x.action_table(f);
    for (ElementId s = 0; s < out.size(); ++s) out[s].push_back(table[s]);
  }
  return out;
}

std::vector<std::vector<ElementId>> full_power(std::size_t base, int n) {
  std::vector<std::vector<ElementId>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<ElementId>> next;
    for (const auto& t : out) {
      for (ElementId e = 0; e < base; ++e) {
        auto u = t;
        u.push_back(e);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

ConditionReport run_gamma_check(ConditionKind kind, const GammaDiagram& x, int n_max, bool survey,
                                const std::function<std::vector<std::vector<ElementId>>(const GammaDiagram&, int)>& map) {
  if (n_max > x.truncation()) {
    throw RankError("checking up to level " + std::to_string(n_max) + " needs truncation >= " + std::to_string(n_max));
  }
  ConditionReport report;
  report.condition = kind;
  report.max_level = n_max;
  if (x.level_size(0) != 1) {
    const std::string note = "X(0) has " + std::to_string(x.level_size(0)) + " elements; strictness needs a point";
    if (!survey) throw PreconditionError(note);
    ConditionWitness w;
    w.kind = ConditionWitness::Kind::precondition;
    w.note = note;
    report.pass = false;
    report.witness = w;
    return report;
  }
  for (int n = 2; n <= n_max; ++n) {
    const auto verdict = compare_level(n, map(x, n), full_power(x.level_size(1), n), report.witness);
    report.levels.push_back(verdict);
    report.pass = report.pass && verdict.pass;
  }
  if (report.witness) label_witness(*report.witness, [&](int k, ElementId e) { return x.label(k, e); });
  return report;
}

}  // namespace

std::vector<std::vector<ElementId>> gamma_segal_map(const GammaDiagram& x, int n) {
  return gamma_tuples(x, n, projection_maps(n));
}

std::vector<std::vector<ElementId>> bousfield_gamma_map(const GammaDiagram& x, int n) {
  std::vector<PointedMap> maps;
  for (const auto& j : j_maps(n)) maps.push_back(to_pointed(j));
  return gamma_tuples(x, n, maps);
}

ConditionReport gamma_segal_check(const GammaDiagram& x, int n_max, bool survey) {
  return run_gamma_check(ConditionKind::gamma_segal, x, n_max, survey, gamma_segal_map);
}

ConditionReport bousfield_gamma_check(const GammaDiagram& x, int n_max, bool survey) {
  return run_gamma_check(ConditionKind::bousfield_gamma, x, n_max, survey, bousfield_gamma_map);
}

}  // namespace segalkit
