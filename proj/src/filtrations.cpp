#include "segalkit/filtrations.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "segalkit/errors.hpp"

namespace segalkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

constexpr ElementId absent = static_cast<ElementId>(-1);

void check_stage_args(int k, int truncation, int word_bound) {
  if (k < 0) throw PreconditionError("filtration index must be non-negative");
  if (k > word_bound) {
    throw BoundError("stage " + std::to_string(k) + " exceeds word bound " + std::to_string(word_bound));
  }
  if (truncation < 2) throw PreconditionError("filtrations need truncation at least 2");
}

std::vector<std::vector<bool>> empty_selection(const TruncatedDiagram& d) {
  std::vector<std::vector<bool>> out;
  for (int j = 0; j <= d.truncation(); ++j) out.emplace_back(d.level_size(j), false);
  return out;
}

// Component of f : D -> sub.parent() through the sub-diagram.
DiagramMorphism corestrict(const DiagramMorphism& f, const SubDiagram& sub) {
  DiagramMorphism out{f.source, sub.diagram(), {}};
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    std::vector<ElementId> position(sub.parent()->level_size(static_cast<int>(k)), absent);
    const auto elements = sub.elements(static_cast<int>(k));
    for (ElementId i = 0; i < elements.size(); ++i) position[elements[i]] = i;
    std::vector<ElementId> c;
    for (ElementId y : f.components[k]) {
      if (position[y] == absent) throw PreconditionError("map does not land in the sub-diagram");
      c.push_back(position[y]);
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

FiltrationVariant invertible_variant(int generators) {
  return generators == 1 ? FiltrationVariant::invertible : FiltrationVariant::general_n;
}

FreeNervePtr bounded_nerve(FiltrationVariant variant, int generators, int truncation, int word_bound) {
  if (variant == FiltrationVariant::bousfield) {
    return std::make_shared<const FreeNerve>(nerve_free(1, truncation, word_bound));
  }
  return std::make_shared<const FreeNerve>(inerve_free(generators, truncation, word_bound));
}

// Selection in `wide` transported to `narrow` by word tuple.
std::vector<std::vector<bool>> transport(const FreeNerve& wide, const std::vector<std::vector<bool>>& selected,
                                         const FreeNerve& narrow) {
  auto out = empty_selection(*narrow.diagram);
  for (std::size_t j = 0; j < out.size(); ++j) {
    for (ElementId x = 0; x < out[j].size(); ++x) {
      const auto there = wide.find(narrow.entries[j][x]);
      out[j][x] = there && selected[j][*there];
    }
  }
  return out;
}

std::vector<std::vector<bool>> bousfield_selection(const FreeNerve& wide, int k) {
  if (k == 0) {
    auto sel = empty_selection(*wide.diagram);
    sel[0][0] = true;
    return SubDiagram::closure_of(wide.diagram, sel).selected();
  }
  if (k == 1) {
    const auto x = wide.find({FreeWord::generator(0, 1)});
    return SubDiagram::generated_by(wide.diagram, {{1, *x}}).selected();
  }
  auto sel = bousfield_selection(wide, k - 1);
  for (std::size_t j = 0; j < sel.size(); ++j) {
    for (ElementId x = 0; x < sel[j].size(); ++x) {
      if (bousfield_predicate(k, initial_segment_coordinates(wide.entries[j][x]))) sel[j][x] = true;
    }
  }
  return SubDiagram::closure_of(wide.diagram, std::move(sel)).selected();
}

FiltrationStage finish_stage(FiltrationVariant variant, int k, const FreeNervePtr& nerve,
                             std::vector<std::vector<bool>> selected,
                             const std::function<bool(const std::vector<FreeWord>&)>& raw) {
  FiltrationStage out{variant, k, nerve, SubDiagram(nerve->diagram, std::move(selected)), {}, {}};
  for (int j = 0; j <= nerve->diagram->truncation(); ++j) {
    std::size_t members = 0;
    std::size_t added = 0;
    for (ElementId x = 0; x < nerve->diagram->level_size(j); ++x) {
      const bool r = raw(nerve->entries[idx(j)][x]);
      members += r ? 1 : 0;
      added += out.stage.contains(j, x) && !r ? 1 : 0;
    }
    out.raw_members.push_back(members);
    out.closure_added.push_back(added);
  }
  return out;
}

int total_length(const std::vector<FreeWord>& entries) {
  int total = 0;
  for (const auto& w : entries) total += w.length();
  return total;
}

}  // namespace

std::string variant_name(FiltrationVariant variant) {
  switch (variant) {
    case FiltrationVariant::invertible:
      return "invertible";
    case FiltrationVariant::general_n:
      return "general_n";
    case FiltrationVariant::bousfield:
      return "bousfield";
  }
  return "";
}

std::vector<int> initial_segment_coordinates(const std::vector<FreeWord>& entries) {
  std::vector<int> out;
  int sum = 0;
  for (const auto& w : entries) {
    sum += w.exponent_sum(0);
    out.push_back(sum);
  }
  return out;
}

bool bousfield_predicate(int k, const std::vector<int>& coordinates) {
  int lo = 0;
  int hi = 1;
  if (k == 3) lo = -1;
  if (k >= 4) {
    lo = -k + 1;
    hi = k - 2;
  }
  int total = 0;
  for (int c : coordinates) {
    if (c < lo || c > hi) return false;
    total += std::abs(c);
  }
  return total <= k;
}

FiltrationStage psi_invertible(const FreeNervePtr& nerve, int k) {
  check_stage_args(k, nerve->diagram->truncation(), nerve->word_bound);
  if (nerve->diagram->category() != Category::inv_delta) throw PreconditionError("needs an invertible free nerve");
  auto selected = empty_selection(*nerve->diagram);
  for (std::size_t j = 0; j < selected.size(); ++j) {
    for (ElementId x = 0; x < selected[j].size(); ++x) selected[j][x] = total_length(nerve->entries[j][x]) <= k;
  }
  // Lengths never grow under the actions, so the constructor's closure check passes.
  return finish_stage(invertible_variant(nerve->generator_count), k, nerve, std::move(selected),
                      [k](const std::vector<FreeWord>& e) { return total_length(e) <= k; });
}

FiltrationStage psi_invertible(int generators, int k, int truncation, int word_bound) {
  check_stage_args(k, truncation, word_bound);
  return psi_invertible(bounded_nerve(invertible_variant(generators), generators, truncation, word_bound), k);
}

FiltrationStage psi_bousfield(const FreeNervePtr& nerve, int k) {
  check_stage_args(k, nerve->diagram->truncation(), nerve->word_bound);
  if (nerve->diagram->category() != Category::delta || nerve->generator_count != 1) {
    throw PreconditionError("needs the one-generator free nerve over Delta^op");
  }
  const auto wide = nerve_free(1, nerve->diagram->truncation(), std::max(nerve->word_bound, 2 * k));
  auto selected = transport(wide, bousfield_selection(wide, k), *nerve);
  return finish_stage(FiltrationVariant::bousfield, k, nerve, std::move(selected),
                      [k](const std::vector<FreeWord>& e) {
                        return k == 0 ? e.empty() || total_length(e) == 0
                                      : bousfield_predicate(k, initial_segment_coordinates(e));
                      });
}

FiltrationStage psi_bousfield(int k, int truncation, int word_bound) {
  check_stage_args(k, truncation, word_bound);
  return psi_bousfield(bounded_nerve(FiltrationVariant::bousfield, 1, truncation, word_bound), k);
}

SubDiagram bousfield_raw_closure(const FreeNervePtr& nerve, int k) {
  const auto wide = nerve_free(1, nerve->diagram->truncation(), std::max(nerve->word_bound, 2 * k));
  auto sel = empty_selection(*wide.diagram);
  sel[0][0] = true;
  for (std::size_t j = 0; j < sel.size(); ++j) {
    for (ElementId x = 0; x < sel[j].size(); ++x) {
      if (bousfield_predicate(k, initial_segment_coordinates(wide.entries[j][x]))) sel[j][x] = true;
    }
  }
  const auto closed = SubDiagram::closure_of(wide.diagram, std::move(sel));
  return SubDiagram(nerve->diagram, transport(wide, closed.selected(), *nerve));
}

ChainReport stage_chain_report(FiltrationVariant variant, int k_max, int truncation, int word_bound, int generators) {
  ChainReport report;
  report.variant = variant;
  report.k_max = k_max;
  report.truncation = truncation;
  report.word_bound = word_bound;
  if (k_max > word_bound) throw BoundError("k_max exceeds the word bound");
  const auto nerve = bounded_nerve(variant, generators, truncation, word_bound);
  for (int j = 0; j <= truncation; ++j) report.full.push_back(nerve->diagram->level_size(j));
  report.first_exhausting_stage.assign(idx(truncation) + 1, std::nullopt);
  std::optional<SubDiagram> previous;
  for (int k = 0; k <= k_max; ++k) {
    const auto stage = variant == FiltrationVariant::bousfield ? psi_bousfield(nerve, k) : psi_invertible(nerve, k);
    std::vector<std::size_t> sizes;
    for (int j = 0; j <= truncation; ++j) {
      sizes.push_back(stage.stage.level_size(j));
      if (sizes.back() == report.full[idx(j)] && !report.first_exhausting_stage[idx(j)]) {
        report.first_exhausting_stage[idx(j)] = k;
      }
    }
    report.closed = report.closed && stage.stage.level_size(0) == 1;
    report.sizes.push_back(std::move(sizes));
    if (previous) report.inclusions.push_back(previous->is_subset_of(stage.stage));
    previous = stage.stage;
  }
  if (k_max == word_bound) report.exhausted = report.sizes.back() == report.full;
  report.pass = report.closed && std::all_of(report.inclusions.begin(), report.inclusions.end(), [](bool b) { return b; }) &&
                report.exhausted.value_or(true);
  return report;
}

AttachmentReport attachment_compare(FiltrationVariant variant, int k, int truncation, int word_bound,
                                    AttachmentOptions options) {
  AttachmentReport report;
  report.variant = variant;
  report.k = k;
  report.truncation = truncation;
  report.word_bound = word_bound;
  if (k < 1 || k + 1 > word_bound || k + 1 > truncation) {
    report.fits = false;
    report.note = "cells of rank " + std::to_string(k + 1) + " need 1 <= k, k+1 <= word bound and k+1 <= truncation";
    return report;
  }
  const bool bousfield = variant == FiltrationVariant::bousfield;
  const int generators = bousfield ? 1 : options.generators;
  const auto nerve = bounded_nerve(variant, generators, truncation, word_bound);
  const auto stage = [&](int i) { return bousfield ? psi_bousfield(nerve, i) : psi_invertible(nerve, i); };
  const auto base = stage(k);
  const auto next = stage(k + 1);
  const Category category = bousfield ? Category::delta : Category::inv_delta;
  const DiagramPtr& ambient = nerve->diagram;

  std::vector<DiagramPtr> pieces;
  std::vector<DiagramMorphism> into_cell;
  std::vector<DiagramMorphism> into_base;
  std::vector<DiagramMorphism> characteristic;  // cell -> next
  std::vector<DiagramPtr> cells;

  if (k == 1) {
    const auto sp = spine(bousfield ? SpineKind::H : SpineKind::IG, 2, truncation, true);
    const DiagramPtr cell = sp.parent();
    const auto maps = enumerate_maps(sp.diagram(), base.stage.diagram(), options.max_cells);
    for (const auto& phi : maps) {
      const auto expected = compose(base.stage.inclusion(), phi);
      std::optional<DiagramMorphism> chi;
      for (ElementId s = 0; s < ambient->level_size(2); ++s) {
        auto candidate = classifying_map(cell, 2, ambient, s);
        if (compose(candidate, sp.inclusion()).components == expected.components) {
          chi = std::move(candidate);
          break;
        }
      }
      if (!chi) {
        report.comparison_well_defined = false;
        report.note = "an attaching map has no filling 2-simplex";
        continue;
      }
      pieces.push_back(sp.diagram());
      into_cell.push_back(sp.inclusion());
      into_base.push_back(phi);
      characteristic.push_back(corestrict(*chi, next.stage));
      cells.push_back(cell);
    }
  } else {
    const DiagramPtr cell = reduce(representable(category, k + 1, truncation));
    for (ElementId s = 0; s < ambient->level_size(k + 1) && cells.size() < options.max_cells; ++s) {
      if (!next.stage.contains(k + 1, s) || base.stage.contains(k + 1, s)) continue;
      const auto chi = classifying_map(cell, k + 1, ambient, s);
      auto selected = empty_selection(*cell);
      for (int j = 0; j <= truncation; ++j) {
        for (ElementId y = 0; y < cell->level_size(j); ++y) selected[idx(j)][y] = base.stage.contains(j, chi(j, y));
      }
      const SubDiagram partial(cell, std::move(selected));
      pieces.push_back(partial.diagram());
      into_cell.push_back(partial.inclusion());
      into_base.push_back(corestrict(compose(chi, partial.inclusion()), base.stage));
      characteristic.push_back(corestrict(chi, next.stage));
      cells.push_back(cell);
    }
  }
  report.cell_count = cells.size();

  const auto a = coproduct(pieces, category, truncation);
  const auto b = coproduct(cells, category, truncation);
  const auto p = pushout(coproduct_map(a, b, into_cell), copair(a, into_base, base.stage.diagram()));
  const auto from_cells = copair(b, characteristic, next.stage.diagram());
  const auto from_base = corestrict(base.stage.inclusion(), next.stage);

  report.surjective = true;
  report.isomorphic = true;
  for (int j = 0; j <= truncation; ++j) {
    std::vector<ElementId> h(p.diagram->level_size(j), absent);
    const auto assign = [&](ElementId at, ElementId value) {
      if (h[at] != absent && h[at] != value) report.comparison_well_defined = false;
      h[at] = value;
    };
    for (ElementId y = 0; y < b.diagram->level_size(j); ++y) assign(p.left(j, y), from_cells(j, y));
    for (ElementId y = 0; y < base.stage.level_size(j); ++y) assign(p.right(j, y), from_base(j, y));
    std::vector<bool> hit(next.stage.level_size(j), false);
    for (ElementId v : h) {
      if (v != absent) hit[v] = true;
    }
    AttachmentLevel level;
    level.level = j;
    level.pushout_size = h.size();
    level.target_size = hit.size();
    level.image_size = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
    level.surjective = level.image_size == level.target_size;
    level.injective = level.image_size == level.pushout_size;
    for (ElementId v = 0; v < hit.size() && report.missed.size() < 8; ++v) {
      if (!hit[v]) report.missed.push_back(std::to_string(j) + ":" + next.stage.diagram()->label(j, v));
    }
    report.surjective = report.surjective && level.surjective;
    report.isomorphic = report.isomorphic && level.surjective && level.injective;
    report.levels.push_back(level);
  }
  report.surjective = report.surjective && report.comparison_well_defined;
  report.isomorphic = report.isomorphic && report.comparison_well_defined;
  return report;
}

nlohmann::json to_json(const FiltrationStage& stage) {
  nlohmann::json levels = nlohmann::json::array();
  const auto& d = *stage.stage.diagram();
  for (int j = 0; j <= d.truncation(); ++j) {
    levels.push_back({{"level", j},
                      {"size", d.level_size(j)},
                      {"raw_members", stage.raw_members[idx(j)]},
                      {"closure_added", stage.closure_added[idx(j)]},
                      {"elements", d.labels(j)}});
  }
  return {{"variant", variant_name(stage.variant)},
          {"k", stage.k},
          {"generators", stage.nerve->generator_count},
          {"word_bound", stage.nerve->word_bound},
          {"levels", levels}};
}

nlohmann::json to_json(const ChainReport& report) {
  nlohmann::json exhausting = nlohmann::json::array();
  for (const auto& e : report.first_exhausting_stage) exhausting.push_back(e ? nlohmann::json(*e) : nlohmann::json());
  return {{"variant", variant_name(report.variant)},
          {"k_max", report.k_max},
          {"truncation", report.truncation},
          {"word_bound", report.word_bound},
          {"sizes", report.sizes},
          {"full", report.full},
          {"inclusions", report.inclusions},
          {"closed", report.closed},
          {"exhausted", report.exhausted ? nlohmann::json(*report.exhausted) : nlohmann::json()},
          {"first_exhausting_stage", exhausting},
          {"verdict", report.pass ? "pass" : "fail"}};
}

nlohmann::json to_json(const AttachmentReport& report) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : report.levels) {
    levels.push_back({{"level", l.level},
                      {"pushout", l.pushout_size},
                      {"target", l.target_size},
                      {"image", l.image_size},
                      {"surjective", l.surjective},
                      {"injective", l.injective}});
  }
  nlohmann::json out = {{"variant", variant_name(report.variant)},
                        {"k", report.k},
                        {"truncation", report.truncation},
                        {"word_bound", report.word_bound},
                        {"fits", report.fits},
                        {"cells", report.cell_count},
                        {"well_defined", report.comparison_well_defined},
                        {"levels", levels},
                        {"surjective", report.surjective},
                        {"isomorphic", report.isomorphic},
                        {"missed", report.missed}};
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

}  // namespace segalkit
