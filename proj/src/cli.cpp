#include "segalkit/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "segalkit/errors.hpp"
#include "segalkit/filtrations.hpp"
#include "segalkit/gamma_bridge.hpp"
#include "segalkit/index_categories.hpp"
#include "segalkit/nerve.hpp"
#include "segalkit/segal_conditions.hpp"
#include "segalkit/sweep.hpp"

namespace segalkit::cli {

using nlohmann::json;

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex_digest(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

std::vector<std::string> catalog_names() {
  return {"monoids3", "abelian3", "groups3", "groups6", "abelian6", "curated", "corpus"};
}

std::vector<FinMonoid> load_catalog(const std::string& name) {
  if (name == "monoids3") return catalog(CatalogKind::monoids, 3);
  if (name == "abelian3") return catalog(CatalogKind::abelian_monoids, 3);
  if (name == "groups3") return catalog(CatalogKind::groups, 3);
  if (name == "groups6") return catalog(CatalogKind::groups, 6);
  if (name == "abelian6") return catalog(CatalogKind::abelian_monoids, 6);
  if (name == "curated") return curated_monoids();
  if (name == "corpus") return sweep_corpus();
  std::string known;
  for (const auto& n : catalog_names()) known += " " + n;
  throw InputError("unknown catalog '" + name + "'; known:" + known);
}

namespace {

struct Options {
  std::string input;
  std::string catalog;
  int nmax = 4;
  int trunc = 3;
  int wordbound = 4;
  std::string json_path;
  bool quiet = false;
  bool timings = false;

  // subcommand specific
  std::string category = "all";
  int rank = -1;
  int m = -1;
  int n = -1;
  bool invertible = false;
  bool roundtrip = false;
  bool bousfield = false;
  std::string variant = "invertible";
  int generators = 1;
  int k = -1;
  int kmax = -1;
};

struct Structure {
  std::string kind;  // monoid, group, groupoid
  std::string name;
  std::optional<FinMonoid> monoid;
  std::optional<FinGroupoid> groupoid;
};

struct Suite {
  std::string name;
  json inputs = json::array();
  json checks = json::array();
  bool pass = true;
  std::vector<std::string> lines;

  void add(json check, bool ok, const std::string& line) {
    check["verdict"] = ok ? "pass" : "fail";
    checks.push_back(std::move(check));
    pass = pass && ok;
    lines.push_back(std::string(ok ? "pass  " : "FAIL  ") + line);
  }
};

void check_caps(const Options& o) {
  const auto cap = [](const char* flag, int value, int lo, int hi) {
    if (value < lo || value > hi) {
      throw CapabilityError(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "], got " + std::to_string(value));
    }
  };
  cap("--nmax", o.nmax, 2, kMaxLevel);
  cap("--trunc", o.trunc, 1, kMaxLevel);
  cap("--wordbound", o.wordbound, 1, kMaxWordBound);
}

Structure load_structure(const std::string& path, json& inputs) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  inputs.push_back({{"file", path}, {"digest", hex_digest(fnv1a(text))}});
  Structure s;
  s.kind = doc.is_object() ? doc.value("kind", "") : "";
  if (s.kind == "groupoid") {
    s.groupoid = groupoid_from_json(doc);
    s.name = s.groupoid->name;
  } else {
    s.monoid = monoid_from_json(doc);
    s.name = s.monoid->name;
    if (s.kind == "group" && !s.monoid->is_group()) throw InputError("'" + s.name + "' is declared a group but has no inverses");
  }
  return s;
}

std::vector<Structure> load_structures(const Options& o, json& inputs) {
  if (o.input.empty() == o.catalog.empty()) throw InputError("give exactly one of --input or --catalog");
  if (!o.input.empty()) return {load_structure(o.input, inputs)};
  const auto members = load_catalog(o.catalog);
  json dump = json::array();
  std::vector<Structure> out;
  for (const auto& m : members) {
    dump.push_back(to_json(m));
    out.push_back({m.is_group() ? "group" : "monoid", m.name, m, std::nullopt});
  }
  inputs.push_back({{"catalog", o.catalog + "@" + kCatalogVersion},
                    {"members", members.size()},
                    {"digest", hex_digest(fnv1a(dump.dump()))}});
  return out;
}

json structure_info(const Structure& s) {
  json info = {{"structure", s.name}, {"kind", s.kind}};
  if (s.monoid) info["order"] = s.monoid->order;
  if (s.groupoid) info["objects"] = s.groupoid->object_count;
  return info;
}

// ------------------------------------------------------------------ suites

void suite_laws(const Options& o, Suite& suite) {
  std::vector<Category> categories;
  if (o.category == "all") {
    categories = {Category::delta, Category::inv_delta, Category::gamma, Category::gamma_op};
  } else {
    categories = {parse_category(o.category)};
  }
  for (auto c : categories) {
    const bool gamma = c == Category::gamma || c == Category::gamma_op;
    const int bound = o.rank >= 0 ? o.rank : (gamma ? 3 : 4);
    if (bound > (gamma ? 3 : 5)) throw CapabilityError("law checks are capped at rank " + std::string(gamma ? "3" : "5"));
    const auto report = category_laws(c, bound);
    json violations = json::array();
    for (const auto& v : report.violations) violations.push_back({{"law", v.law}, {"morphisms", v.morphisms}});
    suite.add({{"check", "laws"},
               {"category", category_name(c)},
               {"rank", bound},
               {"pairs", report.checked_pairs},
               {"triples", report.checked_triples},
               {"violations", violations}},
              report.pass, "laws " + category_name(c) + " rank <= " + std::to_string(bound));
  }
  if (o.category == "all" || parse_category(o.category) == Category::inv_delta) {
    const int bound = std::min(o.rank >= 0 ? o.rank : 4, kClosureRankCap);
    const auto closure = verify_generated_closure(bound, bound);
    json discrepancies = json::array();
    for (const auto& d : closure.discrepancies) {
      discrepancies.push_back(
          {{"m", d.m}, {"n", d.n}, {"only_in_closure", d.only_in_closure}, {"only_in_monotone", d.only_in_monotone}});
    }
    suite.add({{"check", "generator_closure"}, {"rank", bound}, {"discrepancies", discrepancies}}, closure.pass,
              "closure of order-preserving maps and flips, ranks <= " + std::to_string(bound));
    const std::vector<int> witness{0, 2, 1};
    bool present = false;
    for (const auto& f : inv_delta_hom(2, 2)) present = present || f.values() == witness;
    const bool ok = betweenness_check(witness) && !present;
    suite.add({{"check", "betweenness_witness"}, {"values", witness}, {"preserves_betweenness", betweenness_check(witness)},
               {"in_hom", present}},
              ok, "betweenness-preserving 0,2,1 is not a morphism");
  }
}

void suite_hom(const Options& o, Suite& suite) {
  const Category c = parse_category(o.category == "all" ? "delta" : o.category);
  if (o.m >= 0 && o.n >= 0) {
    if (o.m > kMaxLevel || o.n > kMaxLevel) throw CapabilityError("hom listing is capped at rank 6");
    json listing = json::array();
    for (const auto& f : enumerate_hom(c, o.m, o.n)) listing.push_back(to_text(f));
    suite.add({{"check", "hom"}, {"category", category_name(c)}, {"m", o.m}, {"n", o.n}, {"count", listing.size()},
               {"morphisms", listing}},
              true, "hom " + category_name(c) + "(" + std::to_string(o.m) + "," + std::to_string(o.n) +
                        ") has " + std::to_string(listing.size()) + " maps");
    return;
  }
  json table = json::array();
  for (int m = 0; m <= o.nmax; ++m) {
    json row = json::array();
    for (int n = 0; n <= o.nmax; ++n) row.push_back(enumerate_hom(c, m, n).size());
    table.push_back(row);
  }
  suite.add({{"check", "hom_counts"}, {"category", category_name(c)}, {"rank", o.nmax}, {"counts", table}}, true,
            "hom counts for " + category_name(c) + " up to rank " + std::to_string(o.nmax));
}

DiagramPtr build_nerve(const Structure& s, int truncation, bool invertible) {
  if (s.groupoid) return inerve(*s.groupoid, truncation);
  if (invertible) {
    if (!s.monoid->is_group()) throw PreconditionError("'" + s.name + "' has no inverses");
    return inerve(FinGroup::from_monoid(*s.monoid), truncation);
  }
  return nerve(*s.monoid, truncation);
}

void suite_nerve(const Options& o, Suite& suite) {
  for (const auto& s : load_structures(o, suite.inputs)) {
    if (o.invertible && s.monoid && !s.monoid->is_group()) {
      auto info = structure_info(s);
      info["skipped"] = "not a group";
      suite.checks.push_back(info);
      continue;
    }
    const auto d = build_nerve(s, o.trunc, o.invertible || s.groupoid.has_value());
    const auto audit = audit_functoriality(*d);
    auto info = structure_info(s);
    info["check"] = "nerve";
    json sizes = json::array();
    for (int k = 0; k <= d->truncation(); ++k) sizes.push_back(d->level_size(k));
    info["level_sizes"] = sizes;
    info["functorial"] = audit.pass;
    if (!o.input.empty()) info["diagram"] = to_json(*d);
    suite.add(info, audit.pass, "nerve of " + s.name + " to level " + std::to_string(o.trunc));
  }
}

void suite_condition(const Options& o, Suite& suite, ConditionKind kind) {
  const bool catalog_mode = !o.catalog.empty();
  for (const auto& s : load_structures(o, suite.inputs)) {
    auto info = structure_info(s);
    const bool group = s.groupoid.has_value() || s.monoid->is_group();
    if (kind == ConditionKind::xi && !group) {
      if (!catalog_mode) throw PreconditionError("the xi condition needs a group or groupoid; '" + s.name + "' is neither");
      info["skipped"] = "not a group";
      suite.checks.push_back(info);
      continue;
    }
    DiagramPtr d = build_nerve(s, o.nmax, kind == ConditionKind::xi);
    if (kind != ConditionKind::xi && s.groupoid) d = restrict_to_delta(d);
    ConditionReport report;
    if (kind == ConditionKind::segal) report = strict_segal_check(*d, o.nmax);
    if (kind == ConditionKind::bousfield) report = strict_bousfield_check(*d, o.nmax);
    if (kind == ConditionKind::xi) report = strict_xi_check(*d, o.nmax);
    info["check"] = condition_name(kind);
    info["report"] = to_json(report);
    info["is_group"] = group;
    bool ok = report.pass;
    std::string line = condition_name(kind) + " on " + s.name + ": " + (report.pass ? "holds" : "fails");
    if (catalog_mode && kind == ConditionKind::bousfield) {
      // Over a catalog the claim is: the condition holds exactly for groups.
      ok = report.pass == group;
      info["claim"] = "holds iff group";
      line += group ? " (group)" : " (not a group)";
    }
    suite.add(info, ok, line);
  }
}

void suite_gamma(const Options& o, Suite& suite) {
  const bool catalog_mode = !o.catalog.empty();
  const int truncation = std::max(o.trunc, 2);
  for (const auto& s : load_structures(o, suite.inputs)) {
    auto info = structure_info(s);
    if (!s.monoid) throw PreconditionError("t needs a commutative monoid, not a groupoid");
    if (!s.monoid->is_commutative() && catalog_mode) {
      info["skipped"] = "not commutative";
      suite.checks.push_back(info);
      continue;
    }
    const auto x = t_construct(*s.monoid, truncation);
    info["check"] = "gamma";
    info["truncation"] = truncation;
    const auto audit = audit_functoriality(x);
    const auto segal = gamma_segal_check(x, truncation);
    const auto extraction = extract_monoid(x);
    const bool iso = extraction.monoid && are_isomorphic(*extraction.monoid, *s.monoid);
    info["functorial"] = audit.pass;
    info["segal"] = to_json(segal);
    info["extraction_isomorphic"] = iso;
    if (!extraction.refusal.empty()) info["refusal"] = extraction.refusal;
    bool ok = audit.pass && segal.pass && iso;
    if (o.roundtrip) {
      const auto round = roundtrip_check(x);
      info["roundtrip"] = round.pass;
      if (!round.reason.empty()) info["roundtrip_reason"] = round.reason;
      ok = ok && round.pass;
    }
    if (o.bousfield) {
      const bool group = s.monoid->is_group();
      const auto g = bousfield_group_extract(x);
      info["bousfield"] = to_json(g.bousfield);
      info["is_group"] = group;
      bool inverses = !group;
      if (g.group && group) {
        const auto map = find_isomorphism(g.group->monoid, *s.monoid);
        const auto inv = s.monoid->inverses();
        inverses = map.has_value();
        for (int e = 0; inverses && e < s.monoid->order; ++e) {
          inverses = (*map)[static_cast<std::size_t>(g.group->invert(e))] ==
                     (*inv)[static_cast<std::size_t>((*map)[static_cast<std::size_t>(e)])];
        }
        info["inverses"] = g.group->inverse;
      }
      ok = ok && g.bousfield.pass == group && g.group.has_value() == group && inverses;
    }
    suite.add(info, ok, "t(" + s.name + ") to rank " + std::to_string(truncation));
  }
}

void suite_filtration(const Options& o, Suite& suite) {
  FiltrationVariant variant;
  if (o.variant == "invertible") {
    variant = o.generators == 1 ? FiltrationVariant::invertible : FiltrationVariant::general_n;
  } else if (o.variant == "bousfield") {
    variant = FiltrationVariant::bousfield;
  } else {
    throw InputError("--variant must be 'invertible' or 'bousfield'");
  }
  if (o.generators < 1 || o.generators > 3) throw CapabilityError("--generators must lie in [1, 3]");
  if (o.generators > 1 && o.wordbound > 3) throw CapabilityError("several generators are capped at word bound 3");
  const int truncation = std::max(o.trunc, 2);
  if (o.k >= 0) {
    const auto stage = variant == FiltrationVariant::bousfield ? psi_bousfield(o.k, truncation, o.wordbound)
                                                               : psi_invertible(o.generators, o.k, truncation, o.wordbound);
    auto dump = to_json(stage);
    dump["check"] = "stage";
    suite.add(dump, stage.stage.level_size(0) == 1, "stage " + std::to_string(o.k) + " dump");
  }
  const int kmax = o.kmax >= 0 ? o.kmax : o.wordbound;
  const auto chain = stage_chain_report(variant, kmax, truncation, o.wordbound, o.generators);
  auto c = to_json(chain);
  c["check"] = "chain";
  suite.add(c, chain.pass, "stage chain up to k = " + std::to_string(kmax));
  for (int k = 1; k + 1 <= std::min(truncation, o.wordbound); ++k) {
    const auto report = attachment_compare(variant, k, truncation, o.wordbound, {o.generators, SIZE_MAX});
    auto a = to_json(report);
    a["check"] = "attachment";
    suite.add(a, report.surjective, "attachment at k = " + std::to_string(k) + ": " + std::to_string(report.cell_count) +
                                        " cells" + (report.missed.empty() ? "" : ", misses " + report.missed.front()));
  }
}

void suite_sweep(Suite& suite) {
  for (const auto& r : run_sweep()) {
    suite.add(to_json(r), r.pass, "AC" + std::to_string(r.id) + " " + r.name + ": " + r.detail);
  }
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "structure file (JSON)");
  sub->add_option("--catalog", o.catalog, "bundled catalog name");
  sub->add_option("--nmax", o.nmax, "highest level for condition checks");
  sub->add_option("--trunc", o.trunc, "truncation rank");
  sub->add_option("--wordbound", o.wordbound, "total word length bound");
  sub->add_option("--json", o.json_path, "write the JSON report here ('-' for standard output)");
  sub->add_flag("--quiet", o.quiet, "no summary lines");
  sub->add_flag("--timings", o.timings, "record wall-clock time per suite");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Segal-type conditions on finite nerves and Gamma-spaces", "segalkit"};
  app.require_subcommand(1);
  Options o;

  std::vector<std::pair<std::string, CLI::App*>> subs;
  const auto add = [&](const std::string& name, const std::string& description) {
    auto* sub = app.add_subcommand(name, description);
    add_common(sub, o);
    subs.emplace_back(name, sub);
    return sub;
  };
  auto* laws = add("laws", "category laws and generator closure");
  laws->add_option("--category", o.category, "delta, idelta, gamma, gamma_op or all");
  laws->add_option("--rank", o.rank, "rank bound");
  auto* hom = add("hom", "hom-set enumeration and counts");
  hom->add_option("--category", o.category, "delta, idelta, gamma or gamma_op");
  hom->add_option("--m", o.m, "source rank");
  hom->add_option("--n", o.n, "target rank");
  auto* nerve_cmd = add("nerve", "build and dump nerves");
  nerve_cmd->add_flag("--invertible", o.invertible, "nerve over I-Delta^op");
  add("segal", "strict Segal condition");
  add("bousfield", "strict Bousfield-Segal condition");
  add("xi", "strict xi condition on invertible nerves");
  auto* gamma = add("gamma", "t(A), extraction, round trip and the group variant");
  gamma->add_flag("--roundtrip", o.roundtrip, "compare X with t(extract(X))");
  gamma->add_flag("--bousfield", o.bousfield, "Bousfield condition and inverse extraction");
  auto* filtration = add("filtration", "filtration stages, chains and attachments");
  filtration->add_option("--variant", o.variant, "invertible or bousfield");
  filtration->add_option("--generators", o.generators, "free generators (invertible variant)");
  filtration->add_option("--k", o.k, "dump this stage");
  filtration->add_option("--kmax", o.kmax, "last stage of the chain (default: word bound)");
  add("sweep", "the full catalog acceptance suite");

  std::vector<std::string> argv_store{"segalkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "segalkit: " << e.what() << "\n";
    return 2;
  }

  std::string chosen;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) chosen = name;
  }
  Suite suite;
  suite.name = chosen;
  const auto start = std::chrono::steady_clock::now();
  try {
    check_caps(o);
    if (chosen == "laws") suite_laws(o, suite);
    if (chosen == "hom") suite_hom(o, suite);
    if (chosen == "nerve") suite_nerve(o, suite);
    if (chosen == "segal") suite_condition(o, suite, ConditionKind::segal);
    if (chosen == "bousfield") suite_condition(o, suite, ConditionKind::bousfield);
    if (chosen == "xi") suite_condition(o, suite, ConditionKind::xi);
    if (chosen == "gamma") suite_gamma(o, suite);
    if (chosen == "filtration") suite_filtration(o, suite);
    if (chosen == "sweep") suite_sweep(suite);
  } catch (const Error& e) {
    err << "segalkit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "segalkit: " << e.what() << "\n";
    return 2;
  }

  json report = {{"suite", suite.name},
                 {"catalog_version", kCatalogVersion},
                 {"bounds", {{"nmax", o.nmax}, {"trunc", o.trunc}, {"wordbound", o.wordbound}}},
                 {"inputs", suite.inputs},
                 {"checks", suite.checks},
                 {"verdict", suite.pass ? "pass" : "fail"}};
  if (o.timings) {
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  const std::string text = report.dump(2) + "\n";
  if (o.json_path == "-") {
    out << text;
  } else {
    if (!o.json_path.empty()) {
      std::ofstream file(o.json_path, std::ios::binary);
      if (!file) {
        err << "segalkit: cannot write '" << o.json_path << "'\n";
        return 2;
      }
      file << text;
    }
    if (!o.quiet) {
      for (const auto& line : suite.lines) out << line << "\n";
      out << suite.name << ": " << (suite.pass ? "pass" : "FAIL") << "\n";
    }
  }
  return suite.pass ? 0 : 1;
}

}  // namespace segalkit::cli
