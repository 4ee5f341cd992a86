#include "segalkit/algebra.hpp"

#include <algorithm>
#include <functional>

#include "segalkit/errors.hpp"

namespace segalkit {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void check_square_table(const std::vector<std::vector<int>>& table, int order, int lo,
                        const std::string& what) {
  if (table.size() != at(order)) {
    throw InputError(what + ": table has " + std::to_string(table.size()) + " rows, expected " +
                     std::to_string(order));
  }
  for (const auto& row : table) {
    if (row.size() != at(order)) throw InputError(what + ": table is not square");
    for (int v : row) {
      if (v < lo || v >= order) {
        throw InputError(what + ": entry " + std::to_string(v) + " out of range");
      }
    }
  }
}

ValidationReport failure(std::string law, std::vector<int> witness, std::string message) {
  ValidationReport r;
  r.pass = false;
  r.law = std::move(law);
  r.witness = std::move(witness);
  r.message = std::move(message);
  return r;
}

}  // namespace

// ------------------------------------------------------------------ FinMonoid

bool FinMonoid::is_commutative() const {
  for (int a = 0; a < order; ++a) {
    for (int b = a + 1; b < order; ++b) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

bool FinMonoid::is_cancellative() const {
  for (int a = 0; a < order; ++a) {
    std::vector<bool> left(at(order), false);
    std::vector<bool> right(at(order), false);
    for (int b = 0; b < order; ++b) {
      if (left[at(multiply(a, b))] || right[at(multiply(b, a))]) return false;
      left[at(multiply(a, b))] = true;
      right[at(multiply(b, a))] = true;
    }
  }
  return true;
}

std::optional<std::vector<int>> FinMonoid::inverses() const {
  std::vector<int> inverse(at(order), -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (multiply(a, b) == identity && multiply(b, a) == identity) {
        inverse[at(a)] = b;
        break;
      }
    }
    if (inverse[at(a)] < 0) return std::nullopt;
  }
  return inverse;
}

FinGroup FinGroup::from_monoid(const FinMonoid& monoid) {
  auto inverse = monoid.inverses();
  if (!inverse) {
    throw PreconditionError("monoid '" + monoid.name + "' has an element without an inverse");
  }
  return FinGroup{monoid, std::move(*inverse)};
}

ValidationReport validate(const FinMonoid& monoid) {
  if (monoid.order < 1) throw InputError("monoid order must be positive");
  check_square_table(monoid.table, monoid.order, 0, "monoid");
  if (monoid.identity < 0 || monoid.identity >= monoid.order) {
    throw InputError("monoid identity out of range");
  }
  const int n = monoid.order;
  const int e = monoid.identity;
  for (int a = 0; a < n; ++a) {
    if (monoid.multiply(e, a) != a || monoid.multiply(a, e) != a) {
      return failure("identity", {a}, "identity law fails at element " + std::to_string(a));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (monoid.multiply(monoid.multiply(a, b), c) != monoid.multiply(a, monoid.multiply(b, c))) {
          return failure("associativity", {a, b, c},
                         "(ab)c != a(bc) for (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");
        }
      }
    }
  }
  return {};
}

ValidationReport validate(const FinGroup& group) {
  auto report = validate(group.monoid);
  if (!report.pass) return report;
  if (group.inverse.size() != at(group.order())) throw InputError("group: inverse table has wrong length");
  for (int g = 0; g < group.order(); ++g) {
    const int h = group.invert(g);
    if (h < 0 || h >= group.order()) throw InputError("group: inverse entry out of range");
    if (group.multiply(g, h) != group.identity() || group.multiply(h, g) != group.identity()) {
      return failure("inverse", {g, h}, "g * g^-1 != e for g = " + std::to_string(g));
    }
  }
  return report;
}

// ---------------------------------------------------------------- FinGroupoid

FinGroupoid FinGroupoid::indiscrete(int objects) {
  FinGroupoid g;
  g.name = "indiscrete" + std::to_string(objects);
  g.object_count = objects;
  // Morphism x -> y has id x * objects + y.
  for (int x = 0; x < objects; ++x) {
    for (int y = 0; y < objects; ++y) {
      g.source.push_back(x);
      g.target.push_back(y);
    }
  }
  const int count = objects * objects;
  g.table.assign(at(count), std::vector<int>(at(count), -1));
  for (int f = 0; f < count; ++f) {
    for (int h = 0; h < count; ++h) {
      if (g.target[at(f)] == g.source[at(h)]) g.table[at(f)][at(h)] = g.source[at(f)] * objects + g.target[at(h)];
    }
  }
  for (int x = 0; x < objects; ++x) g.identities.push_back(x * objects + x);
  for (int f = 0; f < count; ++f) g.inverse.push_back(g.target[at(f)] * objects + g.source[at(f)]);
  return g;
}

FinGroupoid FinGroupoid::from_group(const FinGroup& group) {
  FinGroupoid g;
  g.name = group.name();
  g.object_count = 1;
  g.source.assign(at(group.order()), 0);
  g.target.assign(at(group.order()), 0);
  g.table = group.monoid.table;
  g.identities = {group.identity()};
  g.inverse = group.inverse;
  return g;
}

ValidationReport validate(const FinGroupoid& g) {
  const int count = g.morphism_count();
  if (g.object_count < 1) throw InputError("groupoid needs at least one object");
  if (g.target.size() != at(count) || g.inverse.size() != at(count) ||
      g.identities.size() != at(g.object_count)) {
    throw InputError("groupoid: inconsistent table lengths");
  }
  check_square_table(g.table, count, -1, "groupoid");
  for (int f = 0; f < count; ++f) {
    if (g.source[at(f)] < 0 || g.source[at(f)] >= g.object_count || g.target[at(f)] < 0 ||
        g.target[at(f)] >= g.object_count) {
      throw InputError("groupoid: endpoint out of range");
    }
  }
  for (int f = 0; f < count; ++f) {
    for (int h = 0; h < count; ++h) {
      const bool composable = g.target[at(f)] == g.source[at(h)];
      const int fh = g.then(f, h);
      if (composable != (fh >= 0)) {
        return failure("composability", {f, h}, "composite defined iff endpoints match");
      }
      if (composable && (g.source[at(fh)] != g.source[at(f)] || g.target[at(fh)] != g.target[at(h)])) {
        return failure("endpoints", {f, h}, "composite has wrong endpoints");
      }
    }
  }
  for (int x = 0; x < g.object_count; ++x) {
    const int id = g.identities[at(x)];
    if (id < 0 || id >= count) throw InputError("groupoid: identity out of range");
    if (g.source[at(id)] != x || g.target[at(id)] != x) {
      return failure("identity", {id}, "identity is not an endomorphism of its object");
    }
    for (int f = 0; f < count; ++f) {
      if (g.source[at(f)] == x && g.then(id, f) != f) return failure("identity", {id, f}, "left identity law");
      if (g.target[at(f)] == x && g.then(f, id) != f) return failure("identity", {f, id}, "right identity law");
    }
  }
  for (int f = 0; f < count; ++f) {
    for (int h = 0; h < count; ++h) {
      if (g.then(f, h) < 0) continue;
      for (int k = 0; k < count; ++k) {
        if (g.then(h, k) < 0) continue;
        if (g.then(g.then(f, h), k) != g.then(f, g.then(h, k))) {
          return failure("associativity", {f, h, k}, "(f;g);h != f;(g;h)");
        }
      }
    }
  }
  for (int f = 0; f < count; ++f) {
    const int inv = g.inverse[at(f)];
    if (inv < 0 || inv >= count) throw InputError("groupoid: inverse out of range");
    if (g.then(f, inv) != g.identities[at(g.source[at(f)])] ||
        g.then(inv, f) != g.identities[at(g.target[at(f)])]) {
      return failure("inverse", {f, inv}, "f;f^-1 is not an identity");
    }
  }
  return {};
}

// ---------------------------------------------------------------- isomorphism

std::optional<std::vector<int>> find_isomorphism(const FinMonoid& a, const FinMonoid& b) {
  if (a.order != b.order) return std::nullopt;
  const int n = a.order;
  std::vector<int> phi(at(n), -1);
  std::vector<bool> used(at(n), false);
  phi[at(a.identity)] = b.identity;
  used[at(b.identity)] = true;

  auto consistent = [&]() {
    for (int x = 0; x < n; ++x) {
      if (phi[at(x)] < 0) continue;
      for (int y = 0; y < n; ++y) {
        if (phi[at(y)] < 0) continue;
        const int xy = phi[at(a.multiply(x, y))];
        if (xy >= 0 && xy != b.multiply(phi[at(x)], phi[at(y)])) return false;
      }
    }
    return true;
  };

  std::function<bool(int)> extend = [&](int x) -> bool {
    if (x == n) return true;
    if (phi[at(x)] >= 0) return extend(x + 1);
    for (int y = 0; y < n; ++y) {
      if (used[at(y)]) continue;
      phi[at(x)] = y;
      used[at(y)] = true;
      if (consistent() && extend(x + 1)) return true;
      phi[at(x)] = -1;
      used[at(y)] = false;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return phi;
}

bool are_isomorphic(const FinMonoid& a, const FinMonoid& b) {
  return find_isomorphism(a, b).has_value();
}

// ----------------------------------------------------------- named structures

FinMonoid cyclic_group(int order) {
  FinMonoid m;
  m.name = order == 1 ? "trivial" : "Z" + std::to_string(order);
  m.order = order;
  m.table.assign(at(order), std::vector<int>(at(order)));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) m.table[at(a)][at(b)] = (a + b) % order;
  }
  return m;
}

FinMonoid trivial_monoid() { return cyclic_group(1); }

FinMonoid product(const FinMonoid& a, const FinMonoid& b) {
  FinMonoid m;
  m.name = a.name + "x" + b.name;
  m.order = a.order * b.order;
  m.table.assign(at(m.order), std::vector<int>(at(m.order)));
  for (int x = 0; x < m.order; ++x) {
    for (int y = 0; y < m.order; ++y) {
      const int first = a.multiply(x / b.order, y / b.order);
      const int second = b.multiply(x % b.order, y % b.order);
      m.table[at(x)][at(y)] = first * b.order + second;
    }
  }
  m.identity = a.identity * b.order + b.identity;
  return m;
}

FinMonoid symmetric_group_s3() {
  // Permutations of {0,1,2} in lexicographic order; a * b = "a then b".
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  FinMonoid m;
  m.name = "S3";
  m.order = 6;
  m.table.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[at(i)] = perms[at(b)][at(perms[at(a)][at(i)])];
      m.table[at(a)][at(b)] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  m.identity = 0;
  return m;
}

FinMonoid boolean_multiplicative() {
  return FinMonoid{"Bool(*)", 2, {{0, 0}, {0, 1}}, 1};
}

FinMonoid boolean_max() {
  FinMonoid m = max_monoid(2);
  m.name = "Bool(max)";
  return m;
}

FinMonoid max_monoid(int order) {
  FinMonoid m;
  m.name = "Max" + std::to_string(order);
  m.order = order;
  m.table.assign(at(order), std::vector<int>(at(order)));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) m.table[at(a)][at(b)] = std::max(a, b);
  }
  return m;
}

FinMonoid full_transformation_monoid_2() {
  // Maps {0,1} -> {0,1} encoded as (f(0), f(1)): 0=id(0,1), 1=const0, 2=const1, 3=swap.
  const std::vector<std::pair<int, int>> maps{{0, 1}, {0, 0}, {1, 1}, {1, 0}};
  FinMonoid m;
  m.name = "T2";
  m.order = 4;
  m.table.assign(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      auto apply = [&](int map, int x) { return x == 0 ? maps[at(map)].first : maps[at(map)].second; };
      const std::pair<int, int> c{apply(b, apply(a, 0)), apply(b, apply(a, 1))};
      m.table[at(a)][at(b)] = static_cast<int>(std::find(maps.begin(), maps.end(), c) - maps.begin());
    }
  }
  m.identity = 0;
  return m;
}

// -------------------------------------------------------------------- catalog

CatalogKind parse_catalog_kind(const std::string& name) {
  if (name == "monoids") return CatalogKind::monoids;
  if (name == "abelian_monoids") return CatalogKind::abelian_monoids;
  if (name == "groups") return CatalogKind::groups;
  if (name == "abelian_groups") return CatalogKind::abelian_groups;
  throw InputError("unknown catalog kind '" + name + "'");
}

std::vector<FinMonoid> exhaustive_monoids(int order) {
  if (order < 1) throw InputError("monoid order must be positive");
  if (order > kExhaustiveOrderCap) {
    throw CapabilityError("exhaustive monoid generation is capped at order " +
                          std::to_string(kExhaustiveOrderCap));
  }
  const std::vector<FinMonoid> known{trivial_monoid(), cyclic_group(2), cyclic_group(3),
                                     boolean_multiplicative()};
  std::vector<FinMonoid> found;
  const int free_cells = (order - 1) * (order - 1);
  std::vector<int> cells(at(free_cells), 0);
  while (true) {
    FinMonoid m;
    m.order = order;
    m.identity = 0;
    m.table.assign(at(order), std::vector<int>(at(order)));
    for (int a = 0; a < order; ++a) {
      m.table[0][at(a)] = a;
      m.table[at(a)][0] = a;
    }
    for (int i = 0; i < free_cells; ++i) {
      m.table[at(1 + i / (order - 1))][at(1 + i % (order - 1))] = cells[at(i)];
    }
    if (validate(m).pass &&
        std::none_of(found.begin(), found.end(), [&](const FinMonoid& f) { return are_isomorphic(f, m); })) {
      found.push_back(std::move(m));
    }
    int pos = free_cells - 1;
    while (pos >= 0 && cells[at(pos)] == order - 1) cells[at(pos--)] = 0;
    if (pos < 0) break;
    ++cells[at(pos)];
  }
  int anonymous = 0;
  for (auto& m : found) {
    for (const auto& k : known) {
      if (are_isomorphic(k, m)) m.name = k.name;
    }
    if (m.name.empty()) m.name = "M" + std::to_string(order) + "." + std::to_string(anonymous++);
  }
  return found;
}

std::vector<FinMonoid> curated_monoids() {
  return {
      boolean_multiplicative(),
      boolean_max(),
      cyclic_group(4),
      product(cyclic_group(2), cyclic_group(2)),
      max_monoid(4),
      product(cyclic_group(2), boolean_multiplicative()),
      full_transformation_monoid_2(),
      cyclic_group(5),
      symmetric_group_s3(),
      cyclic_group(6),
  };
}

std::vector<FinMonoid> catalog(CatalogKind kind, int max_order) {
  if (max_order < 1) throw InputError("catalog order must be positive");
  if (max_order > kCuratedOrderCap) {
    throw CapabilityError("catalogs are supported up to order " + std::to_string(kCuratedOrderCap));
  }
  std::vector<FinMonoid> all;
  for (int order = 1; order <= std::min(max_order, kExhaustiveOrderCap); ++order) {
    for (auto& m : exhaustive_monoids(order)) all.push_back(std::move(m));
  }
  for (auto& m : curated_monoids()) {
    if (m.order > max_order) continue;
    if (std::any_of(all.begin(), all.end(), [&](const FinMonoid& f) { return are_isomorphic(f, m); })) continue;
    all.push_back(std::move(m));
  }
  std::vector<FinMonoid> out;
  for (auto& m : all) {
    const bool keep = kind == CatalogKind::monoids ||
                      (kind == CatalogKind::abelian_monoids && m.is_commutative()) ||
                      (kind == CatalogKind::groups && m.is_group()) ||
                      (kind == CatalogKind::abelian_groups && m.is_group() && m.is_commutative());
    if (keep) out.push_back(std::move(m));
  }
  return out;
}

// ----------------------------------------------------------------------- JSON

namespace {

std::vector<std::vector<int>> read_table(const nlohmann::json& doc, int order, bool allow_null) {
  if (!doc.contains("table") || !doc["table"].is_array()) throw InputError("missing 'table' array");
  std::vector<std::vector<int>> table;
  for (const auto& row : doc["table"]) {
    if (!row.is_array()) throw InputError("table rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (v.is_null() && allow_null) {
        r.push_back(-1);
      } else if (v.is_number_integer()) {
        r.push_back(v.get<int>());
      } else {
        throw InputError("table entries must be integers");
      }
    }
    table.push_back(std::move(r));
  }
  if (table.size() != at(order)) throw InputError("table row count does not match order");
  return table;
}

int read_int(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw InputError(std::string("missing integer field '") + key + "'");
  }
  return doc[key].get<int>();
}

}  // namespace

FinMonoid monoid_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("structure document must be a JSON object");
  const std::string kind = doc.value("kind", "");
  if (kind != "monoid" && kind != "group") throw InputError("expected kind 'monoid' or 'group'");
  FinMonoid m;
  m.order = read_int(doc, "order");
  if (m.order < 1) throw InputError("order must be positive");
  m.identity = read_int(doc, "identity");
  m.table = read_table(doc, m.order, false);
  m.name = doc.value("name", kind + std::to_string(m.order));
  validate(m);  // shape errors throw here
  return m;
}

FinGroup group_from_json(const nlohmann::json& doc) {
  FinMonoid m = monoid_from_json(doc);
  auto report = validate(m);
  if (!report.pass) throw InputError("group table violates " + report.law + ": " + report.message);
  return FinGroup::from_monoid(m);
}

FinGroupoid groupoid_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("kind", "") != "groupoid") throw InputError("expected kind 'groupoid'");
  FinGroupoid g;
  g.object_count = read_int(doc, "objects");
  g.name = doc.value("name", std::string("groupoid"));
  if (!doc.contains("morphisms") || !doc["morphisms"].is_array()) throw InputError("missing 'morphisms'");
  for (const auto& pair : doc["morphisms"]) {
    if (!pair.is_array() || pair.size() != 2) throw InputError("morphisms are [source, target] pairs");
    g.source.push_back(pair[0].get<int>());
    g.target.push_back(pair[1].get<int>());
  }
  if (!doc.contains("identities") || !doc["identities"].is_array()) throw InputError("missing 'identities'");
  g.identities = doc["identities"].get<std::vector<int>>();
  g.table = read_table(doc, g.morphism_count(), true);
  // Inverses are solved from the table.
  g.inverse.assign(at(g.morphism_count()), -1);
  for (int f = 0; f < g.morphism_count(); ++f) {
    for (int h = 0; h < g.morphism_count(); ++h) {
      if (g.target[at(f)] == g.source[at(h)] && g.source[at(f)] == g.target[at(h)] &&
          g.source[at(f)] >= 0 && g.source[at(f)] < g.object_count &&
          g.target[at(f)] >= 0 && g.target[at(f)] < g.object_count &&
          g.then(f, h) == g.identities.at(at(g.source[at(f)]))) {
        g.inverse[at(f)] = h;
        break;
      }
    }
    if (g.inverse[at(f)] < 0) throw InputError("groupoid morphism " + std::to_string(f) + " has no inverse");
  }
  auto report = validate(g);
  if (!report.pass) throw InputError("groupoid violates " + report.law + ": " + report.message);
  return g;
}

nlohmann::json to_json(const FinMonoid& monoid) {
  return {{"kind", monoid.is_group() ? "group" : "monoid"},
          {"name", monoid.name},
          {"order", monoid.order},
          {"table", monoid.table},
          {"identity", monoid.identity}};
}

nlohmann::json to_json(const FinGroupoid& g) {
  nlohmann::json morphisms = nlohmann::json::array();
  for (int f = 0; f < g.morphism_count(); ++f) morphisms.push_back({g.source[at(f)], g.target[at(f)]});
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : g.table) {
    nlohmann::json r = nlohmann::json::array();
    for (int v : row) r.push_back(v < 0 ? nlohmann::json(nullptr) : nlohmann::json(v));
    table.push_back(std::move(r));
  }
  return {{"kind", "groupoid"}, {"name", g.name},          {"objects", g.object_count},
          {"morphisms", morphisms}, {"identities", g.identities}, {"table", table}};
}

}  // namespace segalkit
