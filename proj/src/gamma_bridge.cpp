#include "segalkit/gamma_bridge.hpp"

#include <algorithm>
#include <map>

#include "segalkit/errors.hpp"

namespace segalkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::vector<int> decode(ElementId x, int base, int length) {
  std::vector<int> digits(idx(length));
  for (int i = length - 1; i >= 0; --i) {
    digits[idx(i)] = static_cast<int>(x % static_cast<ElementId>(base));
    x /= static_cast<ElementId>(base);
  }
  return digits;
}

ElementId encode(const std::vector<int>& digits, int base) {
  ElementId x = 0;
  for (int d : digits) x = x * static_cast<ElementId>(base) + static_cast<ElementId>(d);
  return x;
}

std::string tuple_label(const std::vector<int>& digits) {
  std::string out = "(";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out += "|";
    out += std::to_string(digits[i]);
  }
  return out + ")";
}

PointedMap fold_map() { return PointedMap(2, 1, {0, 1, 1}); }

}  // namespace

GammaDiagram t_construct(const FinMonoid& monoid, int truncation) {
  const auto report = validate(monoid);
  if (!report.pass) throw PreconditionError("not a monoid: " + report.message);
  if (!monoid.is_commutative()) throw PreconditionError("t needs a commutative monoid; '" + monoid.name + "' is not");
  if (truncation < 2) throw PreconditionError("t is built with truncation at least 2");
  const int base = monoid.order;
  std::vector<std::vector<std::string>> labels(idx(truncation) + 1);
  for (int n = 0; n <= truncation; ++n) {
    std::size_t size = 1;
    for (int i = 0; i < n; ++i) size *= idx(base);
    for (ElementId x = 0; x < size; ++x) labels[idx(n)].push_back(tuple_label(decode(x, base, n)));
  }
  return GammaDiagram(truncation, std::move(labels), [&](const PointedMap& f, ElementId x) {
    const auto a = decode(x, base, f.source_rank());
    std::vector<int> b(idx(f.target_rank()), monoid.identity);
    for (int i = 1; i <= f.source_rank(); ++i) {
      if (f(i) != 0) b[idx(f(i) - 1)] = monoid.multiply(b[idx(f(i) - 1)], a[idx(i - 1)]);
    }
    return encode(b, base);
  });
}

MonoidExtraction extract_monoid(const GammaDiagram& x) {
  MonoidExtraction out;
  if (x.truncation() < 2) {
    out.refusal = "extraction needs X(2)";
    return out;
  }
  out.strictness = gamma_segal_check(x, std::min(3, x.truncation()), true);
  if (!out.strictness.pass) {
    out.refusal = "the Segal condition fails";
    return out;
  }
  const auto order = static_cast<int>(x.level_size(1));
  std::map<std::vector<ElementId>, ElementId> pairs;
  const auto projections = gamma_segal_map(x, 2);
  for (ElementId z = 0; z < projections.size(); ++z) pairs.emplace(projections[z], z);
  const auto& fold = x.action_table(fold_map());

  FinMonoid m;
  m.name = "extracted";
  m.order = order;
  m.table.assign(idx(order), std::vector<int>(idx(order)));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      m.table[idx(a)][idx(b)] = static_cast<int>(fold[pairs.at({static_cast<ElementId>(a), static_cast<ElementId>(b)})]);
    }
  }
  m.identity = static_cast<int>(x.act(PointedMap(0, 1, {0}), 0));
  const auto report = validate(m);
  if (!report.pass) {
    out.refusal = "extracted table violates " + report.law + ": " + report.message;
    return out;
  }
  if (!m.is_commutative()) {
    out.refusal = "extracted monoid is not commutative";
    return out;
  }
  out.monoid = std::move(m);
  return out;
}

RoundTripReport roundtrip_check(const GammaDiagram& x) {
  RoundTripReport report;
  const auto extraction = extract_monoid(x);
  if (!extraction.monoid) {
    report.reason = "extraction refused: " + extraction.refusal;
    return report;
  }
  const auto y = t_construct(*extraction.monoid, x.truncation());
  const int base = extraction.monoid->order;
  for (int n = 0; n <= x.truncation(); ++n) {
    std::vector<ElementId> component;
    std::vector<bool> hit(y.level_size(n), false);
    const auto tuples = n == 0 ? std::vector<std::vector<ElementId>>(x.level_size(0)) : gamma_segal_map(x, n);
    for (const auto& t : tuples) {
      std::vector<int> digits(t.begin(), t.end());
      const ElementId image = encode(digits, base);
      if (hit[image]) {
        report.reason = "level " + std::to_string(n) + " is not in bijection with X(1)^" + std::to_string(n);
        return report;
      }
      hit[image] = true;
      component.push_back(image);
    }
    if (component.size() != y.level_size(n)) {
      report.reason = "level " + std::to_string(n) + " has the wrong size";
      return report;
    }
    report.iso.push_back(std::move(component));
  }
  for (int m = 0; m <= x.truncation(); ++m) {
    for (int n = 0; n <= x.truncation(); ++n) {
      for (const auto& f : x.maps(m, n)) {
        const auto& tx = x.action_table(f);
        const auto& ty = y.action_table(f);
        for (ElementId e = 0; e < tx.size(); ++e) {
          if (report.iso[idx(n)][tx[e]] != ty[report.iso[idx(m)][e]]) {
            report.reason = "the projection bijection does not commute with " + to_text(f) + " at " + x.label(m, e);
            return report;
          }
        }
      }
    }
  }
  report.pass = true;
  return report;
}

GroupExtraction bousfield_group_extract(const GammaDiagram& x) {
  GroupExtraction out;
  if (x.truncation() < 2) {
    out.refusal = "extraction needs X(2)";
    return out;
  }
  out.bousfield = bousfield_gamma_check(x, std::min(3, x.truncation()), true);
  if (!out.bousfield.pass) {
    out.refusal = "the Bousfield condition fails";
    return out;
  }
  const auto extraction = extract_monoid(x);
  if (!extraction.monoid) {
    out.refusal = extraction.refusal;
    return out;
  }
  const FinMonoid& m = *extraction.monoid;
  // (a, e) has a unique preimage z under (j^0, j^1); its second coordinate inverts a.
  std::map<std::vector<ElementId>, ElementId> partial_sums;
  const auto sums = bousfield_gamma_map(x, 2);
  for (ElementId z = 0; z < sums.size(); ++z) partial_sums.emplace(sums[z], z);
  const auto& second = x.action_table(projection_maps(2)[1]);
  std::vector<int> inverse;
  for (int a = 0; a < m.order; ++a) {
    const ElementId z = partial_sums.at({static_cast<ElementId>(a), static_cast<ElementId>(m.identity)});
    inverse.push_back(static_cast<int>(second[z]));
  }
  FinGroup group{m, inverse};
  const auto report = validate(group);
  if (!report.pass) {
    out.refusal = "solved inverses violate " + report.law;
    return out;
  }
  out.group = std::move(group);
  return out;
}

DiagramPtr restrict_to_simplicial(const GammaDiagram& x, int truncation) {
  if (truncation > x.truncation()) {
    throw RankError("restriction to rank " + std::to_string(truncation) + " needs the Gamma-space up to that rank");
  }
  std::vector<std::vector<std::string>> labels;
  for (int k = 0; k <= truncation; ++k) labels.push_back(x.labels(k));
  return std::make_shared<TruncatedDiagram>(
      Category::delta, truncation, std::move(labels), [&](const InvMonotoneMap& theta, ElementId e) {
        return x.act(to_pointed(delta_to_gamma(theta.as_monotone())), e);
      });
}

}  // namespace segalkit
