#pragma once

// Finite Gamma-spaces with discrete levels, indexed on pointed maps and
// covariant: a based map f : m -> n acts X(m) -> X(n).

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "segalkit/presheaves.hpp"

namespace segalkit {

class GammaDiagram {
 public:
  /// act(f, x) for f : m -> n and x in X(m) is an element of X(n).
  using ActionFunction = std::function<ElementId(const PointedMap&, ElementId)>;

  GammaDiagram(int truncation, std::vector<std::vector<std::string>> labels, const ActionFunction& act);

  int truncation() const { return truncation_; }
  std::size_t level_size(int n) const;
  const std::vector<std::string>& labels(int n) const;
  const std::string& label(int n, ElementId x) const { return labels(n).at(x); }
  ElementId at(int n, const std::string& label) const;

  /// pointed_hom(m, n), in its canonical order.
  const std::vector<PointedMap>& maps(int m, int n) const;
  const std::vector<ElementId>& action_table(const PointedMap& f) const;
  ElementId act(const PointedMap& f, ElementId x) const { return action_table(f).at(x); }

 private:
  void check_level(int n) const;

  int truncation_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<PointedMap>>> maps_;
  std::vector<std::vector<std::vector<std::vector<ElementId>>>> actions_;  // [m][n][map][x]
};

/// Identity maps act trivially and X(f o g) = X(f) o X(g) for every
/// composable pair within the truncation.
AuditReport audit_functoriality(const GammaDiagram& x);

/// Levels, labels and the tables of every pointed map, keyed by text form.
nlohmann::json to_json(const GammaDiagram& x);

}  // namespace segalkit
