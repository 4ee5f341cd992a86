#pragma once

// The full catalog sweep: ten exact criteria over the bundled corpora.

#include <string>
#include <vector>

#include "json.hpp"

#include "segalkit/algebra.hpp"

namespace segalkit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Every monoid of order <= 3 up to isomorphism plus the curated entries of
/// order >= 4.
std::vector<FinMonoid> sweep_corpus();

CriterionResult check_category_laws();
CriterionResult check_generator_closure();
CriterionResult check_representable_counts();
CriterionResult check_nerve_segal();
CriterionResult check_bousfield_iff_group();
CriterionResult check_invertible_nerve();
CriterionResult check_gamma_roundtrip();
CriterionResult check_bousfield_gamma();
CriterionResult check_restriction();
CriterionResult check_filtrations();

std::vector<CriterionResult> run_sweep();

nlohmann::json to_json(const CriterionResult& result);

}  // namespace segalkit
