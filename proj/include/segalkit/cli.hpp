#pragma once

// Command-line front end. Exit status: 0 all checks pass, 1 a check failed,
// 2 invalid input (unknown flag, malformed file, bound over the cap).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "segalkit/algebra.hpp"

namespace segalkit::cli {

inline constexpr const char* kCatalogVersion = "v1";
inline constexpr int kMaxLevel = 6;
inline constexpr int kMaxWordBound = 8;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::uint64_t fnv1a(std::string_view bytes);
std::string hex_digest(std::uint64_t digest);

/// monoids3, abelian3, groups3, groups6, abelian6, curated, corpus.
std::vector<std::string> catalog_names();
/// Throws InputError for unknown names.
std::vector<FinMonoid> load_catalog(const std::string& name);

}  // namespace segalkit::cli
