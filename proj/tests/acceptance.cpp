#include <iostream>

#include "segalkit/sweep.hpp"

int main() {
  int failed = 0;
  for (const auto& r : segalkit::run_sweep()) {
    std::cout << "AC" << r.id << (r.id < 10 ? "  " : " ") << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": "
              << r.detail << "\n";
    failed += r.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
