// One PASS/FAIL line per criterion; timings on stderr.

#include "agslice/acceptance.hpp"

#include <iostream>

int main() {
  using namespace agslice::acceptance;
  Config cfg;
  bool all = true;
  for (const CriterionResult& r : run_all(cfg)) {
    std::cout << status_line(r) << std::endl;
    std::cerr << "  criterion " << r.id << ": " << r.seconds << " s of " << r.budget_seconds << " s\n";
    if (!r.checks_pass) std::cerr << "  " << r.detail.dump() << "\n";
    all = all && r.pass();
  }
  return all ? 0 : 1;
}
