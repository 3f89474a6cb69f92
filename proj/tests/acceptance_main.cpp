// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The seed can be overridden with a single argument.

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "ordlim/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 42;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  std::vector<ordlim::CriterionResult> results = ordlim::run_acceptance(seed);
  bool all_pass = true;
  for (const ordlim::CriterionResult& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << ". " << r.name << " — "
              << r.detail << " (" << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
  return all_pass ? 0 : 1;
}
