#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ordlim {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full acceptance suite. Every check is exact; the seed fixes all
// sampled inputs.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

}  // namespace ordlim
