#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace queens {

struct SuiteResult {
  std::string name;
  long long checks = 0;
  std::vector<std::string> failures;  // capped, first failures only
  double seconds = 0;
  bool ok() const { return failures.empty(); }
};

// Property suites at fixed desk-scale parameters.
SuiteResult verify_formulas();
SuiteResult verify_diag_sums();
SuiteResult verify_rings();
SuiteResult verify_konig(std::uint64_t seed);
SuiteResult verify_ring_bound(std::uint64_t seed);
SuiteResult verify_constructions();

const std::vector<std::string>& suite_names();  // includes "all"
std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed);

}  // namespace queens
