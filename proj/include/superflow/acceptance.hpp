#pragma once

// The end-to-end acceptance criteria, runnable from the test suite and from
// the command line.

#include <cstdint>
#include <string>
#include <vector>

namespace superflow {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 8;
inline constexpr std::uint64_t kAcceptanceSeed = 20240611;

/// Runs one criterion (1..8). Engine errors are reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed = kAcceptanceSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kAcceptanceSeed);

/// "PASS [3] reynolds: ..." style line.
std::string format_result(const CriterionResult& result);

/// Exact geometric sum over s = 0 .. 2m-1 of ((-1)^sign_exponent zeta_m^zeta_exponent)^s.
bool character_sum_nonzero(long m, long sign_exponent, long zeta_exponent);

}  // namespace superflow
