#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cherednik::checks {

struct CheckResult {
  int id = 0;  // criterion number, or 0 for an invariant suite
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Pinned limits. All comparisons of mathematical values are exact.
inline constexpr double kRegressionSeconds = 1.0;
inline constexpr double kSelftestSeconds = 300.0;
inline constexpr unsigned kGammaSeed = 20240611u;
inline constexpr int kGammaCases = 500;

// Criteria 1..9.
CheckResult run_criterion(int id);
std::vector<CheckResult> run_criteria();

// Module invariant suites that go beyond the numbered criteria.
std::vector<CheckResult> run_invariant_suites();

std::string format_line(const CheckResult& r);

}  // namespace cherednik::checks
