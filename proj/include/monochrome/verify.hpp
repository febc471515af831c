#pragma once

#include <string>
#include <vector>

namespace mono {

struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0;      // observed error or statistic
  double threshold = 0;  // pass iff value <= threshold
  bool pass = false;
};

/// Suite names accepted by run_suite.
std::vector<std::string> suite_names();

/// Runs one invariant suite ("graph", "graphon", "trace", "spectrum",
/// "moments", "regimes", "stats") or "all". Throws InputError on an unknown
/// name.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace mono
