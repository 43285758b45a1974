#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opinfo/optim.hpp"

namespace opinfo::cli {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 0;  // 0: the suite's default
  SearchConfig search{2, 400, 1, 1e-10};
  bool inject_fault = false;  // validity suite only
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  int violations = 0;
  /// Largest checked residual (lhs - rhs of an inequality, or a deviation).
  double worst_residual = 0.0;
  bool passed() const { return violations == 0 && trials > 0; }
};

/// Names in run order.
const std::vector<std::string>& suite_names();
int default_trials(const std::string& name);
/// Throws ValidationError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace opinfo::cli
