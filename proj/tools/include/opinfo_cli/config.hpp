#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "opinfo/optim.hpp"

namespace opinfo::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kUnsupported = 3 };

/// Bad flags, unknown presets, malformed state specs.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  std::string subcommand;
  std::string theory;
  std::string state;
  std::string state2;              // fidelity-bounds: second state
  std::string family = "typical";  // rates: scheme family
  std::vector<int> N;
  std::vector<double> eps;
  std::uint64_t seed = 1;
  int restarts = 8;
  int max_evals = 2000;
  int trials = 0;  // 0: per-command default
  std::string out;
  std::string format = "csv";
  std::vector<std::string> suites;
  bool inject_fault = false;

  SearchConfig search() const;
  /// Every field, in declaration order.
  nlohmann::ordered_json echo() const;
};

/// Presets: pure, maxmixed, center (squit), plus (qubit),
/// diag:p1,p2,... (classical probabilities or quantum eigenvalues),
/// bloch:x,y,z (qubit), xy:x,y (squit), coords:c1,c2,... (raw coordinates).
StateVec parse_state_spec(const SystemLabel& system, const std::string& spec);

}  // namespace opinfo::cli
