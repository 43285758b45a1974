#pragma once

#include <string>
#include <vector>

#include "opinfo_cli/config.hpp"
#include "opinfo_cli/report.hpp"

namespace opinfo::cli {

struct CommandOutput {
  std::vector<ReportRow> rows;
  int exit_code = kOk;
  std::vector<std::string> notes;  // human-readable, written to stderr
};

// Each throws UsageError for bad configs and UnsupportedFeature /
// UnsupportedComposition for requests outside the implemented theories.
CommandOutput cmd_rates(const ExperimentConfig& cfg);
CommandOutput cmd_verify(const ExperimentConfig& cfg);
CommandOutput cmd_entropy_compare(const ExperimentConfig& cfg);
CommandOutput cmd_fidelity_bounds(const ExperimentConfig& cfg);
CommandOutput cmd_steering_demo(const ExperimentConfig& cfg);

CommandOutput dispatch(const ExperimentConfig& cfg);

}  // namespace opinfo::cli
