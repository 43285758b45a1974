#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "opinfo/metrics.hpp"
#include "opinfo_cli/config.hpp"

namespace opinfo::cli {

struct ReportRow {
  std::string experiment;
  std::string theory;
  std::string state_id;
  std::optional<int> N;
  std::optional<int> M;
  std::optional<double> epsilon;
  std::string criterion;
  double value = 0.0;  // NaN when there is nothing to report (no accepted M)
  BoundDirection direction = BoundDirection::exact;
  std::uint64_t seed = 0;
};

inline constexpr const char* kCsvHeader = "experiment,theory,state_id,N,M,epsilon,criterion,value,bound_direction,seed";

/// %.12g; "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows);
/// {"config": echo, "rows": [...]}; non-finite values become null.
void write_json(std::ostream& os, const ExperimentConfig& cfg, const std::vector<ReportRow>& rows);

}  // namespace opinfo::cli
