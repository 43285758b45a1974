#include "opinfo_cli/report.hpp"

#include <cmath>
#include <cstdio>

namespace opinfo::cli {

namespace {

// Fields never contain quotes; commas and newlines get quoted anyway.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\n\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string optional_field(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return format_number(*v);
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << csv_field(r.experiment) << ',' << csv_field(r.theory) << ',' << csv_field(r.state_id) << ','
       << optional_field(r.N) << ',' << optional_field(r.M) << ',' << optional_field(r.epsilon) << ','
       << csv_field(r.criterion) << ',' << format_number(r.value) << ',' << to_string(r.direction) << ','
       << r.seed << '\n';
  }
}

void write_json(std::ostream& os, const ExperimentConfig& cfg, const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json doc;
  doc["config"] = cfg.echo();
  auto& out = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["experiment"] = r.experiment;
    j["theory"] = r.theory;
    j["state_id"] = r.state_id;
    j["N"] = r.N ? nlohmann::ordered_json(*r.N) : nlohmann::ordered_json(nullptr);
    j["M"] = r.M ? nlohmann::ordered_json(*r.M) : nlohmann::ordered_json(nullptr);
    j["epsilon"] = r.epsilon ? nlohmann::ordered_json(*r.epsilon) : nlohmann::ordered_json(nullptr);
    j["criterion"] = r.criterion;
    j["value"] = std::isfinite(r.value) ? nlohmann::ordered_json(r.value) : nlohmann::ordered_json(nullptr);
    j["bound_direction"] = to_string(r.direction);
    j["seed"] = r.seed;
    out.push_back(std::move(j));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace opinfo::cli
