#include "opinfo/serialize.hpp"

#include <charconv>
#include <string>

namespace opinfo {

namespace {

Factor parse_factor(std::string_view spec) {
  if (spec == "squit") return {TheoryId::boxworld, 2};
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ValidationError("bad system factor '" + std::string(spec) + "'");
  const auto kind = spec.substr(0, colon);
  const auto num = spec.substr(colon + 1);
  int d = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), d);
  if (ec != std::errc() || ptr != num.data() + num.size() || d < 1) {
    throw ValidationError("bad dimension in '" + std::string(spec) + "'");
  }
  if (kind == "classical") return {TheoryId::classical, d};
  if (kind == "quantum") return {TheoryId::quantum, d};
  throw ValidationError("unknown theory '" + std::string(kind) + "'");
}

Vec vec_from(const nlohmann::json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Vec>(values.data(), static_cast<long>(values.size()));
}

nlohmann::json vec_to(const Vec& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

}  // namespace

SystemLabel parse_system(std::string_view text) {
  if (text == "trivial") return SystemLabel::trivial();
  std::vector<Factor> factors;
  size_t start = 0;
  while (start <= text.size()) {
    const auto star = text.find('*', start);
    const auto piece = text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    factors.push_back(parse_factor(piece));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return SystemLabel::from_factors(std::move(factors));
}

nlohmann::json to_json(const StateVec& s) { return {{"system", s.system.to_string()}, {"coords", vec_to(s.coords)}}; }

nlohmann::json to_json(const EffectVec& e) { return {{"system", e.system.to_string()}, {"coords", vec_to(e.coords)}}; }

nlohmann::json to_json(const ChannelMat& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < c.matrix.rows(); ++r) rows.push_back(vec_to(c.matrix.row(r).transpose()));
  return {{"in", c.in.to_string()}, {"out", c.out.to_string()}, {"matrix", rows}, {"deterministic", c.deterministic}};
}

StateVec state_from_json(const nlohmann::json& j) {
  StateVec s{parse_system(j.at("system").get<std::string>()), vec_from(j.at("coords"))};
  if (s.coords.size() != s.system.dim()) throw DimensionError("state coordinates do not match the system");
  return s;
}

EffectVec effect_from_json(const nlohmann::json& j) {
  EffectVec e{parse_system(j.at("system").get<std::string>()), vec_from(j.at("coords"))};
  if (e.coords.size() != e.system.dim()) throw DimensionError("effect coordinates do not match the system");
  return e;
}

ChannelMat channel_from_json(const nlohmann::json& j) {
  ChannelMat c{parse_system(j.at("in").get<std::string>()), parse_system(j.at("out").get<std::string>()), Mat(),
               j.value("deterministic", false)};
  const auto& rows = j.at("matrix");
  c.matrix.resize(c.out.dim(), c.in.dim());
  if (static_cast<int>(rows.size()) != c.out.dim()) throw DimensionError("channel matrix row count");
  for (int r = 0; r < c.out.dim(); ++r) {
    const Vec row = vec_from(rows.at(static_cast<size_t>(r)));
    if (row.size() != c.in.dim()) throw DimensionError("channel matrix column count");
    c.matrix.row(r) = row.transpose();
  }
  return c;
}

}  // namespace opinfo
