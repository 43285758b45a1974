#include "opinfo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "internal.hpp"

namespace opinfo {

namespace {

bool is_squit(const SystemLabel& l) { return l.is_atomic() && l.theory() == TheoryId::boxworld; }

double squit_norm_lp(const Vec& delta) {
  const auto facets = boxworld_squit()->effect_facets();
  LinearProgram lp;
  lp.objective = 2.0 * delta;
  lp.a_ub.resize(static_cast<int>(facets.size()), 3);
  lp.b_ub.resize(static_cast<int>(facets.size()));
  for (size_t i = 0; i < facets.size(); ++i) {
    lp.a_ub.row(static_cast<int>(i)) = facets[i].normal.transpose();
    lp.b_ub(static_cast<int>(i)) = facets[i].offset;
  }
  lp.lower = Vec::Constant(3, -std::numeric_limits<double>::infinity());
  lp.upper = Vec::Constant(3, std::numeric_limits<double>::infinity());
  const auto r = lp_solve(lp);
  if (r.status != LpStatus::optimal) throw std::logic_error("squit norm LP did not reach an optimum");
  return r.value - delta(2);
}

double box_norm_lp(const Vec& delta) {
  LinearProgram lp;
  lp.objective = 2.0 * delta;
  lp.a_ub.resize(0, delta.size());
  lp.b_ub.resize(0);
  lp.lower = Vec::Zero(delta.size());
  lp.upper = Vec::Ones(delta.size());
  const auto r = lp_solve(lp);
  return r.value - delta.sum();
}

double block_norm(const SystemLabel& rest, const Vec& block) {
  if (rest.is_trivial()) return std::abs(block(0));
  if (is_squit(rest)) return squit_norm_lp(block);
  return trace_norm(detail::to_operator(rest, block));
}

template <class F>
double blockwise(const StateVec& delta, F&& f) {
  const auto split = detail::split_classical(delta.system);
  if (delta.coords.size() != delta.system.dim()) throw DimensionError("op_norm: coordinate length mismatch");
  const Vec blocked = split.to_blocked(delta.coords);
  const int len = split.rest.dim();
  double total = 0.0;
  for (int i = 0; i < split.classical_dim; ++i) total += f(split.rest, Vec(blocked.segment(i * len, len)));
  return total;
}

void require_normalized(const StateVec& s, const char* what) {
  if (!is_normalized_state(s, 1e-9)) throw ValidationError(std::string(what) + ": input is not a normalized state");
}

// Fidelity of two (possibly subnormalized) blocks on the non-classical rest.
double block_fidelity(const SystemLabel& rest, const Vec& r, const Vec& s, const SearchConfig& cfg,
                      FidelityMethod& method, std::optional<ObservationTest>& test) {
  if (rest.is_trivial()) return std::sqrt(std::max(0.0, r(0)) * std::max(0.0, s(0)));
  if (is_squit(rest)) {
    const StateVec rs{rest, r}, ss{rest, s};
    const auto model = boxworld_squit();
    const auto found = minimize_over_tests([&](const ObservationTest& t) { return outcome_fidelity(rs, ss, t); },
                                           *model, 2, cfg);
    method = FidelityMethod::search_upper_bound;
    test = found.test;
    return found.value;
  }
  const CMat a = psd_sqrt(detail::to_operator(rest, r));
  const CMat b = psd_sqrt(detail::to_operator(rest, s));
  return trace_norm(a * b);
}

}  // namespace

std::string to_string(BoundDirection d) {
  switch (d) {
    case BoundDirection::exact: return "exact";
    case BoundDirection::upper: return "upper";
    case BoundDirection::lower: return "lower";
  }
  return "exact";
}

double op_norm(const StateVec& delta) {
  if (delta.system.all_classical()) {
    if (delta.coords.size() != delta.system.dim()) throw DimensionError("op_norm: coordinate length mismatch");
    return delta.coords.lpNorm<1>();
  }
  return blockwise(delta, block_norm);
}

double op_norm_lp(const StateVec& delta) {
  if (delta.system.all_classical()) {
    if (delta.coords.size() != delta.system.dim()) throw DimensionError("op_norm: coordinate length mismatch");
    return box_norm_lp(delta.coords);
  }
  return blockwise(delta, [](const SystemLabel& rest, const Vec& block) {
    if (rest.is_trivial()) return box_norm_lp(block);
    if (is_squit(rest)) return squit_norm_lp(block);
    throw UnsupportedFeature("op_norm_lp: quantum effect sets are not polyhedral");
  });
}

NormMonotonicityReport check_norm_monotonicity(const StateVec& delta, const ChannelMat& c) {
  NormMonotonicityReport r;
  r.before = op_norm(delta);
  r.after = op_norm(apply(c, delta));
  r.holds = r.after <= r.before + 1e-9;
  return r;
}

double classical_fidelity(const Vec& p, const Vec& q) {
  if (p.size() != q.size()) throw DimensionError("classical_fidelity: length mismatch");
  double f = 0.0;
  for (int i = 0; i < p.size(); ++i) f += std::sqrt(std::max(0.0, p(i)) * std::max(0.0, q(i)));
  return f;
}

double outcome_fidelity(const StateVec& rho, const StateVec& sigma, const ObservationTest& test) {
  Vec p(static_cast<int>(test.effects.size())), q(static_cast<int>(test.effects.size()));
  for (size_t j = 0; j < test.effects.size(); ++j) {
    p(static_cast<int>(j)) = pair(test.effects[j], rho);
    q(static_cast<int>(j)) = pair(test.effects[j], sigma);
  }
  return classical_fidelity(p, q);
}

FidelityResult fidelity(const StateVec& rho, const StateVec& sigma, const SearchConfig& cfg) {
  if (!(rho.system == sigma.system)) throw DimensionError("fidelity: system mismatch");
  require_normalized(rho, "fidelity");
  require_normalized(sigma, "fidelity");
  FidelityResult out;
  if (rho.system.all_classical()) {
    out.value = classical_fidelity(rho.coords, sigma.coords);
  } else {
    const auto split = detail::split_classical(rho.system);
    const Vec br = split.to_blocked(rho.coords);
    const Vec bs = split.to_blocked(sigma.coords);
    const int len = split.rest.dim();
    for (int i = 0; i < split.classical_dim; ++i) {
      out.value += block_fidelity(split.rest, br.segment(i * len, len), bs.segment(i * len, len), cfg, out.method,
                                  out.test);
    }
  }
  out.value = std::clamp(out.value, 0.0, 1.0);
  return out;
}

bool FuchsBounds::holds(double tol) const {
  if (lower > middle + tol) return false;
  return !exact || middle <= upper + tol;
}

FuchsBounds fuchs_bounds(const StateVec& rho, const StateVec& sigma, const SearchConfig& cfg) {
  const auto f = fidelity(rho, sigma, cfg);
  FuchsBounds b;
  b.lower = 1.0 - f.value;
  b.middle = 0.5 * op_norm(rho - sigma);
  b.upper = std::sqrt(std::max(0.0, 1.0 - f.value * f.value));
  b.exact = f.method == FidelityMethod::closed_form;
  return b;
}

double fidelity_pure_input(const StateVec& phi, const ChannelMat& c) {
  require_normalized(phi, "fidelity_pure_input");
  if (std::abs(phi.coords.squaredNorm() - 1.0) > 1e-9) throw ValidationError("fidelity_pure_input: input is not pure");
  if (!(c.in == c.out)) throw DimensionError("fidelity_pure_input: channel must map a system to itself");
  const StateVec out = apply_local(c, phi);
  return std::clamp(phi.coords.dot(out.coords), 0.0, 1.0);
}

double dilation_fidelity(const DilationState& psi, const ChannelMat& c, const SearchConfig& cfg) {
  if (!(c.in == psi.marginal_system) || !(c.out == c.in)) {
    throw DimensionError("dilation_fidelity: channel must act on the dilated system");
  }
  const StateVec out = apply_local(c, psi.joint);
  if (std::abs(psi.joint.coords.squaredNorm() - 1.0) <= 1e-12 &&
      (psi.joint.system.all_classical() || psi.joint.system.all_quantum())) {
    return std::clamp(psi.joint.coords.dot(out.coords), 0.0, 1.0);
  }
  const double f = fidelity(psi.joint, out, cfg).value;
  return f * f;
}

CorrelationFidelity correlation_fidelity(const StateVec& rho, const ChannelMat& c, const DilationSampling& sampling,
                                         const SearchConfig& cfg) {
  if (!validate_channel(c).deterministic) throw ValidationError("correlation_fidelity: channel is not deterministic");
  CorrelationFidelity out;
  if (rho.system.all_quantum()) {
    out.value = dilation_fidelity(canonical_dilation(rho), c, cfg);
    out.direction = BoundDirection::exact;
    out.dilations = 1;
    return out;
  }
  for (const auto& d : sample_dilations(rho, sampling)) {
    out.value = std::min(out.value, dilation_fidelity(d, c, cfg));
    ++out.dilations;
  }
  return out;
}

}  // namespace opinfo
