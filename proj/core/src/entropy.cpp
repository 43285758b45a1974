#include "opinfo/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "internal.hpp"

namespace opinfo {

namespace {

// Values this small are rounding residue of an exactly uncorrelated joint.
constexpr double kInfoFloor = 1e-12;

bool is_squit(const SystemLabel& l) { return l.is_atomic() && l.theory() == TheoryId::boxworld; }

JointDistribution joint_of(const Ensemble& ens, const ObservationTest& test) {
  JointDistribution j;
  j.p.resize(static_cast<int>(ens.members.size()), static_cast<int>(test.effects.size()));
  for (size_t i = 0; i < ens.members.size(); ++i) {
    for (size_t k = 0; k < test.effects.size(); ++k) {
      j.p(static_cast<int>(i), static_cast<int>(k)) = std::max(0.0, pair(test.effects[k], ens.members[i]));
    }
  }
  return j;
}

double info_objective(const Ensemble& ens, const ObservationTest& test) {
  JointDistribution j = joint_of(ens, test);
  const double total = j.p.sum();
  if (total <= 0.0) return 0.0;
  j.p /= total;
  return mutual_information(j);
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

double shannon(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v < -1e-12) throw ValidationError("shannon: negative probability");
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double shannon(const Vec& p) { return shannon(std::span<const double>(p.data(), static_cast<size_t>(p.size()))); }

double binary_entropy(double gamma) {
  if (gamma < 0.0 || gamma > 1.0) throw ValidationError("binary_entropy: argument outside [0, 1]");
  const double p[2] = {gamma, 1.0 - gamma};
  return shannon(p);
}

double von_neumann(const StateVec& rho) {
  if (!rho.system.all_quantum()) throw DimensionError("von_neumann: expected a quantum system");
  if (!is_normalized_state(rho)) throw ValidationError("von_neumann: input is not a normalized state");
  Vec eig = hermitian_eigen(density_matrix(rho)).values;
  // eigensolver noise around zero would otherwise leave ~1e-16 bits on pure states
  for (int i = 0; i < eig.size(); ++i) eig(i) = eig(i) < 1e-14 ? 0.0 : eig(i);
  return shannon(eig / eig.sum());
}

void JointDistribution::validate() const {
  if (p.size() == 0) throw ValidationError("joint distribution is empty");
  if (p.minCoeff() < -1e-12) throw ValidationError("joint distribution has negative entries");
  if (std::abs(p.sum() - 1.0) > 1e-9) throw ValidationError("joint distribution does not sum to 1");
}

Vec JointDistribution::row_marginal() const { return p.rowwise().sum(); }
Vec JointDistribution::col_marginal() const { return p.colwise().sum().transpose(); }

double mutual_information(const JointDistribution& j) {
  j.validate();
  const Vec px = j.row_marginal();
  const Vec py = j.col_marginal();
  double info = 0.0;
  for (int r = 0; r < j.p.rows(); ++r) {
    for (int c = 0; c < j.p.cols(); ++c) {
      const double v = j.p(r, c);
      if (v > 0.0) info += v * std::log2(v / (px(r) * py(c)));
    }
  }
  return std::max(0.0, info);
}

std::pair<JointDistribution, JointDistribution> scheme_joint_dists(const Ensemble& ens, const ObservationTest& test,
                                                                   const ChannelMat& c) {
  if (!(ens.system == test.system)) throw DimensionError("scheme_joint_dists: ensemble and test on different systems");
  Ensemble moved{ens.system, {}};
  for (const auto& m : ens.members) {
    StateVec out = apply_local(c, m);
    if (!(out.system == ens.system)) throw DimensionError("scheme_joint_dists: channel changes the system");
    moved.members.push_back(std::move(out));
  }
  auto jp = joint_of(ens, test);
  auto jq = joint_of(moved, test);
  jp.validate();
  jq.validate();
  return {jp, jq};
}

CriterionValue classical_criterion(const Ensemble& ens, const ObservationTest& test, const ChannelMat& c) {
  CriterionValue out;
  out.m = static_cast<int>(test.effects.size());
  out.n = static_cast<int>(ens.members.size());
  if (out.m < 1 || out.n < 1) throw ValidationError("classical_criterion: empty test or ensemble");
  if (out.m * out.n > 1) out.L = std::log2(static_cast<double>(out.m) * out.n - 1.0);
  if (out.m == 1 || out.n == 1) return out;
  const auto [jp, jq] = scheme_joint_dists(ens, test, c);
  out.value = std::abs(mutual_information(jp) - mutual_information(jq)) / out.L;
  return out;
}

double continuity_bound(double gamma, double L) {
  if (!(L > 0.0)) throw ValidationError("continuity_bound: L must be positive");
  const double limit = 1.0 - 1.0 / (std::exp2(L) + 1.0);
  if (gamma < 0.0 || gamma >= limit) throw ValidationError("continuity_bound: gamma outside [0, 1 - 1/(mn))");
  return 3.0 * gamma + 3.0 * binary_entropy(gamma) / L;
}

EntropyValue measurement_entropy(const StateVec& rho, const SearchConfig& cfg) {
  if (!is_normalized_state(rho)) throw ValidationError("measurement_entropy: input is not a normalized state");
  const auto& label = rho.system;
  if (label.all_classical()) return {shannon(rho.coords), BoundDirection::exact};
  const auto model = model_for(label);
  const auto objective = [&rho](const ObservationTest& t) {
    Vec p(static_cast<int>(t.effects.size()));
    for (size_t j = 0; j < t.effects.size(); ++j) p(static_cast<int>(j)) = std::max(0.0, pair(t.effects[j], rho));
    return shannon(p);
  };
  std::vector<ObservationTest> seeds;
  int outcomes = 4;
  if (label.all_quantum()) {
    const auto eig = hermitian_eigen(density_matrix(rho));
    ObservationTest basis{label, {}};
    for (int k = static_cast<int>(eig.values.size()) - 1; k >= 0; --k) {
      const CVec v = eig.vectors.col(k);
      basis.effects.push_back({label, detail::to_coords(label, v * v.adjoint())});
    }
    seeds.push_back(basis);
    outcomes = label.hilbert_dim();
  }
  const auto found = minimize_over_tests(objective, *model, outcomes, cfg, TestFamily::atomic, seeds);
  return {std::max(0.0, found.value), BoundDirection::upper};
}

EntropyValue decomposition_entropy(const StateVec& rho, const SearchConfig& cfg) {
  if (!is_normalized_state(rho)) throw ValidationError("decomposition_entropy: input is not a normalized state");
  const auto& label = rho.system;
  auto weight_entropy = [](const Ensemble& e) {
    const auto w = e.weights();
    return shannon(std::span<const double>(w));
  };
  const auto decs = pure_decompositions(rho, 8, cfg.seed);
  if (label.all_classical()) return {weight_entropy(decs.front()), BoundDirection::exact};
  double best = std::numeric_limits<double>::infinity();
  for (const auto& d : decs) best = std::min(best, weight_entropy(d));
  if (is_squit(label)) {
    const ParamObjective f = [&rho](std::span<const double> x) {
      const auto w = squit_corner_weights(rho, sigmoid(x[0]));
      return shannon(std::span<const double>(w));
    };
    for (int r = 0; r < cfg.restarts; ++r) {
      auto rng = detail::make_engine(cfg.seed, static_cast<std::uint64_t>(r) + 1);
      std::normal_distribution<double> normal(0.0, 2.0);
      best = std::min(best, nelder_mead(f, {normal(rng)}, cfg.max_evals, cfg.tolerance).value);
    }
  }
  return {std::max(0.0, best), BoundDirection::upper};
}

EntropyValue accessible_information(const TheoryModel& model, const SearchConfig& cfg) {
  const int size = model.id() == TheoryId::boxworld ? 4 : (model.id() == TheoryId::quantum ? model.system().hilbert_dim()
                                                                                             : model.system().dim());
  const auto found = maximize_over_ensembles_and_tests(info_objective, model, {size, size}, cfg);
  return {found.value, BoundDirection::lower};
}

EntropyValue state_information(const StateVec& rho, const SearchConfig& cfg) {
  if (!is_normalized_state(rho)) throw ValidationError("state_information: input is not a normalized state");
  const auto& label = rho.system;
  const int size = label.all_quantum() ? label.hilbert_dim() : (is_squit(label) ? 4 : label.dim());
  const auto found = maximize_over_refinements_and_tests(info_objective, rho, {size, size}, cfg);
  const double value = found.value < kInfoFloor ? 0.0 : found.value;
  return {value, label.all_classical() ? BoundDirection::exact : BoundDirection::lower};
}

double ic_lower_bound(double i0, double obit_log) {
  if (i0 < 0.0) throw ValidationError("ic_lower_bound: negative information");
  if (!(obit_log > 0.0)) throw ValidationError("ic_lower_bound: obit dimension log must be positive");
  return i0 / obit_log;
}

double obit_dim_log(const TheoryModel& model) { return std::log2(static_cast<double>(model.obit().dim())); }

bool regular_scaling_holds(const TheoryModel& model, int n_max, double k) {
  const double d1 = static_cast<double>(composite_dimension(model, 1));
  for (int n = 1; n <= n_max; ++n) {
    if (static_cast<double>(composite_dimension(model, n)) > k * std::pow(d1, n) + 1e-9) return false;
  }
  return true;
}

}  // namespace opinfo
