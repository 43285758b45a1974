#include "opinfo/theories.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "internal.hpp"

namespace opinfo {

namespace {

std::vector<double> softmax(std::span<const double> logits) {
  std::vector<double> out(logits.begin(), logits.end());
  if (out.empty()) return out;
  const double m = *std::max_element(out.begin(), out.end());
  double sum = 0.0;
  for (double& v : out) {
    v = std::exp(v - m);
    sum += v;
  }
  for (double& v : out) v /= sum;
  return out;
}

// Pads with zero effects or merges the tail so the test has `outcomes` effects.
ObservationTest fit_outcomes(ObservationTest t, int outcomes) {
  if (outcomes < 1) throw ValidationError("a test needs at least one outcome");
  while (static_cast<int>(t.effects.size()) < outcomes) {
    t.effects.push_back({t.system, Vec::Zero(t.system.dim())});
  }
  while (static_cast<int>(t.effects.size()) > outcomes) {
    EffectVec last = t.effects.back();
    t.effects.pop_back();
    t.effects.back() = t.effects.back() + last;
  }
  return t;
}

// ---------------------------------------------------------------- classical

class ClassicalModel final : public TheoryModel {
 public:
  explicit ClassicalModel(int d) : TheoryModel(SystemLabel::classical(d)), d_(d) {}

  TheoryId id() const override { return TheoryId::classical; }
  SystemLabel obit() const override { return SystemLabel::classical(2); }

  bool is_pure(const StateVec& s, double tol) const override {
    return is_normalized_state(s, tol) && s.coords.maxCoeff() >= 1.0 - tol;
  }

  std::vector<Facet> effect_facets() const override {
    std::vector<Facet> facets;
    for (int i = 0; i < d_; ++i) {
      facets.push_back({-Vec::Unit(d_, i), 0.0});
      facets.push_back({Vec::Unit(d_, i), 1.0});
    }
    return facets;
  }

  std::vector<EffectVec> extremal_effects() const override {
    std::vector<EffectVec> out;
    for (int i = 0; i < d_; ++i) out.push_back({system(), Vec::Unit(d_, i)});
    return out;
  }

  std::vector<StateVec> pure_states() const override {
    std::vector<StateVec> out;
    for (int i = 0; i < d_; ++i) out.push_back({system(), Vec::Unit(d_, i)});
    return out;
  }

  int state_param_count() const override { return d_; }
  StateVec state_from_params(std::span<const double> params) const override {
    const auto p = softmax(params.first(static_cast<size_t>(d_)));
    return classical_state(p);
  }

  int test_param_count(int outcomes) const override { return d_ * outcomes; }
  ObservationTest test_from_params(std::span<const double> params, int outcomes) const override {
    ObservationTest t{system(), std::vector<EffectVec>(static_cast<size_t>(outcomes), EffectVec{system(), Vec::Zero(d_)})};
    for (int i = 0; i < d_; ++i) {
      const auto row = softmax(params.subspan(static_cast<size_t>(i * outcomes), static_cast<size_t>(outcomes)));
      for (int j = 0; j < outcomes; ++j) t.effects[static_cast<size_t>(j)].coords(i) = row[static_cast<size_t>(j)];
    }
    return t;
  }

  int atomic_test_param_count(int outcomes) const override { return outcomes; }
  ObservationTest atomic_test_from_params(std::span<const double> params, int outcomes) const override {
    if (outcomes < d_) throw ValidationError("an atomic classical test needs at least d outcomes");
    ObservationTest t{system(), {}};
    for (int j = 0; j < outcomes; ++j) {
      const int letter = j % d_;
      double z = 0.0;
      for (int k = letter; k < outcomes; k += d_) z += std::exp(params[static_cast<size_t>(k)]);
      t.effects.push_back({system(), Vec::Unit(d_, letter) * std::exp(params[static_cast<size_t>(j)]) / z});
    }
    return t;
  }

  std::vector<ObservationTest> canonical_tests(int outcomes) const override {
    return {fit_outcomes(ObservationTest{system(), extremal_effects()}, outcomes)};
  }

  std::vector<std::pair<Ensemble, ObservationTest>> seed_pairs(int size, int outcomes) const override {
    const int k = std::min(size, d_);
    Ensemble ens{system(), {}};
    for (int i = 0; i < size; ++i) {
      ens.members.push_back({system(), i < k ? Vec(Vec::Unit(d_, i) / k) : Vec(Vec::Zero(d_))});
    }
    return {{ens, canonical_tests(outcomes).front()}};
  }

 private:
  int d_;
};

// ------------------------------------------------------------------ quantum

class QuantumModel final : public TheoryModel {
 public:
  explicit QuantumModel(int d) : TheoryModel(SystemLabel::quantum(d)), d_(d) {}

  TheoryId id() const override { return TheoryId::quantum; }
  SystemLabel obit() const override { return SystemLabel::quantum(2); }

  bool is_pure(const StateVec& s, double tol) const override {
    if (!is_normalized_state(s, tol)) return false;
    return hermitian_eigen(density_matrix(s)).values.maxCoeff() >= 1.0 - 1e3 * tol;
  }

  std::vector<Facet> effect_facets() const override { return {}; }

  std::vector<EffectVec> extremal_effects() const override {
    std::vector<EffectVec> out;
    for (int i = 0; i < d_; ++i) {
      CMat p = CMat::Zero(d_, d_);
      p(i, i) = 1.0;
      out.push_back(quantum_effect(p));
    }
    return out;
  }

  std::vector<StateVec> pure_states() const override {
    std::vector<StateVec> out;
    for (int i = 0; i < d_; ++i) out.push_back(quantum_pure_state(CVec::Unit(d_, i)));
    return out;
  }

  int state_param_count() const override { return 2 * d_; }
  StateVec state_from_params(std::span<const double> params) const override {
    CVec psi = vector_from(params, 0);
    if (psi.norm() < 1e-300) psi = CVec::Unit(d_, 0);
    return quantum_pure_state(psi.normalized());
  }

  int test_param_count(int outcomes) const override { return outcomes * 2 * d_ * d_; }
  ObservationTest test_from_params(std::span<const double> params, int outcomes) const override {
    std::vector<CMat> parts;
    for (int j = 0; j < outcomes; ++j) {
      CMat g(d_, d_);
      for (int c = 0; c < d_; ++c) g.col(c) = vector_from(params, (j * d_ + c) * 2 * d_);
      parts.push_back(g * g.adjoint());
    }
    return normalize_povm(parts);
  }

  int atomic_test_param_count(int outcomes) const override { return outcomes * 2 * d_; }
  ObservationTest atomic_test_from_params(std::span<const double> params, int outcomes) const override {
    if (outcomes < d_) throw ValidationError("a rank-one POVM needs at least d outcomes");
    std::vector<CMat> parts;
    for (int j = 0; j < outcomes; ++j) {
      const CVec v = vector_from(params, j * 2 * d_);
      parts.push_back(v * v.adjoint());
    }
    return normalize_povm(parts);
  }

  std::vector<ObservationTest> canonical_tests(int outcomes) const override {
    return {fit_outcomes(ObservationTest{system(), extremal_effects()}, outcomes)};
  }

  std::vector<std::pair<Ensemble, ObservationTest>> seed_pairs(int size, int outcomes) const override {
    const int k = std::min(size, d_);
    Ensemble ens{system(), {}};
    for (int i = 0; i < size; ++i) {
      ens.members.push_back(i < k ? (1.0 / k) * quantum_pure_state(CVec::Unit(d_, i)) : zero_state(system()));
    }
    return {{ens, canonical_tests(outcomes).front()}};
  }

 private:
  CVec vector_from(std::span<const double> params, int offset) const {
    CVec v(d_);
    for (int i = 0; i < d_; ++i) {
      v(i) = Complex(params[static_cast<size_t>(offset + 2 * i)], params[static_cast<size_t>(offset + 2 * i + 1)]);
    }
    return v;
  }

  // E_j = S^{-1/2} A_j S^{-1/2} with S = sum A_j, restricted to supp(S); any
  // deficit on the kernel is added to the first effect.
  ObservationTest normalize_povm(const std::vector<CMat>& parts) const {
    CMat s = CMat::Zero(d_, d_);
    for (const auto& a : parts) s += a;
    const auto eig = hermitian_eigen(s);
    const double cutoff = 1e-12 * std::max(1.0, eig.values.maxCoeff());
    Vec inv_sqrt(d_);
    CMat kernel = CMat::Zero(d_, d_);
    for (int i = 0; i < d_; ++i) {
      if (eig.values(i) > cutoff) {
        inv_sqrt(i) = 1.0 / std::sqrt(eig.values(i));
      } else {
        inv_sqrt(i) = 0.0;
        kernel += eig.vectors.col(i) * eig.vectors.col(i).adjoint();
      }
    }
    const CMat w = eig.vectors * inv_sqrt.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    ObservationTest t{system(), {}};
    for (size_t j = 0; j < parts.size(); ++j) {
      CMat e = w * parts[j] * w;
      if (j == 0) e += kernel;
      t.effects.push_back(quantum_effect(e));
    }
    return t;
  }

  int d_;
};

// -------------------------------------------------------------------- squit

const std::array<std::array<double, 2>, 4> kCorners{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

class SquitModel final : public TheoryModel {
 public:
  SquitModel() : TheoryModel(SystemLabel::squit()) {}

  TheoryId id() const override { return TheoryId::boxworld; }
  SystemLabel obit() const override { return SystemLabel::squit(); }

  bool is_pure(const StateVec& s, double tol) const override {
    return is_normalized_state(s, tol) && std::abs(s.coords(0)) >= 1.0 - tol && std::abs(s.coords(1)) >= 1.0 - tol;
  }

  std::vector<Facet> effect_facets() const override {
    std::vector<Facet> facets;
    for (double s1 : {1.0, -1.0}) {
      for (double s2 : {1.0, -1.0}) {
        Vec lower(3);
        lower << s1, s2, -1.0;  // gamma - s1 alpha - s2 beta >= 0
        facets.push_back({lower, 0.0});
        Vec upper(3);
        upper << s1, s2, 1.0;  // gamma + s1 alpha + s2 beta <= 1
        facets.push_back({upper, 1.0});
      }
    }
    return facets;
  }

  std::vector<EffectVec> extremal_effects() const override {
    return {squit_effect(0.5, 0.5, 0.0), squit_effect(0.5, -0.5, 0.0), squit_effect(0.5, 0.0, 0.5),
            squit_effect(0.5, 0.0, -0.5)};
  }

  std::vector<StateVec> pure_states() const override {
    std::vector<StateVec> out;
    for (const auto& c : kCorners) out.push_back(squit_state(c[0], c[1]));
    return out;
  }

  int state_param_count() const override { return 2; }
  StateVec state_from_params(std::span<const double> params) const override {
    return squit_state(std::tanh(params[0]), std::tanh(params[1]));
  }

  // Every squit test is a post-processing of {x-measurement, y-measurement,
  // trivial} mixed with weights q: the five fine effects are
  // qx(1+-x)/2, qy(1+-y)/2, qt u and each is split across the outcomes.
  int test_param_count(int outcomes) const override { return 3 + 5 * outcomes; }
  ObservationTest test_from_params(std::span<const double> params, int outcomes) const override {
    const auto q = softmax(params.first(3));
    const auto atoms = extremal_effects();
    const std::array<EffectVec, 5> fine{q[0] * atoms[0], q[0] * atoms[1], q[1] * atoms[2], q[1] * atoms[3],
                                        q[2] * unit()};
    ObservationTest t{system(), std::vector<EffectVec>(static_cast<size_t>(outcomes), EffectVec{system(), Vec::Zero(3)})};
    for (size_t f = 0; f < fine.size(); ++f) {
      const auto split = softmax(params.subspan(3 + f * static_cast<size_t>(outcomes), static_cast<size_t>(outcomes)));
      for (int j = 0; j < outcomes; ++j) {
        t.effects[static_cast<size_t>(j)].coords += split[static_cast<size_t>(j)] * fine[f].coords;
      }
    }
    return t;
  }

  // Outcome j carries atomic direction j mod 4; axes whose two directions
  // both occur get a mixing weight, and each direction's weight is spread
  // over its outcomes.
  int atomic_test_param_count(int outcomes) const override { return 2 + outcomes; }
  ObservationTest atomic_test_from_params(std::span<const double> params, int outcomes) const override {
    if (outcomes < 2) throw ValidationError("an atomic squit test needs at least two outcomes");
    const auto atoms = extremal_effects();
    const bool has_y = outcomes >= 4;
    std::vector<double> axis_logits{params[0]};
    if (has_y) axis_logits.push_back(params[1]);
    const auto q = softmax(axis_logits);
    ObservationTest t{system(), {}};
    for (int j = 0; j < outcomes; ++j) {
      const int dir = j % 4;
      const int axis = dir / 2;
      if (axis == 1 && !has_y) {
        t.effects.push_back({system(), Vec::Zero(3)});
        continue;
      }
      double z = 0.0;
      for (int k = dir; k < outcomes; k += 4) z += std::exp(params[static_cast<size_t>(2 + k)]);
      const double w = q[static_cast<size_t>(axis)] * std::exp(params[static_cast<size_t>(2 + j)]) / z;
      t.effects.push_back(w * atoms[static_cast<size_t>(dir)]);
    }
    return t;
  }

  std::vector<ObservationTest> canonical_tests(int outcomes) const override {
    const auto atoms = extremal_effects();
    std::vector<ObservationTest> out;
    out.push_back(fit_outcomes(ObservationTest{system(), {atoms[0], atoms[1]}}, outcomes));
    out.push_back(fit_outcomes(ObservationTest{system(), {atoms[2], atoms[3]}}, outcomes));
    return out;
  }

  std::vector<std::pair<Ensemble, ObservationTest>> seed_pairs(int size, int outcomes) const override {
    std::vector<std::pair<Ensemble, ObservationTest>> out;
    const auto tests = canonical_tests(outcomes);
    auto pad = [&](std::vector<StateVec> members) {
      while (static_cast<int>(members.size()) < size) members.push_back(zero_state(system()));
      members.resize(static_cast<size_t>(size), zero_state(system()));
      return Ensemble{system(), std::move(members)};
    };
    if (size >= 2) {
      out.push_back({pad({0.5 * squit_state(1, 1), 0.5 * squit_state(-1, -1)}), tests[0]});
      out.push_back({pad({0.5 * squit_state(1, 1), 0.5 * squit_state(1, -1)}), tests[1]});
    } else {
      out.push_back({pad({squit_state(1, 1)}), tests[0]});
    }
    return out;
  }
};

}  // namespace

std::string TheoryModel::name() const {
  const auto& f = system_.factors().front();
  return f.to_string();
}

TheoryPtr classical_theory(int d) {
  if (d < 2) throw DimensionError("classical theory needs d >= 2");
  return std::make_shared<ClassicalModel>(d);
}

TheoryPtr quantum_theory(int d) {
  if (d < 2) throw DimensionError("quantum theory needs d >= 2");
  return std::make_shared<QuantumModel>(d);
}

TheoryPtr boxworld_squit() { return std::make_shared<SquitModel>(); }

TheoryPtr parse_theory(std::string_view spec) {
  if (spec == "squit" || spec == "boxworld") return boxworld_squit();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ValidationError("theory must be classical:d, quantum:d or squit");
  const auto kind = spec.substr(0, colon);
  const auto num = spec.substr(colon + 1);
  int d = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), d);
  if (ec != std::errc() || ptr != num.data() + num.size()) throw ValidationError("bad dimension in theory spec");
  if (kind == "classical") return classical_theory(d);
  if (kind == "quantum") return quantum_theory(d);
  throw ValidationError("unknown theory '" + std::string(kind) + "'");
}

TheoryPtr model_for(const SystemLabel& atomic) {
  if (!atomic.is_atomic()) throw DimensionError("model_for needs an atomic system");
  const auto& f = atomic.factors().front();
  switch (f.theory) {
    case TheoryId::classical: return classical_theory(f.size);
    case TheoryId::quantum: return quantum_theory(f.size);
    case TheoryId::boxworld: return boxworld_squit();
  }
  return nullptr;
}

StateVec classical_state(std::span<const double> probabilities) {
  Vec v(static_cast<Eigen::Index>(probabilities.size()));
  for (size_t i = 0; i < probabilities.size(); ++i) v(static_cast<Eigen::Index>(i)) = probabilities[i];
  return {SystemLabel::classical(static_cast<int>(probabilities.size())), v};
}

StateVec quantum_state(const CMat& density) {
  const auto label = SystemLabel::quantum(static_cast<int>(density.rows()));
  return {label, detail::to_coords(label, density)};
}

StateVec quantum_pure_state(const CVec& amplitudes) { return quantum_state(amplitudes * amplitudes.adjoint()); }

StateVec squit_state(double x, double y, double n) {
  Vec v(3);
  v << x, y, n;
  return {SystemLabel::squit(), v};
}

EffectVec squit_effect(double gamma, double alpha, double beta) {
  Vec v(3);
  v << alpha, beta, gamma;
  return {SystemLabel::squit(), v};
}

EffectVec quantum_effect(const CMat& op) {
  const auto label = SystemLabel::quantum(static_cast<int>(op.rows()));
  return {label, detail::to_coords(label, op)};
}

CMat density_matrix(const StateVec& s) { return detail::to_operator(s.system, s.coords); }

double SteeringCertificate::max_residual() const {
  return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

namespace {

struct Spectrum {
  Vec values;      // descending, support only
  CMat vectors;    // d x r
};

Spectrum support_spectrum(const CMat& rho) {
  const auto eig = hermitian_eigen(rho);
  const long d = eig.values.size();
  const double cutoff = 1e-12 * std::max(1.0, eig.values.maxCoeff());
  std::vector<long> keep;
  for (long i = d - 1; i >= 0; --i) {
    if (eig.values(i) > cutoff) keep.push_back(i);
  }
  Spectrum s{Vec(static_cast<long>(keep.size())), CMat(d, static_cast<long>(keep.size()))};
  for (size_t k = 0; k < keep.size(); ++k) {
    s.values(static_cast<long>(k)) = eig.values(keep[k]);
    s.vectors.col(static_cast<long>(k)) = eig.vectors.col(keep[k]);
  }
  return s;
}

}  // namespace

std::vector<Ensemble> pure_decompositions(const StateVec& rho, int budget, std::uint64_t seed) {
  if (!is_normalized_state(rho, 1e-7)) throw ValidationError("pure_decompositions needs a normalized state");
  const auto& label = rho.system;
  std::vector<Ensemble> out;
  if (label.all_classical()) {
    Ensemble ens{label, {}};
    for (int i = 0; i < label.dim(); ++i) {
      if (rho.coords(i) > 0.0) ens.members.push_back({label, rho.coords(i) * Vec::Unit(label.dim(), i)});
    }
    out.push_back(std::move(ens));
    return out;
  }
  if (label.all_quantum()) {
    const auto spec = support_spectrum(density_matrix(rho));
    const long r = spec.values.size();
    Ensemble eig{label, {}};
    for (long k = 0; k < r; ++k) {
      const CVec v = spec.vectors.col(k);
      eig.members.push_back({label, detail::to_coords(label, spec.values(k) * v * v.adjoint())});
    }
    out.push_back(std::move(eig));
    auto rng = detail::make_engine(seed, 1);
    const CMat scaled = spec.vectors * spec.values.cwiseSqrt().cast<Complex>().asDiagonal();
    for (int b = 0; b < budget; ++b) {
      const long n = r + std::uniform_int_distribution<long>(0, r)(rng);
      Eigen::HouseholderQR<CMat> qr(detail::random_ginibre(static_cast<int>(n), static_cast<int>(r), rng));
      const CMat u = qr.householderQ() * CMat::Identity(n, r);
      Ensemble ens{label, {}};
      for (long i = 0; i < n; ++i) {
        const CVec psi = scaled * u.row(i).transpose();
        ens.members.push_back({label, detail::to_coords(label, psi * psi.adjoint())});
      }
      out.push_back(std::move(ens));
    }
    return out;
  }
  if (label.theory() == TheoryId::boxworld && label.is_atomic()) {
    const int steps = std::max(budget, 0);
    for (int b = 0; b < steps + 2; ++b) {
      // endpoints first: the vertex decompositions of the corner family
      const double t = b == 0 ? 0.0 : b == 1 ? 1.0 : static_cast<double>(b - 1) / (steps + 1);
      const auto w = squit_corner_weights(rho, t);
      Ensemble ens{label, {}};
      for (size_t c = 0; c < 4; ++c) {
        if (w[c] > 1e-15) ens.members.push_back(w[c] * squit_state(kCorners[c][0], kCorners[c][1]));
      }
      out.push_back(std::move(ens));
    }
    return out;
  }
  throw UnsupportedFeature("pure_decompositions: unsupported system " + label.to_string());
}

std::array<double, 4> squit_corner_weights(const StateVec& rho, double t) {
  const double x = rho.coords(0) / rho.coords(2);
  const double y = rho.coords(1) / rho.coords(2);
  // weights (s, (1+x)/2 - s, (1+y)/2 - s, s - (x+y)/2) on the corners
  // (1,1), (1,-1), (-1,1), (-1,-1)
  const double lo = std::max(0.0, 0.5 * (x + y));
  const double hi = std::min(0.5 * (1 + x), 0.5 * (1 + y));
  const double s = lo + std::clamp(t, 0.0, 1.0) * (hi - lo);
  std::array<double, 4> w{s, 0.5 * (1 + x) - s, 0.5 * (1 + y) - s, s - 0.5 * (x + y)};
  for (double& v : w) v = std::max(v, 0.0) * rho.coords(2);
  return w;
}

SteeringCertificate steer(const StateVec& rho, const Ensemble& ens) {
  if (!(ens.system == rho.system)) throw DimensionError("steer: ensemble and state on different systems");
  if (ens.members.empty()) throw ValidationError("steer: empty ensemble");
  const double gap = (ens.total().coords - rho.coords).cwiseAbs().maxCoeff();
  if (gap > 1e-9) throw ValidationError("steer: ensemble does not sum to the state");
  const auto& label = rho.system;
  SteeringCertificate cert{{rho, label}, {SystemLabel::trivial(), {}}, {}};

  if (label.all_classical()) {
    const int n = static_cast<int>(ens.members.size());
    const auto anc = SystemLabel::classical(n);
    StateVec joint = zero_state(SystemLabel::compose(label, anc));
    ObservationTest test{anc, {}};
    for (int i = 0; i < n; ++i) {
      joint = joint + compose_par(ens.members[static_cast<size_t>(i)], StateVec{anc, Vec::Unit(n, i)});
      test.effects.push_back({anc, Vec::Unit(n, i)});
    }
    cert.dilation = {joint, label};
    cert.test = std::move(test);
  } else if (label.all_quantum()) {
    const auto spec = support_spectrum(density_matrix(rho));
    const long r = spec.values.size();
    const auto anc = SystemLabel::quantum(static_cast<int>(r));
    const auto joint_label = SystemLabel::compose(label, anc);
    const long d = spec.vectors.rows();
    CVec psi = CVec::Zero(d * r);
    for (long k = 0; k < r; ++k) {
      for (long i = 0; i < d; ++i) psi(i * r + k) = std::sqrt(spec.values(k)) * spec.vectors(i, k);
    }
    cert.dilation = {{joint_label, detail::to_coords(joint_label, psi * psi.adjoint())}, label};
    const Vec inv_sqrt = spec.values.cwiseSqrt().cwiseInverse();
    ObservationTest test{anc, {}};
    for (const auto& member : ens.members) {
      const CMat restricted = inv_sqrt.cast<Complex>().asDiagonal() * spec.vectors.adjoint() * density_matrix(member) *
                              spec.vectors * inv_sqrt.cast<Complex>().asDiagonal();
      const CMat b = restricted.transpose();
      test.effects.push_back({anc, detail::to_coords(anc, b)});
    }
    cert.test = std::move(test);
  } else {
    throw UnsupportedFeature("steering is only constructed for classical and quantum systems");
  }

  for (size_t i = 0; i < ens.members.size(); ++i) {
    const StateVec steered = apply_effect_on_tail(cert.dilation.joint, cert.test.effects[i]);
    cert.residuals.push_back((steered.coords - ens.members[i].coords).cwiseAbs().maxCoeff());
  }
  return cert;
}

long long composite_dimension(const TheoryModel& theory, int n) {
  if (theory.id() == TheoryId::boxworld) {
    long long d = 1;
    for (int i = 0; i < n; ++i) d *= theory.system().dim();
    return d;
  }
  return SystemLabel::power(theory.system(), n).dim();
}

}  // namespace opinfo
