#include "opinfo_cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "opinfo/compression.hpp"
#include "opinfo/entropy.hpp"
#include "opinfo_cli/config.hpp"

namespace opinfo::cli {

namespace {

using Rng = std::mt19937_64;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Rng suite_rng(const SuiteOptions& o, const std::string& name) {
  const std::uint64_t h = fnv1a(name);
  std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }
  void trial() { ++r_.trials; }
  // residual > tol counts as a violation
  void check(double residual, double tol) {
    worst_ = std::max(worst_, residual);
    if (!(residual <= tol)) ++r_.violations;  // NaN counts as a violation
  }
  void require(bool ok) { check(ok ? -1.0 : 1.0, 0.0); }
  SuiteResult done() {
    r_.worst_residual = std::isfinite(worst_) ? worst_ : (r_.violations ? 1.0 : 0.0);
    return r_;
  }

 private:
  SuiteResult r_;
  double worst_ = -std::numeric_limits<double>::infinity();
};

int trials_for(const SuiteOptions& o, const std::string& name) {
  return o.trials > 0 ? o.trials : default_trials(name);
}

const std::vector<SystemLabel>& all_systems() {
  static const std::vector<SystemLabel> s{SystemLabel::classical(2), SystemLabel::classical(3),
                                          SystemLabel::quantum(2), SystemLabel::quantum(3), SystemLabel::squit()};
  return s;
}

bool is_squit(const SystemLabel& s) { return s.is_atomic() && s.theory() == TheoryId::boxworld; }

SystemLabel random_system(Rng& rng, bool with_squit) {
  const auto& s = all_systems();
  return s[static_cast<size_t>(uniform_int(rng, 0, with_squit ? 4 : 3))];
}

// An output system random_channel can reach from `in`.
SystemLabel random_target(const SystemLabel& in, Rng& rng) {
  if (in.all_classical()) return random_system(rng, true);
  if (in.all_quantum()) return uniform_int(rng, 0, 2) ? SystemLabel::quantum(uniform_int(rng, 2, 3)) : SystemLabel::classical(uniform_int(rng, 2, 3));
  return uniform_int(rng, 0, 2) ? SystemLabel::squit() : SystemLabel::classical(uniform_int(rng, 2, 3));
}

Vec random_probabilities(int d, Rng& rng) {
  std::gamma_distribution<double> g(1.0, 1.0);
  Vec p(d);
  for (int i = 0; i < d; ++i) p(i) = g(rng) + 1e-12;
  return p / p.sum();
}

StateVec random_source(const SystemLabel& a, Rng& rng) {
  switch (uniform_int(rng, 0, 3)) {
    case 0: return random_pure_state(a, rng);
    case 1: return random_mixed_state(a, rng);
    default: return random_state(a, rng);
  }
}

// Family of sources small enough for full dilation sweeps.
SystemLabel scheme_source(Rng& rng) {
  static const std::vector<SystemLabel> s{SystemLabel::classical(2), SystemLabel::classical(3), SystemLabel::quantum(2)};
  return s[static_cast<size_t>(uniform_int(rng, 0, 2))];
}

ChannelMat mix(const ChannelMat& a, const ChannelMat& b, double t) {
  return {a.in, a.out, (1.0 - t) * a.matrix + t * b.matrix, a.deterministic && b.deterministic};
}

// Random code, a near-identity code (M = N on bit/qubit sources), or a
// typical-set / typical-subspace code.
CompressionScheme sample_scheme(const SystemLabel& a, int N, Rng& rng) {
  const int m_max = max_code_length(a, N);
  const int kind = uniform_int(rng, 0, 2);
  if (kind == 1 && a.dim() == (a.all_quantum() ? 4 : 2)) {
    const SystemLabel block = block_system(a, N);
    const ChannelMat noise = random_channel(block, block, rng);
    const ChannelMat enc = mix(identity_channel(block), noise, uniform(rng, 0.0, 0.05));
    return {enc, identity_channel(block), N, N, a, a};
  }
  const int M = uniform_int(rng, 1, m_max);
  if (kind == 2) {
    if (a.all_classical()) return typical_set_scheme(random_probabilities(a.dim(), rng), N, M);
    return typical_subspace_scheme(random_mixed_state(a, rng), N, M);
  }
  return random_scheme(a, N, M, rng);
}

StateVec parse_pure(const SystemLabel& a) { return parse_state_spec(a, "pure"); }

bool single_theory(const SystemLabel& s) { return s.all_classical() || s.all_quantum(); }

std::vector<DilationState> sweep_dilations(const StateVec& rho, int n, int count, Rng& rng) {
  FomSampling f;
  f.dilations.count = count;
  f.seed = rng();
  auto all = fom_dilations(rho, n, f);
  std::vector<DilationState> out;
  for (auto& d : all) {
    if (single_theory(d.joint.system)) out.push_back(std::move(d));
  }
  return out;
}

DilationState moved(const ChannelMat& c, const DilationState& d) { return {apply_local(c, d.joint), d.marginal_system}; }

Ensemble moved(const ChannelMat& c, const Ensemble& e) {
  Ensemble out{e.system, {}};
  for (const auto& m : e.members) out.members.push_back(apply_local(c, m));
  return out;
}

// ----------------------------------------------------------------------

SuiteResult suite_validity(const SuiteOptions& o) {
  Tally t("validity");
  Rng rng = suite_rng(o, "validity");
  const int n = trials_for(o, "validity");
  for (int i = 0; i < n; ++i) {
    t.trial();
    const SystemLabel in = random_system(rng, true);
    const SystemLabel out = random_target(in, rng);
    const ChannelMat c = random_channel(in, out, rng);
    const auto rep = validate_channel(c, rng(), 32);
    t.require(rep.valid && rep.deterministic);
    t.check(std::max(rep.worst_violation, rep.unit_residual), 1e-9);

    const auto model = model_for(in);
    const int outcomes = uniform_int(rng, 2, 4);
    std::normal_distribution<double> normal(0.0, 1.5);
    std::vector<double> params(static_cast<size_t>(model->test_param_count(outcomes)));
    for (auto& p : params) p = normal(rng);
    const auto rep_t = validate_test(model->test_from_params(params, outcomes));
    t.require(rep_t.valid);
    t.check(rep_t.sum_residual, 1e-9);
  }
  if (o.inject_fault) {
    // negative control: columns sum to one but an entry is negative
    t.trial();
    Mat bad(2, 2);
    bad << 1.2, 0.0, -0.2, 1.0;
    const auto rep = validate_channel({SystemLabel::classical(2), SystemLabel::classical(2), bad, true});
    t.require(rep.valid && rep.deterministic);
  }
  return t.done();
}

SuiteResult suite_norm(const SuiteOptions& o) {
  Tally t("norm");
  Rng rng = suite_rng(o, "norm");
  const int n = trials_for(o, "norm");
  for (int i = 0; i < n; ++i) {
    t.trial();
    const SystemLabel a = random_system(rng, true);
    const StateVec delta = random_state(a, rng) - random_state(a, rng);
    const ChannelMat c = random_channel(a, random_target(a, rng), rng);
    const auto mono = check_norm_monotonicity(delta, c);
    t.check(mono.after - mono.before, 1e-9);
    t.check(mono.before - 2.0, 1e-9);
    if (a.all_classical() || is_squit(a)) t.check(std::abs(op_norm_lp(delta) - mono.before), 1e-9);
    if (is_squit(a)) {
      const Vec& v = delta.coords;
      const double closed = std::max({std::abs(v(0)), std::abs(v(1)), std::abs(v(2))});
      t.check(std::abs(closed - mono.before), 1e-9);
    }
  }
  return t.done();
}

double squit_closed_fidelity(const StateVec& r, const StateVec& s) {
  auto bc = [](double p, double q) { return std::sqrt(std::max(0.0, p * q)); };
  const double fx = bc((1 + r.coords(0)) / 2, (1 + s.coords(0)) / 2) + bc((1 - r.coords(0)) / 2, (1 - s.coords(0)) / 2);
  const double fy = bc((1 + r.coords(1)) / 2, (1 + s.coords(1)) / 2) + bc((1 - r.coords(1)) / 2, (1 - s.coords(1)) / 2);
  return std::min(fx, fy);
}

SuiteResult suite_fidelity(const SuiteOptions& o) {
  Tally t("fidelity");
  Rng rng = suite_rng(o, "fidelity");
  const int n = trials_for(o, "fidelity");
  for (int i = 0; i < n; ++i) {
    t.trial();
    const SystemLabel a = random_system(rng, true);
    const StateVec r = random_state(a, rng);
    const StateVec s = random_state(a, rng);
    const double f = fidelity(r, s, o.search).value;
    if (is_squit(a)) {
      // the search may only over-estimate; the canonical seeds attain the closed form
      t.check(std::abs(f - squit_closed_fidelity(r, s)), 1e-9);
      continue;
    }
    const ChannelMat c = random_channel(a, random_target(a, rng), rng);
    const StateVec cr = apply(c, r);
    const StateVec cs = apply(c, s);
    if (single_theory(cr.system)) t.check(f - fidelity(cr, cs, o.search).value, 1e-9);
    t.check(std::abs(f - fidelity(s, r, o.search).value), 1e-9);
    t.check(1.0 - fidelity(r, r, o.search).value, 1e-7);
  }
  return t.done();
}

SuiteResult suite_fuchs(const SuiteOptions& o) {
  Tally t("fuchs");
  Rng rng = suite_rng(o, "fuchs");
  const int n = trials_for(o, "fuchs");
  for (const auto& a : all_systems()) {
    for (int i = 0; i < n; ++i) {
      t.trial();
      const auto b = fuchs_bounds(random_state(a, rng), random_state(a, rng), o.search);
      t.check(b.lower - b.middle, 1e-9);
      if (b.exact) t.check(b.middle - b.upper, 1e-9);
    }
  }
  return t.done();
}

SuiteResult suite_bridges(const SuiteOptions& o) {
  static const double kEps[] = {1e-4, 1e-3, 1e-2, 0.05, 0.1, 0.2, 0.3, 0.5, 0.9};
  Tally t("bridges");
  Rng rng = suite_rng(o, "bridges");
  const int n = trials_for(o, "bridges");
  for (int i = 0; i < n; ++i) {
    t.trial();
    const SystemLabel a = scheme_source(rng);
    const int N = uniform_int(rng, 1, 2);
    const auto s = sample_scheme(a, N, rng);
    const auto dils = sweep_dilations(random_source(a, rng), N, 3, rng);
    const double f = fidelity_fom(s, dils, o.search);
    const double d = dilation_fom(s, dils);
    for (double e : kEps) {
      if (f > 1.0 - e) t.check(d - 2.0 * std::sqrt(e), 1e-9);
      if (d < e) t.check((1.0 - e) - f, 1e-9);
    }
    t.check(d - 2.0 * std::sqrt(std::max(0.0, 1.0 - f)), 1e-9);
    t.check((1.0 - d) - f, 1e-9);
  }
  return t.done();
}

SuiteResult suite_subadditivity(const SuiteOptions& o) {
  Tally t("subadditivity");
  Rng rng = suite_rng(o, "subadditivity");
  const int n = trials_for(o, "subadditivity");
  for (int i = 0; i < n; ++i) {
    t.trial();
    const bool quantum = uniform_int(rng, 0, 1) == 1;
    const SystemLabel a1 = quantum ? SystemLabel::quantum(2) : SystemLabel::classical(uniform_int(rng, 2, 3));
    const SystemLabel a2 = quantum ? SystemLabel::quantum(2) : SystemLabel::classical(uniform_int(rng, 2, 3));
    const auto s1 = sample_scheme(a1, 1, rng);
    const auto s2 = sample_scheme(a2, 1, rng);
    const auto prod = product_scheme(s1, s2);
    const StateVec joint = compose_par(random_source(a1, rng), random_source(a2, rng));
    DilationSampling ds;
    ds.count = 2;
    ds.max_ancilla = 2;
    ds.seed = rng();
    const ChannelMat c2 = s2.round_trip();
    for (const auto& d : sample_dilations(joint, ds)) {
      if (!single_theory(d.joint.system)) continue;
      const Ensemble ens = random_refinement(d.joint, uniform_int(rng, 1, 3), rng);
      double second = 0.0;
      for (const auto& m : ens.members) second += op_norm(apply_at(c2, m, a1) - m);
      t.check(ensemble_fom(prod, ens) - (ensemble_fom(s1, ens) + second), 1e-9);
    }
  }
  return t.done();
}

SuiteResult suite_reversible(const SuiteOptions& o) {
  Tally t("reversible");
  Rng rng = suite_rng(o, "reversible");
  const int n = trials_for(o, "reversible");
  for (int i = 0; i < n; ++i) {
    t.trial();
    const SystemLabel a = scheme_source(rng);
    const int N = uniform_int(rng, 1, 2);
    const auto s = sample_scheme(a, N, rng);
    const auto [u, u_inv] = random_reversible(a, rng);
    const auto st = conjugate_scheme(s, u, u_inv);
    const ChannelMat back = tensor_power(u_inv, N);

    const StateVec rho = random_source(a, rng);
    const auto dils = sweep_dilations(rho, N, 2, rng);
    std::vector<DilationState> dils_t;
    std::vector<Ensemble> decs, decs_t;
    for (const auto& d : dils) {
      dils_t.push_back(moved(back, d));
      for (const auto& e : pure_decompositions(d.joint, 1, rng())) {
        decs.push_back(e);
        decs_t.push_back(moved(back, e));
      }
      const Ensemble ens = random_refinement(d.joint, 3, rng);
      t.check(std::abs(ensemble_fom(s, ens) - ensemble_fom(st, moved(back, ens))), 1e-9);
    }
    t.check(std::abs(pure_fom(s, decs) - pure_fom(st, decs_t)), 1e-9);
    t.check(std::abs(dilation_fom(s, dils) - dilation_fom(st, dils_t)), 1e-9);
    t.check(std::abs(fidelity_fom(s, dils, o.search) - fidelity_fom(st, dils_t, o.search)), 1e-9);
    if (a.all_classical()) {
      const Vec p = random_probabilities(a.dim(), rng);
      const Vec pt = u_inv.matrix * p;
      t.check(std::abs(classical_error_prob(s, p).value - classical_error_prob(st, pt).value), 1e-9);
    }
  }
  return t.done();
}

SuiteResult suite_purity(const SuiteOptions& o) {
  Tally t("purity");
  Rng rng = suite_rng(o, "purity");
  const int n = trials_for(o, "purity");
  for (int i = 0; i < n; ++i) {
    t.trial();
    const SystemLabel a = random_system(rng, false);
    const StateVec rho = random_mixed_state(a, rng);
    const double i0 = state_information(rho, o.search).value;
    const double bound = ic_lower_bound(i0, obit_dim_log(*model_for(a)));
    t.require(bound > 0.0);
  }
  std::vector<StateVec> pure{
      parse_pure(SystemLabel::classical(2)), parse_pure(SystemLabel::classical(3)), parse_pure(SystemLabel::quantum(2)),
      parse_pure(SystemLabel::quantum(3)), quantum_pure_state(CVec::Constant(2, Complex(std::sqrt(0.5), 0.0)))};
  for (const auto& phi : pure) {
    t.trial();
    const double i0 = state_information(phi, o.search).value;
    t.check(ic_lower_bound(i0, obit_dim_log(*model_for(phi.system))), 0.0);
    const auto r = rate_search(phi, 20, 0.05, RateFamily::typical);
    t.require(r.M && *r.M == 0);
    const auto mp = rate_search(phi, 20, 0.05, RateFamily::measure_prepare);
    t.require(mp.M && *mp.M == 0);
  }
  return t.done();
}

SuiteResult suite_error_identity(const SuiteOptions& o) {
  Tally t("error_identity");
  Rng rng = suite_rng(o, "error_identity");
  const int n = trials_for(o, "error_identity");
  for (int i = 0; i < n; ++i) {
    t.trial();
    // the identity needs a channel: columns are distributions
    const int d = uniform_int(rng, 2, 8);
    Mat c(d, d);
    for (int j = 0; j < d; ++j) c.col(j) = random_probabilities(d, rng);
    const auto e = classical_error_prob(c, random_probabilities(d, rng));
    t.check(e.deviation(), 1e-12);
  }
  return t.done();
}

SuiteResult suite_continuity(const SuiteOptions& o) {
  Tally t("continuity");
  Rng rng = suite_rng(o, "continuity");
  const int n = trials_for(o, "continuity");
  int valid = 0;
  while (valid < n) {
    const int m = uniform_int(rng, 2, 4);
    const int k = uniform_int(rng, 2, 4);
    JointDistribution p{Mat(m, k)}, q{Mat(m, k)};
    const Vec a = random_probabilities(m * k, rng);
    const Vec b = random_probabilities(m * k, rng);
    const double mix_t = std::pow(uniform(rng, 0.0, 1.0), 3.0);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < k; ++c) {
        p.p(r, c) = a(r * k + c);
        q.p(r, c) = (1.0 - mix_t) * a(r * k + c) + mix_t * b(r * k + c);
      }
    }
    const double gamma = (p.p - q.p).cwiseAbs().sum();
    if (gamma >= 1.0 - 1.0 / (m * k)) continue;
    ++valid;
    t.trial();
    const double L = std::log2(static_cast<double>(m * k) - 1.0);
    const double lhs = std::abs(mutual_information(p) - mutual_information(q)) / L;
    t.check(lhs - continuity_bound(gamma, L), 1e-9);
  }
  return t.done();
}

SuiteResult suite_mutual_information(const SuiteOptions& o) {
  Tally t("mutual_information");
  Rng rng = suite_rng(o, "mutual_information");
  const int n = trials_for(o, "mutual_information");
  for (int i = 0; i < n; ++i) {
    t.trial();
    const int m = uniform_int(rng, 1, 5);
    const int k = uniform_int(rng, 1, 5);
    JointDistribution j{Eigen::Map<const Mat>(random_probabilities(m * k, rng).data(), m, k)};
    const double info = mutual_information(j);
    t.check(-info, 0.0);
    t.check(info - std::min(shannon(j.row_marginal()), shannon(j.col_marginal())), 1e-12);
  }
  return t.done();
}

SuiteResult suite_steering(const SuiteOptions& o) {
  Tally t("steering");
  Rng rng = suite_rng(o, "steering");
  const int n = trials_for(o, "steering");
  for (int i = 0; i < n; ++i) {
    t.trial();
    const SystemLabel a = random_system(rng, false);
    const StateVec rho = random_source(a, rng);
    const Ensemble ens = random_refinement(rho, uniform_int(rng, 2, 4), rng);
    const auto cert = steer(rho, ens);
    t.check(cert.max_residual(), 1e-9);
    const auto s = random_scheme(a, 1, max_code_length(a, 1), rng);
    const DilationState dil[] = {cert.dilation};
    t.check(ensemble_fom(s, ens) - dilation_fom(s, dil), 1e-9);
  }
  return t.done();
}

SuiteResult suite_lemma1(const SuiteOptions& o) {
  Tally t("lemma1");
  Rng rng = suite_rng(o, "lemma1");
  const int n = trials_for(o, "lemma1");
  for (int i = 0; i < n; ++i) {
    t.trial();
    const SystemLabel a = scheme_source(rng);
    const auto s = sample_scheme(a, 1, rng);
    const auto decs = pure_decompositions(random_mixed_state(a, rng), 2, rng());
    const Ensemble& fine = decs[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(decs.size()) - 1))];
    Ensemble coarse{fine.system, {zero_state(fine.system), zero_state(fine.system)}};
    for (const auto& m : fine.members) {
      auto& slot = coarse.members[static_cast<size_t>(uniform_int(rng, 0, 1))];
      slot = slot + m;
    }
    t.check(ensemble_fom(s, coarse) - ensemble_fom(s, fine), 1e-9);
  }
  return t.done();
}

SuiteResult suite_measure_prepare(const SuiteOptions& o) {
  Tally t("measure_prepare");
  Rng rng = suite_rng(o, "measure_prepare");
  const int n = trials_for(o, "measure_prepare");
  struct Case {
    StateVec phi;
    int N;
  };
  const std::vector<Case> cases{{parse_pure(SystemLabel::classical(2)), 3},
                                {parse_pure(SystemLabel::quantum(2)), 2},
                                {parse_pure(SystemLabel::classical(3)), 2},
                                {quantum_pure_state(CVec::Constant(2, Complex(std::sqrt(0.5), 0.0))), 2}};
  for (const auto& c : cases) {
    const auto s = measure_prepare_scheme(c.phi, c.N);
    int seen = 0;
    while (seen < n) {
      for (const auto& d : sweep_dilations(c.phi, c.N, 8, rng)) {
        std::vector<Ensemble> family = pure_decompositions(d.joint, 2, rng());
        family.push_back(random_refinement(d.joint, uniform_int(rng, 2, 4), rng));
        for (const auto& e : family) {
          t.trial();
          ++seen;
          t.check(ensemble_fom(s, e), 1e-12);
        }
      }
    }
    const auto r = rate_search(c.phi, c.N, 0.05, RateFamily::measure_prepare);
    t.require(r.M && *r.M == 0);
  }
  return t.done();
}

SuiteResult suite_entropy(const SuiteOptions& o) {
  Tally t("entropy");
  Rng rng = suite_rng(o, "entropy");
  const int n = trials_for(o, "entropy");
  for (int i = 0; i < n; ++i) {
    t.trial();
    const SystemLabel a = random_system(rng, false);
    const StateVec rho = random_source(a, rng);
    const double ref = a.all_quantum() ? von_neumann(rho) : shannon(rho.coords);
    const auto me = measurement_entropy(rho, o.search);
    const auto de = decomposition_entropy(rho, o.search);
    // both are minima attained at the spectral decomposition
    t.check(std::abs(me.value - ref), 1e-7);
    t.check(std::abs(de.value - ref), 1e-7);
  }
  t.trial();
  const auto center = decomposition_entropy(squit_state(0.0, 0.0), o.search);
  t.check(std::abs(center.value - 1.0), 1e-7);
  return t.done();
}

SuiteResult suite_rate_nesting(const SuiteOptions& o) {
  Tally t("rate_nesting");
  Rng rng = suite_rng(o, "rate_nesting");
  const int n = trials_for(o, "rate_nesting");
  auto code_length = [](const RateResult& r) { return r.M ? *r.M : std::numeric_limits<int>::max(); };
  for (int i = 0; i < n; ++i) {
    t.trial();
    const SystemLabel a = scheme_source(rng);
    const StateVec rho = random_source(a, rng);
    const int N = uniform_int(rng, 5, 60);
    double e1 = uniform(rng, 0.01, 0.5);
    double e2 = uniform(rng, 0.01, 0.5);
    if (e1 > e2) std::swap(e1, e2);
    const int m1 = code_length(rate_search(rho, N, e1, RateFamily::typical));
    const int m2 = code_length(rate_search(rho, N, e2, RateFamily::typical));
    t.require(m1 >= m2);
    if (a.all_classical()) {
      const int M = uniform_int(rng, 0, max_code_length(a, N) - 1);
      t.check(typical_set_error(rho.coords, N, M + 1) - typical_set_error(rho.coords, N, M), 1e-12);
    }
  }
  return t.done();
}

SuiteResult suite_scaling(const SuiteOptions& o) {
  Tally t("scaling");
  (void)o;
  for (const auto& a : all_systems()) {
    t.trial();
    t.require(regular_scaling_holds(*model_for(a)));
  }
  return t.done();
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

struct SuiteEntry {
  std::string name;
  int trials;
  SuiteFn fn;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r{
      {"validity", 200, suite_validity},
      {"norm", 1000, suite_norm},
      {"fidelity", 300, suite_fidelity},
      {"fuchs", 1000, suite_fuchs},
      {"bridges", 100, suite_bridges},
      {"subadditivity", 100, suite_subadditivity},
      {"reversible", 100, suite_reversible},
      {"purity", 100, suite_purity},
      {"error_identity", 1000, suite_error_identity},
      {"continuity", 1000, suite_continuity},
      {"mutual_information", 1000, suite_mutual_information},
      {"steering", 100, suite_steering},
      {"lemma1", 100, suite_lemma1},
      {"measure_prepare", 100, suite_measure_prepare},
      {"entropy", 20, suite_entropy},
      {"rate_nesting", 50, suite_rate_nesting},
      {"scaling", 1, suite_scaling},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.name);
    return v;
  }();
  return names;
}

int default_trials(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e.trials;
  }
  throw ValidationError("unknown suite '" + name + "'");
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& e : registry()) {
    if (e.name == name) return e.fn(opt);
  }
  throw ValidationError("unknown suite '" + name + "'");
}

}  // namespace opinfo::cli
