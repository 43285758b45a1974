#include <algorithm>
#include <cmath>
#include <numeric>

#include "internal.hpp"
#include "opinfo/theories.hpp"

namespace opinfo {

namespace {

Vec dirichlet(int n, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = expo(rng);
  return v / v.sum();
}

Mat square_symmetry(int which) {
  // signed permutations of (x, y); n is fixed
  Mat m = Mat::Zero(3, 3);
  const bool swap = (which & 4) != 0;
  const double sx = (which & 1) ? -1.0 : 1.0;
  const double sy = (which & 2) ? -1.0 : 1.0;
  if (swap) {
    m(0, 1) = sx;
    m(1, 0) = sy;
  } else {
    m(0, 0) = sx;
    m(1, 1) = sy;
  }
  m(2, 2) = 1.0;
  return m;
}

CMat random_unitary(int d, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMat> qr(detail::random_ginibre(d, d, rng));
  const CMat q = qr.householderQ() * CMat::Identity(d, d);
  // fix column phases so the distribution is Haar
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  CMat phases = CMat::Identity(d, d);
  for (int i = 0; i < d; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0) phases(i, i) = r(i, i) / mag;
  }
  return q * phases;
}

std::vector<CMat> random_povm(int d, int outcomes, std::mt19937_64& rng) {
  std::vector<CMat> parts;
  CMat s = CMat::Zero(d, d);
  for (int k = 0; k < outcomes; ++k) {
    const CMat g = detail::random_ginibre(d, d, rng);
    parts.push_back(g * g.adjoint());
    s += parts.back();
  }
  const auto eig = hermitian_eigen(s);
  const CMat w = eig.vectors * eig.values.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  for (auto& p : parts) p = w * p * w;
  return parts;
}

StateVec random_block_state(const SystemLabel& label, std::mt19937_64& rng, int mode) {
  // mode: 0 generic, 1 pure, 2 full rank
  if (label.all_classical()) {
    if (mode == 1) {
      return {label, Vec::Unit(label.dim(), std::uniform_int_distribution<int>(0, label.dim() - 1)(rng))};
    }
    return {label, dirichlet(label.dim(), rng)};
  }
  if (label.all_quantum()) {
    const int d = label.hilbert_dim();
    CMat rho;
    if (mode == 1) {
      CVec psi = detail::random_ginibre(d, 1, rng).col(0);
      psi.normalize();
      rho = psi * psi.adjoint();
    } else {
      const CMat g = detail::random_ginibre(d, d, rng);
      rho = g * g.adjoint();
      rho /= rho.trace().real();
    }
    return {label, detail::to_coords(label, rho)};
  }
  if (label.is_atomic() && label.theory() == TheoryId::boxworld) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    if (mode == 1) {
      std::bernoulli_distribution coin(0.5);
      const double x = coin(rng) ? 1.0 : -1.0;
      const double y = coin(rng) ? 1.0 : -1.0;
      return squit_state(x, y);
    }
    const double scale = mode == 2 ? 0.999 : 1.0;
    const double x = scale * uni(rng);
    const double y = scale * uni(rng);
    return squit_state(x, y);
  }
  // classical (x) rest: a distribution over classical indices, one state per block
  const auto split = detail::split_classical(label);
  const Vec p = mode == 1 ? Vec(Vec::Unit(split.classical_dim,
                                           std::uniform_int_distribution<int>(0, split.classical_dim - 1)(rng)))
                          : dirichlet(split.classical_dim, rng);
  Vec blocked(label.dim());
  const int len = split.rest.dim();
  for (int i = 0; i < split.classical_dim; ++i) {
    blocked.segment(i * len, len) = p(i) * random_block_state(split.rest, rng, mode).coords;
  }
  return {label, split.from_blocked(blocked)};
}

DilationState flagged_dilation(const Ensemble& ens, const SystemLabel& label) {
  const int k = static_cast<int>(ens.members.size());
  const SystemLabel anc = SystemLabel::classical(k);
  StateVec joint = zero_state(SystemLabel::compose(label, anc));
  for (int i = 0; i < k; ++i) joint = joint + compose_par(ens.members[static_cast<size_t>(i)], StateVec{anc, Vec::Unit(k, i)});
  return {joint, label};
}

}  // namespace

StateVec random_state(const SystemLabel& system, std::mt19937_64& rng) { return random_block_state(system, rng, 0); }

StateVec random_state(const SystemLabel& system, std::uint64_t seed) {
  auto rng = detail::make_engine(seed, 0);
  return random_state(system, rng);
}

StateVec random_pure_state(const SystemLabel& system, std::mt19937_64& rng) {
  return random_block_state(system, rng, 1);
}

StateVec random_mixed_state(const SystemLabel& system, std::mt19937_64& rng) {
  return random_block_state(system, rng, 2);
}

ChannelMat kraus_channel(const SystemLabel& in, const SystemLabel& out, std::span<const CMat> kraus) {
  Mat t(out.dim(), in.dim());
  for (int l = 0; l < in.dim(); ++l) {
    const CMat b = detail::to_operator(in, Vec::Unit(in.dim(), l));
    CMat image = CMat::Zero(out.hilbert_dim(), out.hilbert_dim());
    for (const auto& k : kraus) image += k * b * k.adjoint();
    t.col(l) = detail::to_coords(out, image);
  }
  ChannelMat c{in, out, t, false};
  c.deterministic = validate_channel(c).deterministic;
  return c;
}

ChannelMat random_channel(const SystemLabel& in, const SystemLabel& out, std::mt19937_64& rng) {
  if (in.all_classical()) {
    Mat m(out.dim(), in.dim());
    for (int j = 0; j < in.dim(); ++j) m.col(j) = random_state(out, rng).coords;
    return {in, out, m, true};
  }
  if (in.all_quantum() && out.all_quantum()) {
    const int din = in.hilbert_dim();
    const int dout = out.hilbert_dim();
    // an isometry C^din -> C^(dout*rank) needs dout*rank >= din
    const int rank = std::uniform_int_distribution<int>((din + dout - 1) / dout, din * dout)(rng);
    Eigen::HouseholderQR<CMat> qr(detail::random_ginibre(dout * rank, din, rng));
    const CMat v = qr.householderQ() * CMat::Identity(dout * rank, din);
    std::vector<CMat> kraus;
    for (int k = 0; k < rank; ++k) kraus.push_back(v.block(k * dout, 0, dout, din));
    ChannelMat c = kraus_channel(in, out, kraus);
    c.deterministic = true;
    return c;
  }
  if (in.is_atomic() && in.theory() == TheoryId::boxworld && out == in) {
    const Vec w = dirichlet(12, rng);
    Mat m = Mat::Zero(3, 3);
    for (int s = 0; s < 8; ++s) m += w(s) * square_symmetry(s);
    const std::array<std::array<double, 2>, 4> corners{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (int c = 0; c < 4; ++c) {
      m(0, 2) += w(8 + c) * corners[static_cast<size_t>(c)][0];
      m(1, 2) += w(8 + c) * corners[static_cast<size_t>(c)][1];
      m(2, 2) += w(8 + c);
    }
    return {in, out, m, true};
  }
  if (in.is_atomic() && out.all_classical()) {
    const auto model = model_for(in);
    std::normal_distribution<double> normal(0.0, 1.5);
    std::vector<double> params(static_cast<size_t>(model->test_param_count(out.dim())));
    for (auto& p : params) p = normal(rng);
    const auto test = model->test_from_params(params, out.dim());
    Mat m(out.dim(), in.dim());
    for (int j = 0; j < out.dim(); ++j) m.row(j) = test.effects[static_cast<size_t>(j)].coords.transpose();
    return {in, out, m, true};
  }
  throw UnsupportedFeature("random_channel: no sampler for " + in.to_string() + " -> " + out.to_string());
}

ChannelMat random_channel(const SystemLabel& in, const SystemLabel& out, std::uint64_t seed) {
  auto rng = detail::make_engine(seed, 0);
  return random_channel(in, out, rng);
}

std::pair<ChannelMat, ChannelMat> random_reversible(const SystemLabel& system, std::mt19937_64& rng) {
  if (system.all_classical()) {
    std::vector<int> perm(static_cast<size_t>(system.dim()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Mat p = Mat::Zero(system.dim(), system.dim());
    for (int i = 0; i < system.dim(); ++i) p(perm[static_cast<size_t>(i)], i) = 1.0;
    return {{system, system, p, true}, {system, system, p.transpose(), true}};
  }
  if (system.all_quantum()) {
    const CMat u = random_unitary(system.hilbert_dim(), rng);
    const std::vector<CMat> fwd{u};
    const std::vector<CMat> back{u.adjoint()};
    auto a = kraus_channel(system, system, fwd);
    auto b = kraus_channel(system, system, back);
    a.deterministic = b.deterministic = true;
    return {a, b};
  }
  if (system.is_atomic() && system.theory() == TheoryId::boxworld) {
    const Mat m = square_symmetry(std::uniform_int_distribution<int>(0, 7)(rng));
    return {{system, system, m, true}, {system, system, m.transpose(), true}};
  }
  throw UnsupportedFeature("random_reversible: unsupported system " + system.to_string());
}

Ensemble random_refinement(const StateVec& rho, int size, std::mt19937_64& rng) {
  if (size < 1) throw ValidationError("refinement size must be >= 1");
  const auto& label = rho.system;
  Ensemble ens{label, {}};
  if (label.all_quantum()) {
    const int d = label.hilbert_dim();
    const CMat root = psd_sqrt(density_matrix(rho));
    for (const auto& e : random_povm(d, size, rng)) {
      ens.members.push_back({label, detail::to_coords(label, root * e * root)});
    }
    return ens;
  }
  const auto pure = pure_decompositions(rho, 2, rng())[0];
  for (int k = 0; k < size; ++k) ens.members.push_back(zero_state(label));
  for (const auto& m : pure.members) {
    const Vec t = dirichlet(size, rng);
    for (int k = 0; k < size; ++k) ens.members[static_cast<size_t>(k)] = ens.members[static_cast<size_t>(k)] + t(k) * m;
  }
  return ens;
}

DilationState canonical_dilation(const StateVec& rho) {
  const auto& label = rho.system;
  if (label.all_classical()) return steer(rho, pure_decompositions(rho, 0)[0]).dilation;
  if (label.all_quantum()) return steer(rho, Ensemble{label, {rho}}).dilation;
  return {rho, label};
}

std::vector<DilationState> sample_dilations(const StateVec& rho, const DilationSampling& cfg) {
  const auto& label = rho.system;
  std::vector<DilationState> out{canonical_dilation(rho)};
  out.push_back({rho, label});
  auto rng = detail::make_engine(cfg.seed, 2);
  const DilationState canon = out.front();
  const SystemLabel anc = canon.ancilla();
  for (int i = 0; i < cfg.count; ++i) {
    if (label.all_classical() || label.all_quantum()) {
      const int natural = label.all_quantum() ? label.hilbert_dim() : label.dim();
      const int cap = std::max(2, cfg.max_ancilla > 0 ? cfg.max_ancilla : natural);
      const int k = std::uniform_int_distribution<int>(2, cap)(rng);
      const SystemLabel target = label.all_quantum() ? SystemLabel::quantum(k) : SystemLabel::classical(k);
      const ChannelMat post = random_channel(anc, target, rng);
      out.push_back({apply_at(post, canon.joint, label), label});
    } else {
      const int cap = std::max(2, cfg.max_ancilla > 0 ? cfg.max_ancilla : label.dim());
      const int k = std::uniform_int_distribution<int>(2, cap)(rng);
      const auto ens = random_refinement(rho, k, rng);
      out.push_back(flagged_dilation(ens, label));
    }
  }
  return out;
}

}  // namespace opinfo
