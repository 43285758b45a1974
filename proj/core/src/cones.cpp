#include <algorithm>
#include <cmath>

#include "internal.hpp"
#include "opinfo/opt_core.hpp"

namespace opinfo {

namespace detail {

std::vector<int> hilbert_dims(const SystemLabel& label) {
  std::vector<int> dims;
  for (const auto& f : label.factors()) {
    if (f.trivial()) continue;
    if (f.theory != TheoryId::quantum) throw DimensionError("expected an all-quantum system, got " + label.to_string());
    dims.push_back(f.size);
  }
  return dims;
}

std::vector<int> linear_dims(const SystemLabel& label) {
  std::vector<int> dims;
  for (const auto& f : label.factors()) dims.push_back(f.linear_dim());
  return dims;
}

ClassicalSplit split_classical(const SystemLabel& label) {
  ClassicalSplit split;
  split.dims = linear_dims(label);
  std::vector<Factor> rest;
  const auto& f = label.factors();
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].theory == TheoryId::classical) {
      split.perm.push_back(static_cast<int>(i));
      split.classical_dim *= f[i].size;
    }
  }
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].theory != TheoryId::classical) {
      split.perm.push_back(static_cast<int>(i));
      rest.push_back(f[i]);
    }
  }
  for (size_t k = 0; k < split.perm.size(); ++k) {
    if (split.perm[k] != static_cast<int>(k)) split.identity_perm = false;
  }
  split.rest = SystemLabel::from_factors(std::move(rest));
  return split;
}

Vec ClassicalSplit::to_blocked(const Vec& coords) const {
  if (identity_perm) return coords;
  return permute_factors(coords, dims, perm);
}

Vec ClassicalSplit::from_blocked(const Vec& blocked) const {
  if (identity_perm) return blocked;
  std::vector<int> inverse(perm.size());
  std::vector<int> permuted_dims(perm.size());
  for (size_t k = 0; k < perm.size(); ++k) {
    inverse[static_cast<size_t>(perm[k])] = static_cast<int>(k);
    permuted_dims[k] = dims[static_cast<size_t>(perm[k])];
  }
  return permute_factors(blocked, permuted_dims, inverse);
}

CMat to_operator(const SystemLabel& quantum_label, const Vec& coords) {
  const auto dims = hilbert_dims(quantum_label);
  return coords_to_operator(coords, dims);
}

Vec to_coords(const SystemLabel& quantum_label, const CMat& op) {
  const auto dims = hilbert_dims(quantum_label);
  return operator_to_coords(op, dims);
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x6f70u};
  return std::mt19937_64(seq);
}

CMat random_ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMat g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace detail

namespace {

using detail::split_classical;

enum class Kind { state, effect };

bool block_ok(const SystemLabel& rest, const Vec& block, Kind kind, double tol) {
  if (rest.is_trivial()) {
    const double v = block(0);
    return kind == Kind::state ? v >= -tol : (v >= -tol && v <= 1.0 + tol);
  }
  if (rest.theory() == TheoryId::boxworld) {
    const double a = block(0), b = block(1), c = block(2);
    if (kind == Kind::state) return c >= -tol && std::abs(a) <= c + tol && std::abs(b) <= c + tol;
    return c - std::abs(a) - std::abs(b) >= -tol && c + std::abs(a) + std::abs(b) <= 1.0 + tol;
  }
  const auto eig = hermitian_eigen(detail::to_operator(rest, block));
  if (kind == Kind::state) return eig.values.minCoeff() >= -tol;
  return eig.values.minCoeff() >= -tol && eig.values.maxCoeff() <= 1.0 + tol;
}

bool blocks_ok(const SystemLabel& label, const Vec& coords, Kind kind, double tol) {
  if (coords.size() != label.dim()) throw DimensionError("coordinate length does not match " + label.to_string());
  const auto split = split_classical(label);
  const Vec blocked = split.to_blocked(coords);
  const int len = split.rest.dim();
  for (int i = 0; i < split.classical_dim; ++i) {
    if (!block_ok(split.rest, blocked.segment(i * len, len), kind, tol)) return false;
  }
  return true;
}

// Extremal-ish product state on an arbitrary label, used by spot checks.
Vec sample_product_state(const SystemLabel& label, std::mt19937_64& rng) {
  Vec v = Vec::Ones(1);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (const auto& f : label.factors()) {
    Vec part;
    if (f.theory == TheoryId::classical) {
      part = Vec::Zero(f.size);
      part(std::uniform_int_distribution<int>(0, f.size - 1)(rng)) = 1.0;
    } else if (f.theory == TheoryId::boxworld) {
      const bool corner = std::bernoulli_distribution(0.5)(rng);
      const double x = corner ? (uni(rng) < 0 ? -1.0 : 1.0) : uni(rng);
      const double y = corner ? (uni(rng) < 0 ? -1.0 : 1.0) : uni(rng);
      part = Vec(3);
      part << x, y, 1.0;
    } else {
      CVec psi = detail::random_ginibre(f.size, 1, rng).col(0);
      psi.normalize();
      const std::vector<int> dims{f.size};
      part = operator_to_coords(psi * psi.adjoint(), dims);
    }
    v = kron(v, part);
  }
  return v;
}

}  // namespace

bool in_state_cone(const StateVec& s, double tol) { return blocks_ok(s.system, s.coords, Kind::state, tol); }

bool is_state(const StateVec& s, double tol) { return in_state_cone(s, tol) && s.normalization() <= 1.0 + tol; }

bool is_normalized_state(const StateVec& s, double tol) {
  return in_state_cone(s, tol) && std::abs(s.normalization() - 1.0) <= tol;
}

bool is_effect(const EffectVec& a, double tol) { return blocks_ok(a.system, a.coords, Kind::effect, tol); }

double choi_min_eigenvalue(const ChannelMat& c) {
  const auto in_dims = detail::hilbert_dims(c.in);
  const auto out_dims = detail::hilbert_dims(c.out);
  const int din = c.in.hilbert_dim();
  const int dout = c.out.hilbert_dim();
  CMat choi = CMat::Zero(din * dout, din * dout);
  for (int i = 0; i < din; ++i) {
    for (int j = 0; j < din; ++j) {
      CMat unit = CMat::Zero(din, din);
      unit(i, j) = 1.0;
      const CMat herm = 0.5 * (unit + unit.adjoint());
      const CMat anti = Complex(0.0, -0.5) * (unit - unit.adjoint());
      const Vec out_re = c.matrix * operator_to_coords(herm, in_dims);
      const Vec out_im = c.matrix * operator_to_coords(anti, in_dims);
      const CMat image = coords_to_operator(out_re, out_dims) + Complex(0.0, 1.0) * coords_to_operator(out_im, out_dims);
      choi.block(i * dout, j * dout, dout, dout) = image;
    }
  }
  return hermitian_eigen(choi / static_cast<double>(din)).values.minCoeff();
}

ChannelReport validate_channel(const ChannelMat& c, std::uint64_t seed, int trials) {
  ChannelReport report;
  if (c.matrix.rows() != c.out.dim() || c.matrix.cols() != c.in.dim()) {
    report.valid = false;
    report.message = "matrix shape does not match systems";
    return report;
  }
  const EffectVec pulled = pullback(unit_effect(c.out), c);
  report.unit_residual = (pulled.coords - unit_effect(c.in).coords).cwiseAbs().maxCoeff();
  report.deterministic = report.unit_residual <= kSumTolerance;
  auto fail = [&report](double violation, const std::string& why) {
    report.worst_violation = std::max(report.worst_violation, violation);
    if (violation > kSumTolerance) {
      report.valid = false;
      report.message = why;
    }
  };
  if (c.deterministic && !report.deterministic) fail(report.unit_residual, "declared deterministic but unit o C != unit");
  if (!is_effect(pulled)) fail(1.0, "unit o C is not an effect (normalization increases)");

  if (c.in.all_classical() && c.out.all_classical()) {
    fail(std::max(0.0, -c.matrix.minCoeff()), "negative transition probability");
    return report;
  }
  if (c.in.all_quantum() && c.out.all_quantum()) {
    fail(std::max(0.0, -choi_min_eigenvalue(c)), "Choi matrix is not positive semidefinite");
    return report;
  }
  auto rng = detail::make_engine(seed, 0);
  const SystemLabel anc = SystemLabel::classical(2);
  for (int t = 0; t < trials; ++t) {
    StateVec s{c.in, sample_product_state(c.in, rng)};
    if (!in_state_cone(apply(c, s))) fail(1.0, "output leaves the state cone");
    StateVec s2{c.in, sample_product_state(c.in, rng)};
    StateVec joint = compose_par(0.5 * s, StateVec{anc, Vec::Unit(2, 0)}) + compose_par(0.5 * s2, StateVec{anc, Vec::Unit(2, 1)});
    if (!in_state_cone(apply_local(c, joint))) fail(1.0, "output with ancilla leaves the state cone");
  }
  return report;
}

}  // namespace opinfo
