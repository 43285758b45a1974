#include "opinfo/linalg.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace opinfo {

namespace {

std::vector<CMat> build_basis(int d) {
  std::vector<CMat> basis;
  basis.reserve(static_cast<size_t>(d * d));
  basis.push_back(CMat::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  const double r = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      CMat sym = CMat::Zero(d, d);
      sym(j, k) = r;
      sym(k, j) = r;
      basis.push_back(sym);
      CMat asym = CMat::Zero(d, d);
      asym(j, k) = Complex(0.0, -r);
      asym(k, j) = Complex(0.0, r);
      basis.push_back(asym);
    }
  }
  for (int l = 1; l < d; ++l) {
    CMat diag = CMat::Zero(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) diag(j, j) = norm;
    diag(l, l) = -static_cast<double>(l) * norm;
    basis.push_back(diag);
  }
  return basis;
}

int product(std::span<const int> dims, bool squared) {
  int p = 1;
  for (int d : dims) p *= squared ? d * d : d;
  return p;
}

}  // namespace

const std::vector<CMat>& hermitian_basis(int d) {
  static std::mutex mutex;
  static std::map<int, std::vector<CMat>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, build_basis(d)).first;
  return it->second;
}

CMat coords_to_operator(const Vec& coords, std::span<const int> hilbert_dims) {
  if (coords.size() != product(hilbert_dims, true)) {
    throw std::invalid_argument("coords_to_operator: coordinate length mismatch");
  }
  if (hilbert_dims.empty()) return CMat::Constant(1, 1, Complex(coords(0), 0.0));
  const int d = hilbert_dims[0];
  const auto& basis = hermitian_basis(d);
  const auto rest = hilbert_dims.subspan(1);
  const int rest_len = product(rest, true);
  const int rest_dim = product(rest, false);
  CMat out = CMat::Zero(d * rest_dim, d * rest_dim);
  for (int k = 0; k < d * d; ++k) {
    const Vec block = coords.segment(k * rest_len, rest_len);
    if (block.cwiseAbs().maxCoeff() == 0.0) continue;
    out += kron(basis[static_cast<size_t>(k)], coords_to_operator(block, rest));
  }
  return out;
}

Vec operator_to_coords(const CMat& op, std::span<const int> hilbert_dims) {
  if (hilbert_dims.empty()) return Vec::Constant(1, op(0, 0).real());
  const int d = hilbert_dims[0];
  const auto& basis = hermitian_basis(d);
  const auto rest = hilbert_dims.subspan(1);
  const int rest_len = product(rest, true);
  const int rest_dim = product(rest, false);
  if (op.rows() != d * rest_dim || op.cols() != d * rest_dim) {
    throw std::invalid_argument("operator_to_coords: operator size mismatch");
  }
  Vec out(d * d * rest_len);
  for (int k = 0; k < d * d; ++k) {
    const CMat& b = basis[static_cast<size_t>(k)];
    CMat partial = CMat::Zero(rest_dim, rest_dim);
    for (int a = 0; a < d; ++a) {
      for (int c = 0; c < d; ++c) {
        const Complex w = b(c, a);
        if (w == Complex(0.0, 0.0)) continue;
        partial += w * op.block(a * rest_dim, c * rest_dim, rest_dim, rest_dim);
      }
    }
    out.segment(k * rest_len, rest_len) = operator_to_coords(partial, rest);
  }
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vec apply_on_block(const Mat& op, const Vec& v, int pre, int post) {
  const auto in = op.cols();
  if (v.size() != pre * in * post) throw std::invalid_argument("apply_on_block: size mismatch");
  const auto out_dim = op.rows();
  Vec out = Vec::Zero(pre * out_dim * post);
  for (int p = 0; p < pre; ++p) {
    // (in x post) slab viewed column-major as post x in
    Eigen::Map<const Mat> slab(v.data() + p * in * post, post, in);
    Eigen::Map<Mat> dest(out.data() + p * out_dim * post, post, out_dim);
    dest.noalias() = slab * op.transpose();
  }
  return out;
}

Vec permute_factors(const Vec& v, std::span<const int> dims, std::span<const int> perm) {
  const size_t n = dims.size();
  if (perm.size() != n) throw std::invalid_argument("permute_factors: permutation size mismatch");
  std::vector<int> new_dims(n);
  for (size_t k = 0; k < n; ++k) new_dims[k] = dims[static_cast<size_t>(perm[k])];
  std::vector<long> old_stride(n, 1);
  for (size_t k = n; k-- > 1;) old_stride[k - 1] = old_stride[k] * dims[k];
  Vec out(v.size());
  std::vector<int> idx(n, 0);  // multi-index in the new ordering
  for (Eigen::Index flat = 0; flat < v.size(); ++flat) {
    long src = 0;
    for (size_t k = 0; k < n; ++k) src += idx[k] * old_stride[static_cast<size_t>(perm[k])];
    out(flat) = v(src);
    for (size_t k = n; k-- > 0;) {
      if (++idx[k] < new_dims[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

HermitianEigen hermitian_eigen(const CMat& m) {
  const CMat h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CMat psd_sqrt(const CMat& m) {
  const auto eig = hermitian_eigen(m);
  // eigenvalues at the solver's noise floor are zeros; their roots would be ~1e-8
  const double floor = 1e-13 * std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  const Vec roots = eig.values.unaryExpr([floor](double v) { return v > floor ? std::sqrt(v) : 0.0; });
  return eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

double trace_norm(const CMat& m) { return Eigen::JacobiSVD<CMat>(m).singularValues().sum(); }

}  // namespace opinfo
