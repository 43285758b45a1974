#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace opinfo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Hilbert-Schmidt orthonormal Hermitian basis of d x d operators:
/// I/sqrt(d) first, then normalized off-diagonal symmetric/antisymmetric
/// pairs, then the traceless diagonal generators. Cached per d.
const std::vector<CMat>& hermitian_basis(int d);

/// Real coordinates (in the product of per-factor Hermitian bases) to the
/// operator on the tensor-product Hilbert space with the given factor dims.
CMat coords_to_operator(const Vec& coords, std::span<const int> hilbert_dims);

/// Inverse of coords_to_operator; the input is taken to be Hermitian.
Vec operator_to_coords(const CMat& op, std::span<const int> hilbert_dims);

Vec kron(const Vec& a, const Vec& b);
Mat kron(const Mat& a, const Mat& b);
CMat kron(const CMat& a, const CMat& b);

/// Applies `op` (out x in) to the middle index of `v` viewed as a
/// (pre, in, post) tensor in row-major order.
Vec apply_on_block(const Mat& op, const Vec& v, int pre, int post);

/// Reorders tensor factors: output factor k is input factor perm[k].
Vec permute_factors(const Vec& v, std::span<const int> dims, std::span<const int> perm);

/// Eigenvalues/eigenvectors of a Hermitian matrix, ascending order.
struct HermitianEigen {
  Vec values;
  CMat vectors;
};
HermitianEigen hermitian_eigen(const CMat& m);

/// Principal square root of a positive semidefinite matrix (negative
/// eigenvalues are clipped to zero).
CMat psd_sqrt(const CMat& m);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const CMat& m);

}  // namespace opinfo
