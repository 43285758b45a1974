#pragma once

// Shannon-type functionals and the classical-information criterion used to
// bound the information content from below.

#include <span>
#include <utility>

#include "opinfo/metrics.hpp"

namespace opinfo {

/// -sum p_i log2 p_i with 0 log 0 = 0. Throws ValidationError on entries
/// below -1e-12.
double shannon(std::span<const double> p);
double shannon(const Vec& p);
double binary_entropy(double gamma);
double von_neumann(const StateVec& rho);

/// p(i, j): row i is the preparation outcome, column j the observation outcome.
struct JointDistribution {
  Mat p;

  void validate() const;  ///< nonnegative entries summing to 1 within 1e-9
  Vec row_marginal() const;
  Vec col_marginal() const;
};

double mutual_information(const JointDistribution& j);

/// J_p(i, j) = (a_j | Psi_i) and J_q(i, j) = (a_j | (C x I) Psi_i). C acts
/// on the leading factors of the ensemble's system.
std::pair<JointDistribution, JointDistribution> scheme_joint_dists(const Ensemble& ens, const ObservationTest& test,
                                                                   const ChannelMat& c);

struct CriterionValue {
  double value = 0.0;
  double L = 0.0;  ///< log2(m n - 1)
  int m = 1;       ///< test outcomes
  int n = 1;       ///< ensemble members
};

CriterionValue classical_criterion(const Ensemble& ens, const ObservationTest& test, const ChannelMat& c);

/// 3 gamma + 3 H2(gamma) / L, valid for 0 <= gamma < 1 - 1/(2^L + 1).
double continuity_bound(double gamma, double L);

struct EntropyValue {
  double value = 0.0;
  BoundDirection direction = BoundDirection::exact;
};

/// Minimum outcome entropy over tests of atomic effects.
EntropyValue measurement_entropy(const StateVec& rho, const SearchConfig& cfg = {});
/// Minimum weight entropy over pure decompositions.
EntropyValue decomposition_entropy(const StateVec& rho, const SearchConfig& cfg = {});
/// Maximum mutual information between ensemble label and test outcome.
EntropyValue accessible_information(const TheoryModel& model, const SearchConfig& cfg = {});
/// Maximum mutual information over refinements of rho read out by a test on
/// the same system; 0 for pure states.
EntropyValue state_information(const StateVec& rho, const SearchConfig& cfg = {});

/// I0 / log2 D1. Throws ValidationError for I0 < 0 or a nonpositive denominator.
double ic_lower_bound(double i0, double obit_dim_log);
/// log2 of the linear dimension of the model's obit.
double obit_dim_log(const TheoryModel& model);

/// D(N) <= k D(1)^N for N = 1..n_max.
bool regular_scaling_holds(const TheoryModel& model, int n_max = 6, double k = 1.0);

}  // namespace opinfo
