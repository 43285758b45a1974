#pragma once

// Operational norm, test-minimized fidelity and the quantities built on them.

#include <optional>
#include <string>

#include "opinfo/optim.hpp"

namespace opinfo {

enum class BoundDirection { exact, upper, lower };
std::string to_string(BoundDirection d);

enum class FidelityMethod { closed_form, search_upper_bound };

struct FidelityResult {
  double value = 0.0;
  FidelityMethod method = FidelityMethod::closed_form;
  std::optional<ObservationTest> test;  ///< minimizing test found by a search

  BoundDirection direction() const {
    return method == FidelityMethod::closed_form ? BoundDirection::exact : BoundDirection::upper;
  }
};

/// sup over effects a of (2a - u | delta). Classical blocks give the l1 norm,
/// quantum blocks the trace norm, squit blocks solve an LP over the effect
/// polytope.
double op_norm(const StateVec& delta);
/// The same supremum as an explicit LP over the effect polytope (classical
/// and squit blocks). Used as an oracle for the closed forms.
double op_norm_lp(const StateVec& delta);

struct NormMonotonicityReport {
  double before = 0.0;
  double after = 0.0;
  bool holds = true;
};
NormMonotonicityReport check_norm_monotonicity(const StateVec& delta, const ChannelMat& c);

/// sum_i sqrt(p_i q_i), negative entries clamped to zero.
double classical_fidelity(const Vec& p, const Vec& q);
/// Classical fidelity of the outcome distributions of `test` on rho, sigma.
double outcome_fidelity(const StateVec& rho, const StateVec& sigma, const ObservationTest& test);

/// Infimum over observation tests of the outcome fidelity. Throws
/// ValidationError unless both inputs are normalized states.
FidelityResult fidelity(const StateVec& rho, const StateVec& sigma, const SearchConfig& cfg = {});

struct FuchsBounds {
  double lower = 0.0;   ///< 1 - F
  double middle = 0.0;  ///< half the operational norm of rho - sigma
  double upper = 0.0;   ///< sqrt(1 - F^2)
  bool exact = true;    ///< false when F is only a search upper bound

  /// Full chain when F is exact, otherwise only lower <= middle.
  bool holds(double tol = 1e-9) const;
};
FuchsBounds fuchs_bounds(const StateVec& rho, const StateVec& sigma, const SearchConfig& cfg = {});

/// F(Phi, (C x I) Phi)^2 for a pure Phi; C acts on the leading factors.
double fidelity_pure_input(const StateVec& phi, const ChannelMat& c);

/// F(Psi, (C x I) Psi)^2 for an arbitrary dilation; C acts on the dilated system.
double dilation_fidelity(const DilationState& psi, const ChannelMat& c, const SearchConfig& cfg = {});

struct CorrelationFidelity {
  double value = 1.0;
  BoundDirection direction = BoundDirection::upper;
  int dilations = 0;
};

/// Minimum of dilation_fidelity over sampled dilations of rho. All-quantum
/// systems use only the canonical purification and report an exact value.
CorrelationFidelity correlation_fidelity(const StateVec& rho, const ChannelMat& c,
                                         const DilationSampling& sampling = {}, const SearchConfig& cfg = {});

}  // namespace opinfo
