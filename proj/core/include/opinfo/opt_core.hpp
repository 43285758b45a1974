#pragma once

// Theory-agnostic algebra of states, effects, transformations and tests.
//
// Every system carries a real coordinate space of dimension D. States and
// effects live in that space and pair through the Euclidean dot product:
// classical systems use the canonical basis, quantum systems the
// Hilbert-Schmidt orthonormal Hermitian basis (so (E|rho) = Tr(E rho)), and
// the squit uses (x, y, n) for states and (alpha, beta, gamma) for effects.
// Composites use the lexicographic tensor-product basis.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "opinfo/linalg.hpp"
#include "opinfo/system.hpp"

namespace opinfo {

struct StateVec {
  SystemLabel system;
  Vec coords;

  /// Pairing with the unit effect.
  double normalization() const;
};

struct EffectVec {
  SystemLabel system;
  Vec coords;
};

/// Linear map on real coordinates, D_out x D_in.
struct ChannelMat {
  SystemLabel in;
  SystemLabel out;
  Mat matrix;
  bool deterministic = false;
};

struct ObservationTest {
  SystemLabel system;
  std::vector<EffectVec> effects;

  size_t size() const { return effects.size(); }
};

/// A refinement: subnormalized members whose sum is the target state.
struct Ensemble {
  SystemLabel system;
  std::vector<StateVec> members;

  StateVec total() const;
  std::vector<double> weights() const;
  size_t size() const { return members.size(); }
};

/// A joint state on `marginal_system` (x) ancilla.
struct DilationState {
  StateVec joint;
  SystemLabel marginal_system;

  SystemLabel ancilla() const { return joint.system.strip_prefix(marginal_system); }
};

EffectVec unit_effect(const SystemLabel& system);
StateVec zero_state(const SystemLabel& system);
ChannelMat identity_channel(const SystemLabel& system);

/// Bilinear pairing (a|s). Throws DimensionError on mismatched systems.
double pair(const EffectVec& a, const StateVec& s);

/// `second` after `first`.
ChannelMat compose_seq(const ChannelMat& first, const ChannelMat& second);

StateVec compose_par(const StateVec& x, const StateVec& y);
EffectVec compose_par(const EffectVec& x, const EffectVec& y);
ChannelMat compose_par(const ChannelMat& x, const ChannelMat& y);

StateVec apply(const ChannelMat& c, const StateVec& s);

/// Applies `c` to the leading factors of `s` (which must equal c.in) and the
/// identity to the remaining factors.
StateVec apply_local(const ChannelMat& c, const StateVec& s);

/// Applies `c` to the factor block that starts after `before` inside
/// `s.system`; identity elsewhere.
StateVec apply_at(const ChannelMat& c, const StateVec& s, const SystemLabel& before);

/// The effect a o C on c.in.
EffectVec pullback(const EffectVec& a, const ChannelMat& c);

/// Contracts the trailing factors of `s` with `b`: returns (I (x) b) s.
StateVec apply_effect_on_tail(const StateVec& s, const EffectVec& b);

/// (I_A (x) unit_B) applied to the joint state.
StateVec marginalize(const DilationState& d);

StateVec operator+(const StateVec& a, const StateVec& b);
StateVec operator-(const StateVec& a, const StateVec& b);
StateVec operator*(double w, const StateVec& s);
EffectVec operator+(const EffectVec& a, const EffectVec& b);
EffectVec operator*(double w, const EffectVec& a);

struct TestReport {
  bool valid = true;
  std::vector<bool> effect_valid;
  double sum_residual = 0.0;  ///< max-abs deviation of the summed effects from the unit effect
  std::string message;
};

/// Per-effect validity and the sum-to-unit residual (tolerance kSumTolerance).
TestReport validate_test(const ObservationTest& t);

/// Validates the combination sum_i effects[i] (x) ancilla_test.effects[i],
/// an effect on (effects' system) (x) (ancilla system).
TestReport validate_combined(std::span<const EffectVec> effects, const ObservationTest& ancilla_test);

/// Sums effects within each block of `partition`; blocks must cover every
/// index exactly once (ValidationError otherwise).
ObservationTest coarse_grain(const ObservationTest& t, const std::vector<std::vector<int>>& partition);

// Cone membership, dispatched on the factor structure of the system.
bool in_state_cone(const StateVec& s, double tol = kSumTolerance);
bool is_state(const StateVec& s, double tol = kSumTolerance);             ///< cone and normalization <= 1
bool is_normalized_state(const StateVec& s, double tol = kSumTolerance);  ///< cone and normalization == 1
bool is_effect(const EffectVec& a, double tol = kSumTolerance);

struct ChannelReport {
  bool valid = true;
  bool deterministic = false;
  double unit_residual = 0.0;  ///< max-abs deviation of unit o C from unit
  double worst_violation = 0.0;
  std::string message;
};

/// Validity of a transformation. Exact for classical (entrywise) and quantum
/// (Choi positivity, unit o C an effect) systems; other systems are
/// spot-checked on extremal and random inputs, with and without a classical
/// ancilla.
ChannelReport validate_channel(const ChannelMat& c, std::uint64_t seed = 7, int trials = 64);

/// Minimum eigenvalue of the normalized Choi matrix (1/d) sum |i><j| (x) C(|i><j|)
/// of an all-quantum channel.
double choi_min_eigenvalue(const ChannelMat& c);

}  // namespace opinfo
