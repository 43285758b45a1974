#pragma once

// Concrete operational probabilistic theories: the classical simplex,
// finite-dimensional quantum theory and the box-world squit.

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "opinfo/opt_core.hpp"

namespace opinfo {

/// Half-space normal . a <= offset of the effect polytope.
struct Facet {
  Vec normal;
  double offset = 0.0;
};

/// Description of one theory on one elementary system. Models are immutable
/// and shared through shared_ptr<const TheoryModel>.
class TheoryModel {
 public:
  virtual ~TheoryModel() = default;

  virtual TheoryId id() const = 0;
  const SystemLabel& system() const { return system_; }
  /// Elementary information carrier: bit, qubit or squit.
  virtual SystemLabel obit() const = 0;
  /// Spec string, e.g. "classical:3", "quantum:2", "squit".
  std::string name() const;

  EffectVec unit() const { return unit_effect(system_); }
  bool is_state(const StateVec& s) const { return opinfo::is_state(s); }
  bool is_effect(const EffectVec& a) const { return opinfo::is_effect(a); }
  virtual bool is_pure(const StateVec& s, double tol = 1e-9) const = 0;

  /// Facets of the effect polytope; empty for quantum theory, whose effect
  /// set is not polyhedral.
  virtual std::vector<Facet> effect_facets() const = 0;
  /// Extremal non-trivial effects (atomic effects normalized to touch 1).
  virtual std::vector<EffectVec> extremal_effects() const = 0;
  /// Pure states when the theory has finitely many; quantum returns the
  /// computational basis.
  virtual std::vector<StateVec> pure_states() const = 0;

  // Parameterizations used by the derivative-free searches. Every parameter
  // vector in R^k maps to a valid object.
  virtual int state_param_count() const = 0;
  virtual StateVec state_from_params(std::span<const double> params) const = 0;
  virtual int test_param_count(int outcomes) const = 0;
  virtual ObservationTest test_from_params(std::span<const double> params, int outcomes) const = 0;
  /// Tests whose effects are all proportional to atomic effects.
  virtual int atomic_test_param_count(int outcomes) const = 0;
  virtual ObservationTest atomic_test_from_params(std::span<const double> params, int outcomes) const = 0;

  /// Known-good seeds: the canonical fine-grained test padded or merged to
  /// `outcomes` outcomes.
  virtual std::vector<ObservationTest> canonical_tests(int outcomes) const = 0;
  /// Orthogonal/extremal ensembles of `size` members with matching reading
  /// tests of `outcomes` outcomes.
  virtual std::vector<std::pair<Ensemble, ObservationTest>> seed_pairs(int size, int outcomes) const = 0;

 protected:
  explicit TheoryModel(SystemLabel system) : system_(std::move(system)) {}

 private:
  SystemLabel system_;
};

using TheoryPtr = std::shared_ptr<const TheoryModel>;

/// d >= 2; throws DimensionError otherwise.
TheoryPtr classical_theory(int d);
TheoryPtr quantum_theory(int d);
TheoryPtr boxworld_squit();

/// Parses "classical:d", "quantum:d" or "squit".
TheoryPtr parse_theory(std::string_view spec);

/// Model for an atomic label.
TheoryPtr model_for(const SystemLabel& atomic);

// Named constructors for common states/effects.
StateVec classical_state(std::span<const double> probabilities);
StateVec quantum_state(const CMat& density);
StateVec quantum_pure_state(const CVec& amplitudes);
StateVec squit_state(double x, double y, double n = 1.0);
/// The squit effect gamma + alpha x + beta y.
EffectVec squit_effect(double gamma, double alpha, double beta);
EffectVec quantum_effect(const CMat& op);
CMat density_matrix(const StateVec& s);  ///< all-quantum systems only

/// Pure decompositions of a normalized state. Classical: the unique one.
/// Quantum: the eigendecomposition followed by `budget` random isometric
/// mixtures of eigenvectors. Squit: every corner-supported vertex solution,
/// followed by `budget` points along the one-parameter corner family.
std::vector<Ensemble> pure_decompositions(const StateVec& rho, int budget = 8, std::uint64_t seed = 1);

/// Corner weights of a squit state on the corners (1,1), (1,-1), (-1,1),
/// (-1,-1). The decompositions form a segment; t in [0,1] sweeps it and the
/// endpoints are the vertex decompositions.
std::array<double, 4> squit_corner_weights(const StateVec& rho, double t);

struct SteeringCertificate {
  DilationState dilation;
  ObservationTest test;          ///< on the ancilla
  std::vector<double> residuals; ///< max-abs deviation per member
  double max_residual() const;
};

/// Builds a dilation of rho and an ancilla test that steers it to each member
/// of `ens`. Classical and quantum only; squit throws UnsupportedFeature.
SteeringCertificate steer(const StateVec& rho, const Ensemble& ens);

// Seeded random objects. Identical seeds give bit-identical output.
StateVec random_state(const SystemLabel& system, std::mt19937_64& rng);
StateVec random_state(const SystemLabel& system, std::uint64_t seed);
StateVec random_pure_state(const SystemLabel& system, std::mt19937_64& rng);
StateVec random_mixed_state(const SystemLabel& system, std::mt19937_64& rng);  ///< full rank
/// A deterministic channel (stochastic matrix, CPTP map, or a mixture of
/// square symmetries and corner preparations for the squit).
ChannelMat random_channel(const SystemLabel& in, const SystemLabel& out, std::mt19937_64& rng);
ChannelMat random_channel(const SystemLabel& in, const SystemLabel& out, std::uint64_t seed);
/// A reversible channel together with its inverse.
std::pair<ChannelMat, ChannelMat> random_reversible(const SystemLabel& system, std::mt19937_64& rng);
/// Random refinement of rho with `size` members.
Ensemble random_refinement(const StateVec& rho, int size, std::mt19937_64& rng);

/// Quantum channel from Kraus operators K_i: X -> sum K_i X K_i^dagger.
ChannelMat kraus_channel(const SystemLabel& in, const SystemLabel& out, std::span<const CMat> kraus);

struct DilationSampling {
  int count = 6;             ///< random dilations besides the canonical one
  int max_ancilla = 0;       ///< 0: the dimension of the dilated system (Hilbert dim for quantum)
  std::uint64_t seed = 11;
};

/// Canonical dilation (classical copy / quantum minimal purification).
DilationState canonical_dilation(const StateVec& rho);
/// Canonical dilation first, then random ones: the trivial dilation and
/// post-processings of the canonical one by random channels on the ancilla.
std::vector<DilationState> sample_dilations(const StateVec& rho, const DilationSampling& cfg = {});

/// Linear dimension of A^N computed from the composition rule (for the
/// squit, the locally tomographic product, used only for bookkeeping).
long long composite_dimension(const TheoryModel& theory, int n);

}  // namespace opinfo
