#pragma once

// Block compression schemes, their figures of merit and rate searches.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opinfo/metrics.hpp"

namespace opinfo {

/// Largest linear dimension of A^N or B^M for which channel matrices are
/// built explicitly.
inline constexpr int kMaxMaterializedDim = 1024;

struct CompressionScheme {
  ChannelMat encoder;  ///< A^N -> B^M
  ChannelMat decoder;  ///< B^M -> A^N
  int N = 1;
  int M = 0;
  SystemLabel source;  ///< A
  SystemLabel obit;    ///< B

  ChannelMat round_trip() const { return compose_seq(encoder, decoder); }
  /// Both channels deterministic and systems consistent with N, M.
  void validate() const;
};

/// A^n, with n = 0 giving the trivial system.
SystemLabel block_system(const SystemLabel& a, int n);
StateVec tensor_power(const StateVec& s, int n);
ChannelMat tensor_power(const ChannelMat& c, int n);

enum class FomCriterion { ensemble, pure, dilation, fidelity, classical_error };
std::string to_string(FomCriterion c);

struct FoMReport {
  FomCriterion criterion = FomCriterion::ensemble;
  double value = 0.0;
  BoundDirection direction = BoundDirection::exact;
  std::vector<std::pair<std::string, std::string>> metadata;
};

struct FomSampling {
  DilationSampling dilations;
  int decompositions = 4;  ///< random pure decompositions per dilation
  std::uint64_t seed = 5;
  SearchConfig search;     ///< used only for search-based fidelities
};

/// sum_i op_norm((D E x I) Psi_i - Psi_i). The ensemble lives on A^N x ancilla.
double ensemble_fom(const CompressionScheme& s, const Ensemble& ens);

/// Explicit families.
double pure_fom(const CompressionScheme& s, std::span<const Ensemble> pure_decompositions);
double dilation_fom(const CompressionScheme& s, std::span<const DilationState> dilations);
double fidelity_fom(const CompressionScheme& s, std::span<const DilationState> dilations,
                    const SearchConfig& cfg = {});

/// Sampled families over dilations of rho^N (canonical dilation first).
std::vector<DilationState> fom_dilations(const StateVec& rho, int n, const FomSampling& cfg = {});
FoMReport pure_fom(const CompressionScheme& s, const StateVec& rho, const FomSampling& cfg = {});
FoMReport dilation_fom(const CompressionScheme& s, const StateVec& rho, const FomSampling& cfg = {});
/// All-quantum sources use only the canonical purification and are exact.
FoMReport fidelity_fom(const CompressionScheme& s, const StateVec& rho, const FomSampling& cfg = {});

struct ErrorProbability {
  double value = 0.0;      ///< 1 - sum_i C_ii p_i
  double norm_form = 0.0;  ///< (1/2) sum_i p_i |C e_i - e_i|_1
  double deviation() const { return std::abs(value - norm_form); }
};

/// C must be entrywise nonnegative with column sums at most 1.
ErrorProbability classical_error_prob(const Mat& c, const Vec& p);
/// Error probability of a classical scheme on the i.i.d. source p^N.
ErrorProbability classical_error_prob(const CompressionScheme& s, const Vec& p);

/// Keeps the 2^M most probable sequences (ties: lexicographic order) and
/// maps the rest to the most probable one.
CompressionScheme typical_set_scheme(const Vec& p, int N, int M);
/// Probability mass outside those 2^M sequences, computed exactly from
/// type-class masses.
double typical_set_error(const Vec& p, int N, int M);

enum class Selection {
  top_eigenvectors,  ///< the 2^M most probable product eigenvectors
  whole_classes,     ///< whole type classes while they fit into 2^M slots
};

/// Tr(P rho^N) for the projector P chosen by `selection` on the spectrum `eigs`.
double typical_mass(const Vec& eigs, int N, int M, Selection selection = Selection::top_eigenvectors);

/// Encodes the span of the 2^M most probable eigenvector products into M
/// qubits; the rest is replaced by the most probable product.
CompressionScheme typical_subspace_scheme(const StateVec& rho, int N, int M);

/// M = 0: discard the input and prepare phi^N. Throws ValidationError for a
/// mixed phi.
CompressionScheme measure_prepare_scheme(const StateVec& phi, int N);

CompressionScheme product_scheme(const CompressionScheme& s1, const CompressionScheme& s2);
/// E o U^N and (U^-1)^N o D. Throws ValidationError unless u_inv o u = id.
CompressionScheme conjugate_scheme(const CompressionScheme& s, const ChannelMat& u, const ChannelMat& u_inv);

/// Random deterministic encoder A^N -> B^M and decoder B^M -> A^N for
/// property sweeps; obit is the classical bit or the qubit. M >= 1.
CompressionScheme random_scheme(const SystemLabel& source, int N, int M, std::mt19937_64& rng);

enum class RateFamily { typical, all_projective, measure_prepare };
std::string to_string(RateFamily f);
RateFamily parse_rate_family(const std::string& s);

struct RateResult {
  std::optional<int> M;     ///< smallest accepted code length
  double acceptance = 0.0;  ///< fidelity figure of merit at M
  double rate() const { return M ? static_cast<double>(*M) : 0.0; }
};

/// Smallest M whose best scheme in `family` has fidelity FoM > 1 - eps. An
/// upper bound on the minimum over all schemes.
RateResult rate_search(const StateVec& rho, int N, double eps, RateFamily family);

/// Fidelity FoM of the best scheme in `family` at (N, M).
double family_fidelity(const StateVec& rho, int N, int M, RateFamily family);

struct RateRow {
  int N = 0;
  double eps = 0.0;
  std::optional<int> M;
  double acceptance = 0.0;
  double rate() const { return M ? static_cast<double>(*M) / N : std::numeric_limits<double>::quiet_NaN(); }
};

struct RateTable {
  RateFamily family = RateFamily::typical;
  std::vector<RateRow> rows;
  /// Rate at the largest N for the smallest eps: an upper-bound estimate of
  /// the information content within the family.
  RateRow summary;
};

RateTable estimate_info_content(const StateVec& rho, std::span<const int> Ns, std::span<const double> epss,
                                RateFamily family);

/// Maximum code length considered for A^N: N log2 D_A rounded up.
int max_code_length(const SystemLabel& source, int N);

}  // namespace opinfo
