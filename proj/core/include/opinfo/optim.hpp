#pragma once

// Dense LP solver and seeded multistart searches over tests and ensembles.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "opinfo/theories.hpp"

namespace opinfo {

/// maximize objective . x  subject to  a_ub x <= b_ub,  lower <= x <= upper.
/// Bounds may be +-infinity. Empty lower/upper mean 0 and +infinity.
struct LinearProgram {
  Vec objective;
  Mat a_ub;
  Vec b_ub;
  Vec lower;
  Vec upper;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  Vec x;
  int iterations = 0;
};

/// Two-phase dense simplex with Bland's rule. Throws DimensionError on
/// inconsistent shapes or more than `max_vars` variables.
LpResult lp_solve(const LinearProgram& p, int max_vars = 4096);

struct SearchConfig {
  int restarts = 8;
  int max_evals = 2000;  ///< per restart
  std::uint64_t seed = 1;
  double tolerance = 1e-10;

  void validate() const;  ///< throws ValidationError unless all positive
};

using ParamObjective = std::function<double(std::span<const double>)>;

struct LocalResult {
  double value = 0.0;
  std::vector<double> x;
  int evaluations = 0;
};

/// Nelder-Mead simplex minimization from x0 with initial step `step`.
LocalResult nelder_mead(const ParamObjective& f, std::vector<double> x0, int max_evals, double tolerance,
                        double step = 0.8);

enum class TestFamily { general, atomic };

struct TestSearchResult {
  double value = 0.0;
  ObservationTest test{SystemLabel::trivial(), {}};
  int evaluations = 0;
};

using TestObjective = std::function<double(const ObservationTest&)>;

/// Upper bound on the infimum of `objective` over n-outcome tests. Seeds
/// (canonical tests plus `extra_seeds`) are evaluated first; restart r then
/// draws its start from stream r of cfg.seed, so a larger restart budget
/// never returns a worse value.
TestSearchResult minimize_over_tests(const TestObjective& objective, const TheoryModel& model, int outcomes,
                                     const SearchConfig& cfg, TestFamily family = TestFamily::general,
                                     std::span<const ObservationTest> extra_seeds = {});

struct PairSearchResult {
  double value = 0.0;
  Ensemble ensemble{SystemLabel::trivial(), {}};
  ObservationTest test{SystemLabel::trivial(), {}};
  int evaluations = 0;
};

struct SearchSizes {
  int ensemble = 2;
  int outcomes = 2;
};

using PairObjective = std::function<double(const Ensemble&, const ObservationTest&)>;

/// Lower bound on the supremum of `objective` over normalized ensembles of
/// at most sizes.ensemble members and tests of sizes.outcomes outcomes.
PairSearchResult maximize_over_ensembles_and_tests(const PairObjective& objective, const TheoryModel& model,
                                                   SearchSizes sizes, const SearchConfig& cfg);

/// Same, with the ensemble restricted to refinements of rho.
PairSearchResult maximize_over_refinements_and_tests(const PairObjective& objective, const StateVec& rho,
                                                     SearchSizes sizes, const SearchConfig& cfg);

/// Refinement of rho indexed by the outcomes of `grouping`: quantum members
/// are sqrt(rho) A_k sqrt(rho); classical members are rho (.) a_k; squit
/// members group the corner decomposition at position t (a_k on classical:4).
Ensemble refinement_from_test(const StateVec& rho, const ObservationTest& grouping, double t = 0.0);

}  // namespace opinfo
