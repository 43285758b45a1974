#include <cmath>

#include "doctest.h"
#include "opinfo/optim.hpp"

using namespace opinfo;

namespace {
LinearProgram lp(Vec c, Mat a, Vec b, Vec lo, Vec hi) { return {std::move(c), std::move(a), std::move(b), std::move(lo), std::move(hi)}; }
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("box LP") {
  const auto r = lp_solve(lp(Vec::Ones(1), Mat(0, 1), Vec(0), Vec::Zero(1), Vec::Ones(1)));
  CHECK(r.status == LpStatus::optimal);
  CHECK(r.value == doctest::Approx(1.0));
}

TEST_CASE("two-variable LP with a known vertex") {
  Mat a(3, 2);
  a << 1, 1, 1, 3, 1, 0;
  Vec b(3);
  b << 4, 6, 3;
  Vec c(2);
  c << 3, 2;
  const auto r = lp_solve(lp(c, a, b, Vec::Zero(2), Vec::Constant(2, kInf)));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == doctest::Approx(11.0));
  CHECK(r.x(0) == doctest::Approx(3.0));
  CHECK(r.x(1) == doctest::Approx(1.0));
}

TEST_CASE("free and negative-bounded variables, negative right-hand sides") {
  // max -x - y  s.t.  -x - y <= -2 (x + y >= 2), x free, y in [-1, 5]
  Mat a(1, 2);
  a << -1, -1;
  Vec b(1);
  b << -2;
  Vec c(2);
  c << -1, -1;
  Vec lo(2), hi(2);
  lo << -kInf, -1;
  hi << kInf, 5;
  const auto r = lp_solve(lp(c, a, b, lo, hi));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == doctest::Approx(-2.0));
}

TEST_CASE("infeasible and unbounded programs") {
  Mat a(1, 1);
  a << 1;
  Vec b(1);
  b << -1;
  CHECK(lp_solve(lp(Vec::Ones(1), a, b, Vec::Zero(1), Vec::Ones(1))).status == LpStatus::infeasible);
  CHECK(lp_solve(lp(Vec::Ones(1), Mat(0, 1), Vec(0), Vec::Zero(1), Vec::Constant(1, kInf))).status ==
        LpStatus::unbounded);
}

TEST_CASE("nelder-mead finds the Rosenbrock minimum") {
  const ParamObjective f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  const auto r = nelder_mead(f, {-1.2, 1.0}, 5000, 1e-14);
  CHECK(r.value < 1e-8);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(r.evaluations <= 5000);
}

TEST_CASE("search configs are validated") {
  SearchConfig c;
  CHECK_NOTHROW(c.validate());
  c.restarts = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("test search is deterministic and respects seeds") {
  const auto model = quantum_theory(2);
  CMat rho(2, 2);
  rho << 0.9, 0, 0, 0.1;
  const auto s = quantum_state(rho);
  const TestObjective obj = [&](const ObservationTest& t) {
    double h = 0.0;
    for (const auto& e : t.effects) {
      const double p = std::max(0.0, pair(e, s));
      if (p > 0) h -= p * std::log2(p);
    }
    return h;
  };
  const SearchConfig cfg{2, 300, 4, 1e-10};
  const auto a = minimize_over_tests(obj, *model, 2, cfg, TestFamily::atomic);
  const auto b = minimize_over_tests(obj, *model, 2, cfg, TestFamily::atomic);
  CHECK(a.value == b.value);
  CHECK(a.value == doctest::Approx(0.4689955935892812).epsilon(1e-6));
  CHECK(validate_test(a.test).valid);
}

TEST_CASE("ensemble and test search reaches one bit on a classical bit") {
  const auto model = classical_theory(2);
  const PairObjective obj = [](const Ensemble& e, const ObservationTest& t) {
    // probability of guessing the member label correctly
    double p = 0.0;
    for (size_t i = 0; i < std::min(e.size(), t.size()); ++i) p += pair(t.effects[i], e.members[i]);
    return p;
  };
  const auto r = maximize_over_ensembles_and_tests(obj, *model, {2, 2}, {2, 300, 1, 1e-10});
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
}
