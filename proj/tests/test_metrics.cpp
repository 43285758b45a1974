#include <cmath>
#include <random>

#include "doctest.h"
#include "opinfo/metrics.hpp"

using namespace opinfo;

namespace {
StateVec bit(double p0) {
  const double p[] = {p0, 1.0 - p0};
  return classical_state(p);
}
StateVec qubit_a() {
  CMat r(2, 2);
  r << 0.7, Complex(0.2, -0.1), Complex(0.2, 0.1), 0.3;
  return quantum_state(r);
}
StateVec qubit_b() {
  CMat s(2, 2);
  s << 0.4, Complex(0.0, 0.1), Complex(0.0, -0.1), 0.6;
  return quantum_state(s);
}
const SearchConfig kSmall{2, 300, 1, 1e-10};
}  // namespace

TEST_CASE("classical norm and fidelity") {
  const auto d = bit(0.5) - bit(0.9);
  CHECK(op_norm(d) == doctest::Approx(0.8));
  CHECK(op_norm_lp(d) == doctest::Approx(0.8));
  const auto f = fidelity(bit(0.5), bit(0.9));
  CHECK(f.value == doctest::Approx(0.8944271909999159).epsilon(1e-12));
  CHECK(f.direction() == BoundDirection::exact);
}

TEST_CASE("quantum trace norm and fidelity") {
  CHECK(op_norm(qubit_a() - qubit_b()) == doctest::Approx(0.8246211251235321).epsilon(1e-12));
  CHECK(fidelity(qubit_a(), qubit_b()).value == doctest::Approx(0.907560753814871).epsilon(1e-10));
  CHECK_THROWS_AS(op_norm_lp(qubit_a() - qubit_b()), UnsupportedFeature);
  const CVec zero = CVec::Unit(2, 0);
  const CMat half = CMat::Identity(2, 2) / 2.0;
  CHECK(fidelity(quantum_pure_state(zero), quantum_state(half)).value == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("squit norm via the effect LP and fidelity via search") {
  const auto d = squit_state(0.5, 0.2) - squit_state(0.0, 0.0);
  CHECK(op_norm(d) == doctest::Approx(0.5));
  const auto f = fidelity(squit_state(1.0, 1.0), squit_state(0.2, -0.3), kSmall);
  CHECK(f.value == doctest::Approx(0.5916079783099616).epsilon(1e-9));
  CHECK(f.method == FidelityMethod::search_upper_bound);
  CHECK(f.direction() == BoundDirection::upper);
  CHECK(f.test.has_value());
}

TEST_CASE("fidelity needs normalized inputs") {
  CHECK_THROWS_AS(fidelity(0.5 * bit(0.5), bit(0.5)), ValidationError);
}

TEST_CASE("Fuchs bounds for a classical pair") {
  const auto b = fuchs_bounds(bit(0.5), bit(0.9));
  CHECK(b.lower == doctest::Approx(1.0 - 0.8944271909999159));
  CHECK(b.middle == doctest::Approx(0.4));
  CHECK(b.upper == doctest::Approx(std::sqrt(1.0 - 0.8)));
  CHECK(b.holds());
}

TEST_CASE("property: norm contracts and Fuchs chain holds") {
  std::mt19937_64 rng(31);
  for (const auto& sys : {SystemLabel::classical(3), SystemLabel::quantum(2), SystemLabel::quantum(3), SystemLabel::squit()}) {
    for (int i = 0; i < 40; ++i) {
      const auto r = random_state(sys, rng);
      const auto s = random_state(sys, rng);
      const auto c = random_channel(sys, sys, rng);
      CHECK(check_norm_monotonicity(r - s, c).holds);
      const auto b = fuchs_bounds(r, s, kSmall);
      CHECK(b.holds(1e-9));
      CHECK(b.exact == !(sys == SystemLabel::squit()));
      CHECK(op_norm(r - r) == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("pure-input fidelity and correlation fidelity") {
  const auto q = SystemLabel::quantum(2);
  const CVec zero = CVec::Unit(2, 0);
  const auto phi = quantum_pure_state(zero);
  CHECK(fidelity_pure_input(phi, identity_channel(q)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(fidelity_pure_input(quantum_state(CMat::Identity(2, 2) / 2.0), identity_channel(q)), ValidationError);

  // completely depolarizing channel on I/2: entanglement fidelity 1/4
  Mat dep = Mat::Zero(4, 4);
  dep(0, 0) = 1.0;
  const ChannelMat c{q, q, dep, true};
  const auto cf = correlation_fidelity(quantum_state(CMat::Identity(2, 2) / 2.0), c);
  CHECK(cf.value == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(cf.direction == BoundDirection::exact);

  const auto ident = correlation_fidelity(bit(0.3), identity_channel(SystemLabel::classical(2)));
  CHECK(ident.value == doctest::Approx(1.0));
  CHECK(ident.direction == BoundDirection::upper);
}

TEST_CASE("outcome fidelity is the Bhattacharyya coefficient") {
  Vec p(2), q(2);
  p << 0.5, 0.5;
  q << 0.9, 0.1;
  CHECK(classical_fidelity(p, q) == doctest::Approx(0.8944271909999159));
}
