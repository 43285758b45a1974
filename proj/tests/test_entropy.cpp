#include <cmath>
#include <random>

#include "doctest.h"
#include "opinfo/entropy.hpp"

using namespace opinfo;

namespace {
const SearchConfig kSmall{3, 400, 1, 1e-10};
StateVec qdiag(double a) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = 1.0 - a;
  return quantum_state(m);
}
}  // namespace

TEST_CASE("Shannon, binary and von Neumann entropies") {
  const double p[] = {0.9, 0.1};
  CHECK(shannon(std::span<const double>(p)) == doctest::Approx(0.4689955935892812).epsilon(1e-12));
  CHECK(binary_entropy(0.11) == doctest::Approx(0.499915958164528).epsilon(1e-12));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK_THROWS_AS(binary_entropy(1.5), ValidationError);
  CHECK(von_neumann(qdiag(0.9)) == doctest::Approx(0.4689955935892812).epsilon(1e-12));
  CHECK(von_neumann(quantum_pure_state(CVec::Unit(2, 0))) == 0.0);
}

TEST_CASE("mutual information of a 2x2 joint") {
  JointDistribution j{Mat(2, 2)};
  j.p << 0.3, 0.1, 0.2, 0.4;
  CHECK(mutual_information(j) == doctest::Approx(0.12451124978365313).epsilon(1e-12));
  JointDistribution bad{Mat::Constant(2, 2, 0.3)};
  CHECK_THROWS_AS(mutual_information(bad), ValidationError);
}

TEST_CASE("continuity bound") {
  CHECK(continuity_bound(0.1, std::log2(3.0)) == doctest::Approx(1.187709822868154).epsilon(1e-12));
  CHECK_THROWS_AS(continuity_bound(0.8, std::log2(3.0)), ValidationError);
}

TEST_CASE("classical criterion vanishes for identity channels and trivial tests") {
  const auto c2 = SystemLabel::classical(2);
  const Ensemble ens{c2, {{c2, Vec::Unit(2, 0) * 0.5}, {c2, Vec::Unit(2, 1) * 0.5}}};
  const ObservationTest t{c2, {{c2, Vec::Unit(2, 0)}, {c2, Vec::Unit(2, 1)}}};
  const auto v = classical_criterion(ens, t, identity_channel(c2));
  CHECK(v.value == doctest::Approx(0.0));
  CHECK(v.L == doctest::Approx(std::log2(3.0)));
  Mat flip(2, 2);
  flip << 0.5, 0.5, 0.5, 0.5;
  CHECK(classical_criterion(ens, t, {c2, c2, flip, true}).value == doctest::Approx(1.0 / std::log2(3.0)));
  const ObservationTest one{c2, {unit_effect(c2)}};
  CHECK(classical_criterion(ens, one, {c2, c2, flip, true}).value == 0.0);
}

TEST_CASE("qubit entropies agree with the spectrum") {
  const auto rho = qdiag(0.9);
  const auto me = measurement_entropy(rho, kSmall);
  const auto de = decomposition_entropy(rho, kSmall);
  CHECK(me.value == doctest::Approx(0.4689955935892812).epsilon(1e-7));
  CHECK(de.value == doctest::Approx(0.4689955935892812).epsilon(1e-7));
  CHECK(me.direction == BoundDirection::upper);
  CHECK(accessible_information(*quantum_theory(2), kSmall).value == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("squit center: decomposition entropy one bit") {
  const auto c = squit_state(0.0, 0.0);
  CHECK(decomposition_entropy(c, kSmall).value == doctest::Approx(1.0).epsilon(1e-7));
  const auto me = measurement_entropy(c, kSmall);
  CHECK(me.direction == BoundDirection::upper);
  CHECK(me.value == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("classical quantities are exact") {
  const double p[] = {0.75, 0.25};
  const auto s = classical_state(p);
  CHECK(measurement_entropy(s).direction == BoundDirection::exact);
  CHECK(accessible_information(*classical_theory(2), kSmall).value == doctest::Approx(1.0).epsilon(1e-9));
  const auto i0 = state_information(s, kSmall);
  CHECK(i0.direction == BoundDirection::exact);
  CHECK(i0.value == doctest::Approx(0.8112781244591328).epsilon(1e-6));
  CHECK(ic_lower_bound(i0.value, obit_dim_log(*classical_theory(2))) == doctest::Approx(0.8112781244591328).epsilon(1e-6));
}

TEST_CASE("qubit I^C bound uses the obit linear dimension") {
  const auto i0 = state_information(qdiag(0.75), kSmall);
  CHECK(i0.value == doctest::Approx(0.8112781244591328).epsilon(1e-6));
  CHECK(obit_dim_log(*quantum_theory(2)) == doctest::Approx(2.0));
  CHECK(ic_lower_bound(i0.value, 2.0) == doctest::Approx(0.4056390622295664).epsilon(1e-6));
}

TEST_CASE("pure states carry no state information") {
  CHECK(state_information(quantum_pure_state(CVec::Unit(2, 1)), kSmall).value == 0.0);
  CHECK(state_information(squit_state(1.0, -1.0), kSmall).value == 0.0);
}

TEST_CASE("property: 0 <= I <= min marginal entropy") {
  std::mt19937_64 rng(5);
  std::gamma_distribution<double> g(1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    Mat m(3, 4);
    for (int k = 0; k < m.size(); ++k) m.data()[k] = g(rng);
    JointDistribution j{m / m.sum()};
    const double info = mutual_information(j);
    CHECK(info >= 0.0);
    CHECK(info <= std::min(shannon(j.row_marginal()), shannon(j.col_marginal())) + 1e-12);
  }
}

TEST_CASE("regular scaling") {
  CHECK(regular_scaling_holds(*classical_theory(2)));
  CHECK(regular_scaling_holds(*quantum_theory(2)));
  CHECK(regular_scaling_holds(*boxworld_squit()));
  CHECK_FALSE(regular_scaling_holds(*quantum_theory(2), 3, 0.5));
}
