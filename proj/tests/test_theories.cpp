#include <cmath>
#include <random>

#include "doctest.h"
#include "opinfo/theories.hpp"

using namespace opinfo;

TEST_CASE("theory specs") {
  CHECK(parse_theory("classical:3")->system() == SystemLabel::classical(3));
  CHECK(parse_theory("quantum:2")->name() == "quantum:2");
  CHECK(parse_theory("squit")->obit() == SystemLabel::squit());
  CHECK(parse_theory("quantum:3")->obit() == SystemLabel::quantum(2));
  CHECK(parse_theory("classical:4")->obit() == SystemLabel::classical(2));
  CHECK_THROWS_AS(parse_theory("qutrit"), ValidationError);
  CHECK_THROWS_AS(parse_theory("quantum:x"), ValidationError);
  CHECK_THROWS(parse_theory("classical:1"));
}

TEST_CASE("squit effect polytope") {
  const auto m = boxworld_squit();
  const auto facets = m->effect_facets();
  CHECK(facets.size() == 8);
  const auto ext = m->extremal_effects();
  REQUIRE(ext.size() == 4);
  for (const auto& e : ext) {
    CHECK(m->is_effect(e));
    int tight = 0;
    for (const auto& f : facets) {
      if (std::abs(f.normal.dot(e.coords) - f.offset) < 1e-12) ++tight;
    }
    CHECK(tight == 4);
    // touches 1 on a corner, 0 on the opposite one
    double hi = 0.0, lo = 1.0;
    for (const auto& s : m->pure_states()) {
      hi = std::max(hi, pair(e, s));
      lo = std::min(lo, pair(e, s));
    }
    CHECK(hi == doctest::Approx(1.0));
    CHECK(lo == doctest::Approx(0.0));
  }
  CHECK(m->pure_states().size() == 4);
  CHECK(m->is_state(squit_state(1.0, -1.0)));
  CHECK_FALSE(m->is_state(squit_state(1.1, 0.0)));
}

TEST_CASE("qubit coordinates reproduce the trace rule") {
  CMat rho(2, 2);
  rho << 0.7, Complex(0.2, -0.1), Complex(0.2, 0.1), 0.3;
  const auto s = quantum_state(rho);
  CHECK(s.coords(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CMat e = CMat::Zero(2, 2);
  e(0, 0) = 1.0;
  CHECK(pair(quantum_effect(e), s) == doctest::Approx(0.7));
  CHECK((density_matrix(s) - rho).norm() < 1e-12);
}

TEST_CASE("pure decompositions are refinements into pure members") {
  std::mt19937_64 rng(8);
  for (const auto& sys : {SystemLabel::classical(3), SystemLabel::quantum(2), SystemLabel::quantum(3), SystemLabel::squit()}) {
    const auto model = model_for(sys);
    for (int i = 0; i < 10; ++i) {
      const auto rho = random_state(sys, rng);
      for (const auto& dec : pure_decompositions(rho, 3, 17)) {
        CHECK((dec.total().coords - rho.coords).cwiseAbs().maxCoeff() < 1e-9);
        for (const auto& m : dec.members) {
          const double w = m.normalization();
          if (w > 1e-12) CHECK(model->is_pure((1.0 / w) * m, 1e-7));
        }
      }
    }
  }
}

TEST_CASE("squit corner decompositions sweep a segment") {
  const auto c = squit_state(0.0, 0.0);
  for (double t : {0.0, 0.3, 1.0}) {
    const auto w = squit_corner_weights(c, t);
    double sum = 0.0;
    for (double v : w) {
      CHECK(v >= -1e-12);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0));
  }
  const auto v0 = squit_corner_weights(c, 0.0);
  CHECK(std::count_if(v0.begin(), v0.end(), [](double v) { return v > 1e-12; }) == 2);
}

TEST_CASE("random channels are deterministic channels") {
  std::mt19937_64 rng(9);
  const SystemLabel pairs[][2] = {
      {SystemLabel::classical(2), SystemLabel::quantum(3)}, {SystemLabel::quantum(3), SystemLabel::quantum(2)},
      {SystemLabel::quantum(2), SystemLabel::classical(3)}, {SystemLabel::squit(), SystemLabel::squit()},
      {SystemLabel::squit(), SystemLabel::classical(2)},    {SystemLabel::classical(3), SystemLabel::squit()}};
  for (const auto& p : pairs) {
    for (int i = 0; i < 10; ++i) {
      const auto c = random_channel(p[0], p[1], rng);
      const auto rep = validate_channel(c, 3, 32);
      CHECK(rep.valid);
      CHECK(rep.deterministic);
    }
  }
  CHECK_THROWS_AS(random_channel(SystemLabel::quantum(2), SystemLabel::squit(), rng), UnsupportedFeature);
}

TEST_CASE("reversible channels come with their inverse") {
  std::mt19937_64 rng(10);
  for (const auto& sys : {SystemLabel::classical(3), SystemLabel::quantum(2), SystemLabel::squit()}) {
    const auto [u, inv] = random_reversible(sys, rng);
    CHECK((compose_seq(u, inv).matrix - Mat::Identity(sys.dim(), sys.dim())).norm() < 1e-10);
    CHECK(validate_channel(u).valid);
  }
}

TEST_CASE("steering reproduces every member") {
  std::mt19937_64 rng(12);
  const CMat half = CMat::Identity(2, 2) / 2.0;
  const auto mixed = quantum_state(half);
  const auto cert = steer(mixed, pure_decompositions(mixed, 0)[0]);
  CHECK(cert.max_residual() < 1e-12);
  CHECK(cert.dilation.ancilla() == SystemLabel::quantum(2));
  const double uni[] = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  const auto trit = classical_state(uni);
  CHECK(steer(trit, pure_decompositions(trit, 0)[0]).max_residual() == 0.0);
  CHECK_THROWS_AS(steer(squit_state(0, 0), Ensemble{SystemLabel::squit(), {squit_state(0, 0)}}), UnsupportedFeature);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_state(SystemLabel::quantum(3), rng);
    CHECK(steer(rho, random_refinement(rho, 3, rng)).max_residual() < 1e-9);
  }
}

TEST_CASE("sampled dilations marginalize to the state") {
  std::mt19937_64 rng(13);
  for (const auto& sys : {SystemLabel::classical(2), SystemLabel::quantum(2), SystemLabel::squit()}) {
    const auto rho = random_state(sys, rng);
    const auto dils = sample_dilations(rho, {4, 0, 21});
    CHECK(dils.size() >= 2);
    for (const auto& d : dils) {
      CHECK((marginalize(d).coords - rho.coords).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(is_normalized_state(d.joint));
    }
  }
}

TEST_CASE("seeded sampling is reproducible") {
  const auto a = random_state(SystemLabel::quantum(3), 42);
  const auto b = random_state(SystemLabel::quantum(3), 42);
  CHECK(a.coords == b.coords);
}

TEST_CASE("regular scaling dimensions") {
  CHECK(composite_dimension(*quantum_theory(2), 3) == 64);
  CHECK(composite_dimension(*classical_theory(3), 2) == 9);
  CHECK(composite_dimension(*boxworld_squit(), 2) == 9);
}
