#include <cmath>
#include <random>

#include "doctest.h"
#include "opinfo/compression.hpp"

using namespace opinfo;

namespace {
Vec bern(double p1) {
  Vec p(2);
  p << 1.0 - p1, p1;
  return p;
}
StateVec qdiag(double a) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = 1.0 - a;
  return quantum_state(m);
}
}  // namespace

TEST_CASE("exact typical-set tails (independent multiprecision oracle)") {
  const Vec p = bern(0.11);
  CHECK(typical_set_error(p, 1000, 450) == doctest::Approx(0.927754092087088560).epsilon(1e-10));
  CHECK(typical_set_error(p, 1000, 550) == doctest::Approx(0.027356654817862585).epsilon(1e-9));
  CHECK(typical_set_error(p, 1000, 552) == doctest::Approx(0.024068172557343217).epsilon(1e-9));
  // brute force over all 16 sequences
  CHECK(typical_set_error(bern(0.3), 4, 2) == doctest::Approx(0.4512).epsilon(1e-12));
  CHECK(typical_set_error(bern(0.3), 4, 4) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("typical-set scheme error matches the tail") {
  const Vec p = bern(0.3);
  const auto s = typical_set_scheme(p, 4, 2);
  s.validate();
  const auto e = classical_error_prob(s, p);
  CHECK(e.value == doctest::Approx(0.4512).epsilon(1e-12));
  CHECK(e.deviation() < 1e-12);
}

TEST_CASE("typical masses under both selection policies") {
  Vec eig(2);
  eig << 0.9, 0.1;
  CHECK(typical_mass(eig, 10, 6) == doctest::Approx(0.9336355487999984).epsilon(1e-10));
  CHECK(typical_mass(eig, 10, 6, Selection::whole_classes) == doctest::Approx(0.9298091736000003).epsilon(1e-10));
}

TEST_CASE("Shannon rate at N = 1000") {
  const Vec p = bern(0.11);
  const double pv[] = {p(0), p(1)};
  const auto r = rate_search(classical_state(pv), 1000, 0.05, RateFamily::typical);
  REQUIRE(r.M);
  CHECK(*r.M == 552);
  CHECK(r.acceptance > 0.95);
}

TEST_CASE("qubit rates in the typical and enumerated families") {
  const auto rho = qdiag(0.9);
  const int expected[][2] = {{8, 6}, {10, 7}, {12, 8}, {14, 9}};
  for (const auto& e : expected) {
    const auto t = rate_search(rho, e[0], 0.1, RateFamily::typical);
    const auto a = rate_search(rho, e[0], 0.1, RateFamily::all_projective);
    REQUIRE(t.M);
    REQUIRE(a.M);
    CHECK(*t.M == e[1]);
    CHECK(*a.M == e[1]);
  }
  CHECK_THROWS_AS(rate_search(rho, 20, 0.1, RateFamily::all_projective), UnsupportedFeature);
}

TEST_CASE("closed-form family fidelity matches the materialized schemes") {
  const auto rho = qdiag(0.8);
  const auto s = typical_subspace_scheme(rho, 3, 2);
  s.validate();
  const auto fom = fidelity_fom(s, rho);
  CHECK(fom.direction == BoundDirection::exact);
  CHECK(fom.value == doctest::Approx(family_fidelity(rho, 3, 2, RateFamily::typical)).epsilon(1e-9));

  const Vec p = bern(0.2);
  const double pv[] = {p(0), p(1)};
  const auto cs = typical_set_scheme(p, 4, 2);
  const auto cf = fidelity_fom(cs, classical_state(pv));
  CHECK(cf.value == doctest::Approx(family_fidelity(classical_state(pv), 4, 2, RateFamily::typical)).epsilon(1e-9));
}

TEST_CASE("measure-and-prepare on pure states") {
  const auto phi = quantum_pure_state(CVec::Unit(2, 0));
  const auto s = measure_prepare_scheme(phi, 2);
  CHECK(s.M == 0);
  CHECK(pure_fom(s, phi).value < 1e-12);
  CHECK(dilation_fom(s, phi).value < 1e-12);
  CHECK(fidelity_fom(s, phi).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(measure_prepare_scheme(qdiag(0.9), 2), ValidationError);
  const auto r = rate_search(phi, 50, 0.01, RateFamily::measure_prepare);
  REQUIRE(r.M);
  CHECK(*r.M == 0);
  CHECK_FALSE(rate_search(qdiag(0.9), 50, 0.01, RateFamily::measure_prepare).M);
}

TEST_CASE("error probability identity") {
  std::mt19937_64 rng(2);
  std::gamma_distribution<double> g(1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 5;
    Mat c(d, d);
    Vec p(d);
    for (int k = 0; k < c.size(); ++k) c.data()[k] = g(rng);
    for (int k = 0; k < d; ++k) p(k) = g(rng);
    c = (c * c.colwise().sum().cwiseInverse().asDiagonal()).eval();
    p /= p.sum();
    CHECK(classical_error_prob(c, p).deviation() < 1e-12);
  }
}

TEST_CASE("conjugation by a reversible channel preserves figures of merit") {
  std::mt19937_64 rng(6);
  const auto a = SystemLabel::quantum(2);
  const auto s = random_scheme(a, 1, 1, rng);
  const auto [u, inv] = random_reversible(a, rng);
  const auto st = conjugate_scheme(s, u, inv);
  st.validate();
  const auto rho = random_state(a, rng);
  std::vector<DilationState> dils = fom_dilations(rho, 1);
  std::vector<DilationState> moved;
  for (const auto& d : dils) moved.push_back({apply_local(inv, d.joint), d.marginal_system});
  CHECK(dilation_fom(s, dils) == doctest::Approx(dilation_fom(st, moved)).epsilon(1e-9));
  CHECK_THROWS_AS(conjugate_scheme(s, u, u), ValidationError);
}

TEST_CASE("product schemes act blockwise") {
  const auto s1 = typical_set_scheme(bern(0.2), 2, 1);
  const auto s2 = typical_set_scheme(bern(0.4), 2, 2);
  const auto p = product_scheme(s1, s2);
  CHECK(p.N == 2);
  CHECK(p.M == 3);
  CHECK(p.encoder.in.dim() == 16);
}

TEST_CASE("rate tables are monotone in eps") {
  const auto rho = qdiag(0.85);
  const int Ns[] = {20, 60};
  const double eps[] = {0.02, 0.1, 0.3};
  const auto t = estimate_info_content(rho, Ns, eps, RateFamily::typical);
  REQUIRE(t.rows.size() == 6);
  for (size_t i = 0; i + 1 < t.rows.size(); ++i) {
    if (t.rows[i].N == t.rows[i + 1].N) CHECK(*t.rows[i].M >= *t.rows[i + 1].M);
  }
  CHECK(t.summary.N == 60);
  CHECK(t.summary.eps == 0.02);
}

TEST_CASE("block systems and tensor powers") {
  CHECK(block_system(SystemLabel::quantum(2), 0).is_trivial());
  CHECK(block_system(SystemLabel::quantum(2), 3).hilbert_dim() == 8);
  const auto s = tensor_power(qdiag(0.9), 2);
  CHECK(s.normalization() == doctest::Approx(1.0));
  CHECK(max_code_length(SystemLabel::classical(3), 4) == 7);
}
