#include <random>

#include "doctest.h"
#include "opinfo/theories.hpp"

using namespace opinfo;

TEST_CASE("labels compose lexicographically and drop trivial factors") {
  const auto a = SystemLabel::classical(2);
  const auto q = SystemLabel::quantum(2);
  const auto aq = SystemLabel::compose(a, q);
  CHECK(aq.dim() == 2 * 4);
  CHECK(aq.factors().size() == 2);
  CHECK(SystemLabel::compose(a, SystemLabel::trivial()) == a);
  CHECK(SystemLabel::compose(SystemLabel::trivial(), q) == q);
  CHECK(aq.strip_prefix(a) == q);
  CHECK_THROWS_AS(aq.strip_prefix(q), DimensionError);
  CHECK(SystemLabel::power(q, 3).hilbert_dim() == 8);
}

TEST_CASE("squit composites outside the modelled set are rejected") {
  CHECK_THROWS_AS(SystemLabel::compose(SystemLabel::squit(), SystemLabel::squit()), UnsupportedComposition);
  CHECK_THROWS_AS(SystemLabel::compose(SystemLabel::squit(), SystemLabel::quantum(2)), UnsupportedComposition);
  CHECK(SystemLabel::compose(SystemLabel::squit(), SystemLabel::classical(2)).dim() == 6);
}

TEST_CASE("unit effect pairs to one with every normalized state") {
  std::mt19937_64 rng(3);
  for (const auto& s : {SystemLabel::classical(3), SystemLabel::quantum(2), SystemLabel::quantum(3), SystemLabel::squit(),
                        SystemLabel::compose(SystemLabel::quantum(2), SystemLabel::classical(2))}) {
    for (int i = 0; i < 20; ++i) {
      const auto st = random_state(s, rng);
      CHECK(pair(unit_effect(s), st) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(is_normalized_state(st));
    }
  }
}

TEST_CASE("pairing factorizes over parallel composition") {
  std::mt19937_64 rng(4);
  const auto a = SystemLabel::quantum(2);
  const auto b = SystemLabel::classical(3);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_state(a, rng);
    const auto y = random_state(b, rng);
    const auto m = model_for(a)->extremal_effects();
    const EffectVec ea = m[static_cast<size_t>(i) % m.size()];
    const EffectVec eb{b, Vec::Unit(3, i % 3)};
    CHECK(pair(compose_par(ea, eb), compose_par(x, y)) == doctest::Approx(pair(ea, x) * pair(eb, y)).epsilon(1e-12));
  }
}

TEST_CASE("apply_local matches the kron of the channel with the identity") {
  std::mt19937_64 rng(5);
  const auto a = SystemLabel::quantum(2);
  const auto anc = SystemLabel::classical(2);
  const auto c = random_channel(a, a, rng);
  const auto s = random_state(SystemLabel::compose(a, anc), rng);
  const auto direct = apply(compose_par(c, identity_channel(anc)), s);
  CHECK((apply_local(c, s).coords - direct.coords).norm() < 1e-12);
  const auto marg = marginalize({s, a});
  CHECK(marg.normalization() == doctest::Approx(1.0));
}

TEST_CASE("test validation and coarse graining") {
  const auto c3 = SystemLabel::classical(3);
  ObservationTest t{c3, {{c3, Vec::Unit(3, 0)}, {c3, Vec::Unit(3, 1)}, {c3, Vec::Unit(3, 2)}}};
  CHECK(validate_test(t).valid);
  const auto g = coarse_grain(t, {{0, 2}, {1}});
  CHECK(g.size() == 2);
  CHECK(validate_test(g).valid);
  CHECK_THROWS_AS(coarse_grain(t, {{0}, {1}}), ValidationError);
  t.effects.pop_back();
  const auto rep = validate_test(t);
  CHECK_FALSE(rep.valid);
  CHECK(rep.sum_residual == doctest::Approx(1.0));
}

TEST_CASE("channel validation catches non-stochastic and non-CP maps") {
  Mat bad(2, 2);
  bad << 1.2, 0.0, -0.2, 1.0;
  CHECK_FALSE(validate_channel({SystemLabel::classical(2), SystemLabel::classical(2), bad, true}).valid);
  CHECK(validate_channel(identity_channel(SystemLabel::quantum(2))).valid);
  CHECK(choi_min_eigenvalue(identity_channel(SystemLabel::quantum(2))) == doctest::Approx(0.0).epsilon(1e-12));

  // transpose map: positive but not completely positive
  const auto q = SystemLabel::quantum(2);
  Mat t(4, 4);
  for (int l = 0; l < 4; ++l) {
    const CMat b = hermitian_basis(2)[static_cast<size_t>(l)];
    const int dims[] = {2};
    t.col(l) = operator_to_coords(b.transpose(), dims);
  }
  CHECK(choi_min_eigenvalue({q, q, t, true}) < -0.4);
  CHECK_FALSE(validate_channel({q, q, t, true}).valid);
}
