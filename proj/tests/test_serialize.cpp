#include <random>

#include "doctest.h"
#include "opinfo/serialize.hpp"
#include "opinfo/theories.hpp"

using namespace opinfo;

TEST_CASE("system labels parse from text") {
  CHECK(parse_system("quantum:2*classical:3") == SystemLabel::compose(SystemLabel::quantum(2), SystemLabel::classical(3)));
  CHECK(parse_system("trivial").is_trivial());
  CHECK(parse_system("squit") == SystemLabel::squit());
  CHECK_THROWS(parse_system("nonsense"));
}

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(1);
  const auto sys = SystemLabel::compose(SystemLabel::quantum(2), SystemLabel::classical(2));
  const auto s = random_state(sys, rng);
  const auto s2 = state_from_json(to_json(s));
  CHECK(s2.system == s.system);
  CHECK(s2.coords == s.coords);

  const auto c = random_channel(SystemLabel::quantum(2), SystemLabel::classical(3), rng);
  const auto c2 = channel_from_json(to_json(c));
  CHECK(c2.matrix == c.matrix);
  CHECK(c2.deterministic == c.deterministic);

  const auto e = unit_effect(sys);
  CHECK(effect_from_json(to_json(e)).coords == e.coords);
}

TEST_CASE("malformed JSON is rejected") {
  nlohmann::json j = {{"system", "quantum:2"}, {"coords", {1.0, 0.0}}};
  CHECK_THROWS(state_from_json(j));
}
