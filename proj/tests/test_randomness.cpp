//  Copyright 2026 The relind Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <relind/determinacy.hpp>
#include <relind/errors.hpp>
#include <relind/randomness.hpp>

#include <doctest.h>

using namespace relind;

namespace {

CorrelationModel three_quarters() {
  return CorrelationModel({"a", "b"}, {Probability::ratio(3, 8), Probability::ratio(1, 8), Probability::ratio(1, 8),
                                       Probability::ratio(3, 8)});
}

}  // namespace

TEST_SUITE("randomness") {

TEST_CASE("splitmix64 reference output") {
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("seeded streams are reproducible and distinct") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng s1 = Rng(42).split(1), s2 = Rng(42).split(2);
  CHECK(s1.next() != s2.next());
  Rng u(7);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("tick schedule is dilated by gamma") {
  const Minkowski mk;
  TrngProcess rest{"a", {"a"}, {{-1, 0}, 0.0}, 1.0};
  auto ticks = tick_events(rest, 2, mk);
  REQUIRE(ticks.size() == 3);
  CHECK(ticks[0].variable == "a");
  CHECK(ticks[1].variable == "a_2");
  CHECK(ticks[2].location.t == doctest::Approx(2.0));

  TrngProcess moving{"m", {}, {{0, 0}, 0.6}, 1.0};
  ticks = tick_events(moving, 3, mk);
  REQUIRE(ticks.size() == 2);
  CHECK(ticks[0].location.t == doctest::Approx(1.25));
  CHECK(ticks[0].location.x == doctest::Approx(0.75));
  CHECK(ticks[1].variable == "m_2");

  moving.proper_period = 0;
  CHECK_THROWS_AS(tick_events(moving, 3, mk), DomainError);
}

TEST_CASE("joint, marginal and conditional are exact") {
  const auto m = three_quarters();
  CHECK(m.marginal("a", 0) == Probability::ratio(1, 2));
  CHECK(m.probability({{"a", 0}}) == Probability::ratio(1, 2));
  CHECK(m.probability({{"a", 1}, {"b", 0}}) == Probability::ratio(1, 8));
  CHECK(m.conditional("b", 0, {{"a", 0}}) == Probability::ratio(3, 4));
  CHECK(m.conditional("b", 0, {}) == Probability::ratio(1, 2));
  CHECK(m.position("b") == 1);
  const auto zero = CorrelationModel({"a", "b"}, {Probability(1), Probability(0), Probability(0), Probability(0)});
  CHECK_THROWS_AS(zero.conditional("b", 0, {{"a", 1}}), ModelInconsistency);
  CHECK_THROWS(CorrelationModel({"a", "b"}, {Probability(1)}));
}

TEST_CASE("model validation") {
  CHECK(validate_model(three_quarters()).ok());
  const auto bad = CorrelationModel({"a"}, {Probability::ratio(3, 4), Probability::ratio(1, 2)});
  CHECK_FALSE(validate_model(bad).ok());
  const auto negative = CorrelationModel({"a"}, {Probability::ratio(3, 2), Probability::ratio(-1, 2)});
  CHECK_FALSE(validate_model(negative).ok());
  auto declared = three_quarters();
  declared.declare_marginal("a", Probability::ratio(1, 3));
  const auto rep = validate_model(declared);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations[0].magnitude == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("sampling respects forced values") {
  const auto m = three_quarters();
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto s = m.sample(rng, {{"a", 1}});
    CHECK(s.at("a") == 1);
    CHECK(s.size() == 2);
  }
}

TEST_CASE("propensity conditions on the causal past only") {
  const Minkowski mk;
  const auto m = three_quarters();
  Determinations d;
  d.add({"a", 0, {0, 0}});
  d.add({"b", 1, {0, 1}});
  auto p = propensity_at(m, d, "b", 0, {0.6, 0.3}, mk);
  CHECK(p.propensity == Probability::ratio(3, 4));
  CHECK(p.conditioning == std::vector<std::string>{"a"});
  CHECK_FALSE(p.determinate);
  p = propensity_at(m, d, "b", 0, {0.4, 0.5}, mk);
  CHECK(p.propensity == Probability::ratio(1, 2));
  CHECK(p.conditioning.empty());
  p = propensity_at(m, d, "b", 0, {2, 1}, mk);
  CHECK(p.determinate);
  CHECK(p.propensity == Probability(0));
}

}
