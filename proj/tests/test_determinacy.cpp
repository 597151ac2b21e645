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

#include <doctest.h>

using namespace relind;

namespace {

Determinations two_trngs(int a, int b) {
  Determinations d;
  d.add({"a", a, {0, 0}});
  d.add({"b", b, {0, 1}});
  return d;
}

}  // namespace

TEST_SUITE("determinacy") {

TEST_CASE("atoms are determinate inside the closed cone only") {
  const Minkowski mk;
  const auto d = two_trngs(0, 1);
  const auto a0 = Proposition::atom("a", 0);
  CHECK(truth_at(d, a0, {0, 0}, mk) == Truth::True);
  CHECK(truth_at(d, a0, {1, 1}, mk) == Truth::True);
  CHECK(truth_at(d, a0, {0, 1}, mk) == Truth::Indeterminate);
  CHECK(truth_at(d, a0, {-0.5, 0}, mk) == Truth::Indeterminate);
  CHECK(truth_at(d, Proposition::atom("a", 1), {1, 0}, mk) == Truth::False);
  CHECK_THROWS_AS(truth_at(d, Proposition::atom("z", 0), {0, 0}, mk), DeclarationError);
}

TEST_CASE("declared but undetermined variables stay indeterminate") {
  const Minkowski mk;
  Determinations d;
  d.declare("u");
  CHECK(d.find("u") == nullptr);
  CHECK(truth_at(d, Proposition::atom("u", 0), {100, 0}, mk) == Truth::Indeterminate);
  CHECK_FALSE(determinacy_frontier(d, Proposition::atom("u", 0), Worldline{}, mk).has_value());
}

TEST_CASE("duplicate determinations are rejected") {
  Determinations d;
  d.add({"a", 0, {0, 0}});
  CHECK_THROWS_AS(d.add({"a", 1, {1, 0}}), Error);
  CHECK_THROWS_AS(d.add({"b", 2, {1, 0}}), Error);
}

TEST_CASE("xor frontier at the midpoint") {
  const Minkowski mk;
  const auto d = two_trngs(1, 0);
  const auto p = Proposition::parse("a=1 ^ b=1");
  const auto t = determinacy_frontier(d, p, Worldline{{0, 0.5}, 0.0}, mk);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(truth_at(d, p, {0.5 - 1e-6, 0.5}, mk) == Truth::Indeterminate);
  CHECK(truth_at(d, p, {0.5, 0.5}, mk) == Truth::True);
  const auto region = determinate_region(d, p, mk);
  REQUIRE(region.size() == 1);
  CHECK(same_event(region[0], {0.5, 0.5}));
}

TEST_CASE("a disjunction can settle on one determinate disjunct") {
  const Minkowski mk;
  const auto d = two_trngs(0, 1);
  const auto p = Proposition::parse("a=0 | b=0");
  CHECK(truth_at(d, p, {0.2, 0}, mk) == Truth::True);
  // b = 1 cannot settle it, so Bob waits for Alice's cone.
  auto t = determinacy_frontier(d, p, Worldline{{0, 1}, 0.0}, mk);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(1.0));
  t = determinacy_frontier(two_trngs(1, 0), p, Worldline{{0, 1}, 0.0}, mk);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(0.0));
  const auto region = determinate_region(d, p, mk);
  REQUIRE(region.size() == 1);
  CHECK(same_event(region[0], {0, 0}));
}

TEST_CASE("excluded middle is not determinate before the event") {
  const Minkowski mk;
  const auto d = two_trngs(0, 0);
  CHECK(truth_at(d, Proposition::parse("a=0 | a=1"), {-0.5, 0}, mk) == Truth::Indeterminate);
}

TEST_CASE("causal past lists events in declaration order") {
  const Minkowski mk;
  const auto d = two_trngs(0, 0);
  const auto past = causal_past(d, {1, 0.5}, mk);
  REQUIRE(past.size() == 2);
  CHECK(past[0]->variable == "a");
  CHECK(causal_past(d, {0.2, 0}, mk).size() == 1);
}

TEST_CASE("knowledge overlay") {
  const Minkowski mk;
  const auto d = two_trngs(0, 0);
  const std::vector<KnowledgeMark> ok{{"Bob", "a", {1, 1}}};
  CHECK(check_knowledge(d, ok, mk).empty());
  const std::vector<KnowledgeMark> bad{{"Bob", "a", {0.5, 1}}};
  CHECK(check_knowledge(d, bad, mk).size() == 1);
}

TEST_CASE("present-reality falsifier") {
  const Minkowski mk;
  Determinations d;
  d.add({"a", 0, {0, 0}});
  const std::vector<Observer> obs{{"Alice", {{0, 0}, 0.0}}, {"Bob", {{0, 1}, 0.0}},
                                  {"Charlie", {{0, 1}, 0.5}}, {"Debbie", {{-0.5, 0}, 0.5}}};
  auto r = present_reality_falsifier(d, obs, Frame{}, mk);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->observer_at_q == "Bob");
  CHECK(r.counterexample->value_at_p == Truth::True);
  CHECK(r.counterexample->value_at_q == Truth::Indeterminate);
  CHECK(mk.simultaneous(Frame{}, r.counterexample->p, r.counterexample->q));

  const Frame moving{0.5, "moving"};
  r = present_reality_falsifier(d, obs, moving, mk);
  REQUIRE(r.counterexample.has_value());
  CHECK(mk.simultaneous(moving, r.counterexample->p, r.counterexample->q));
  CHECK(truth_at(d, r.counterexample->proposition, r.counterexample->q, mk) == Truth::Indeterminate);

  const std::vector<Observer> lone{{"Alice", {{0, 0}, 0.0}}};
  r = present_reality_falsifier(d, lone, Frame{}, mk);
  CHECK_FALSE(r.counterexample.has_value());
  CHECK_FALSE(r.reason.empty());
  CHECK_FALSE(present_reality_falsifier(Determinations{}, obs, Frame{}, mk).counterexample.has_value());
}

TEST_CASE("local reality is frame independent") {
  const Minkowski mk;
  const auto d = two_trngs(0, 1);
  const std::vector<Proposition> props{Proposition::parse("a=0"), Proposition::parse("a=0 ^ b=1")};
  const std::vector<Frame> frames{{0.5, "moving"}, {-0.9, "fast"}};
  const auto rep = check_local_reality(d, {0.5, 0.5}, props, frames, mk);
  CHECK(rep.holds());
  CHECK(rep.checked == 4);
}

TEST_CASE("boosting keeps the declared values") {
  const Minkowski mk;
  const auto d = two_trngs(0, 1).boosted(mk, 0.5);
  REQUIRE(d.find("b") != nullptr);
  CHECK(d.find("b")->value == 1);
  CHECK(d.find("b")->location.t == doctest::Approx(-0.5773502691896258));
}

}
