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

#include "relind/scenario.hpp"

namespace relind {

namespace {

SpacetimePoint at(double t, double x) { return SpacetimePoint(t, x); }

Observer observer(std::string label, double t, double x, double v = 0.0) {
  return Observer{std::move(label), Worldline{at(t, x), v}};
}

// A rest-frame TRNG whose first tick (named `name`) falls at (t, x).
TrngDecl trng(const std::string& name, double t, double x, double horizon) {
  TrngDecl d;
  d.process.prefix = name;
  d.process.labels = {name};
  d.process.worldline = Worldline{at(t - 1.0, x), 0.0};
  d.process.proper_period = 1.0;
  d.process.marginal = Probability::ratio(1, 2);
  d.horizon = horizon;
  return d;
}

Query truth(std::string label, std::string_view prop, double t, double x) {
  return {std::move(label), TruthQuery{Proposition::parse(prop), at(t, x)}};
}

Query state_at_point(std::string label, double t, double x) {
  return {std::move(label), StateQuery{StateTarget{at(t, x), "", 0.0}}};
}

StateTarget slice(std::string frame, double time) { return StateTarget{std::nullopt, std::move(frame), time}; }

Scenario fig1() {
  Scenario s;
  s.name = "fig1";
  s.description =
      "Alice and Bob at rest one light-minute apart; Charlie and Debbie move at v = 0.5. "
      "Alice's TRNG emits bit a at 1:00 pm (t = 0).";
  s.seed = 1;
  s.frames = {{Frame{0.0, "rest"}, at(0, 0)}, {Frame{0.5, "moving"}, at(0, 1)}};
  s.observers = {observer("Alice", 0, 0), observer("Bob", 0, 1), observer("Charlie", 0, 1, 0.5),
                 observer("Debbie", -0.5, 0, 0.5)};
  s.trngs = {trng("a", 0, 0, 2)};
  s.queries = {
      truth("A' (Debbie meets Alice's past)", "a=0", -0.5, 0),
      truth("B = C at 1:00 pm", "a=0", 0, 1),
      truth("Bob at 1:01 pm", "a=0", 1, 1),
      truth("Alice at 1:01 pm", "a=0", 1, 0),
      {"Bob reaches determinacy", FrontierQuery{Proposition::parse("a=0"), "Bob"}},
      {"rest-frame present", FalsifyQuery{"rest"}},
      {"Charlie's present", FalsifyQuery{"moving"}},
      {"Bob and Charlie overlap at B", LocalRealityQuery{{Proposition::parse("a=0")}, at(0, 1)}},
  };
  return s;
}

Scenario fig2() {
  Scenario s;
  s.name = "fig2";
  s.description =
      "Independent TRNGs at Alice (x = 0) and Bob (x = 1) each emit a bit at 1:00 pm; "
      "their parity is determinate only where the future light cones overlap.";
  s.seed = 2;
  s.frames = {{Frame{0.0, "rest"}, std::nullopt}};
  s.observers = {observer("Alice", 0, 0), observer("Bob", 0, 1), observer("Midpoint", 0, 0.5)};
  s.trngs = {trng("a", 0, 0, 1), trng("b", 0, 1, 1)};
  s.queries = {
      {"parity at the midpoint", FrontierQuery{Proposition::parse("a=1 ^ b=1"), "Midpoint"}},
      {"parity at Alice", FrontierQuery{Proposition::parse("a=1 ^ b=1"), "Alice"}},
      truth("just before the cones meet", "a=1 ^ b=1", 0.4, 0.5),
      truth("apex of the overlap", "a=1 ^ b=1", 0.5, 0.5),
      truth("a = b at the apex", "a=0 <-> b=0", 0.5, 0.5),
      truth("excluded middle before 1:00 pm", "a=0 | a=1", -0.5, 0),
  };
  return s;
}

Scenario fig3() {
  Scenario s;
  s.name = "fig3";
  s.description =
      "W state shared by Alice, Bob and Charlie. Alice (t1 = 0) and Bob (t2 = 0.2) both find no particle; "
      "the moving frame sees Bob's measurement first.";
  s.seed = 3;
  s.frames = {{Frame{0.0, "rest"}, at(0, 0)}, {Frame{0.5, "moving"}, at(0, 0)}};
  s.observers = {observer("Alice", 0, 0), observer("Bob", 0, 1), observer("Charlie", 0, 2)};
  QuantumDecl q;
  q.initial_name = "w3";
  q.measurements = {{"a", 0, Basis::z(), at(0, 0)}, {"b", 1, Basis::z(), at(0.2, 1)}};
  s.quantum = q;
  s.outcomes = {{"a", 0}, {"b", 0}};
  s.queries = {
      {"beta: rest frame between t1 and t2", StateQuery{slice("rest", 0.1)}},
      {"eta: moving frame between t2' and t1'", StateQuery{slice("moving", -0.1)}},
      {"gamma: rest frame after both", StateQuery{slice("rest", 5)}},
      {"gamma': moving frame after both", StateQuery{slice("moving", 5)}},
      {"intermediate states", OverlapQuery{slice("rest", 0.1), slice("moving", -0.1)}},
      {"final states", OverlapQuery{slice("rest", 5), slice("moving", 5)}},
      state_at_point("Alice's cone only", 0.5, -0.2),
      state_at_point("Bob's cone only", 0.7, 1.4),
      state_at_point("both cones", 2, 0.5),
      {"per-point intermediate states", OverlapQuery{StateTarget{at(0.5, -0.2), "", 0.0},
                                                     StateTarget{at(0.7, 1.4), "", 0.0}}},
  };
  return s;
}

Scenario prbox() {
  Scenario s;
  s.name = "prbox";
  s.description = "PR box shared by Alice (input x = 0, outcome a = 0) and Bob (random input y).";
  s.seed = 4;
  s.observers = {observer("Alice", 0, 0), observer("Bob", 0, 1)};
  BoxDecl b;
  b.name = "pr";
  b.preset = "pr";
  b.box = pr_box();
  b.alice = BoxPort{"x", "a", at(0, 0), Probability(0)};
  b.bob = BoxPort{"y", "b", at(0, 1), Probability::ratio(1, 2)};
  s.boxes = {b};
  s.outcomes = {{"a", 0}};
  s.queries = {
      {"", NoSignalingQuery{"pr"}},
      {"", ChshQuery{"pr"}},
      {"", LocalBoundQuery{"pr"}},
      {"inside Alice's cone", BoxPropensityQuery{"pr", Side::A, at(1, 0.5)}},
      {"outside Alice's cone", BoxPropensityQuery{"pr", Side::A, at(0.4, 0.9)}},
      {"inside Alice's cone only", PropensityQuery{"b", 0, at(0.6, 0.3)}},
      {"outside both cones", PropensityQuery{"b", 0, at(0.4, 0.5)}},
  };
  return s;
}

Scenario singlet_scenario() {
  Scenario s;
  s.name = "singlet";
  s.description = "Singlet shared by Alice (x basis, a = 0) and Bob (y basis, b = 0), space-like separated.";
  s.seed = 5;
  s.observers = {observer("Alice", 0, 0), observer("Bob", 0, 1)};
  QuantumDecl q;
  q.initial_name = "singlet";
  q.measurements = {{"a", 0, Basis::x(), at(0, 0)}, {"b", 1, Basis::y(), at(0, 1)}};
  s.quantum = q;
  s.outcomes = {{"a", 0}, {"b", 0}};
  s.queries = {
      state_at_point("before both measurements", -1, 0.5),
      state_at_point("Alice's cone only", 0.4, 0.1),
      state_at_point("Bob's cone only", 0.4, 0.9),
      state_at_point("both cones", 1, 0.5),
      {"Bob's outcome seen from Alice's cone", PropensityQuery{"b", 0, at(0.4, 0.1)}},
      {"Alice's and Bob's attributions", OverlapQuery{StateTarget{at(0.4, 0.1), "", 0.0},
                                                      StateTarget{at(0.4, 0.9), "", 0.0}}},
  };
  return s;
}

Scenario correlated() {
  Scenario s;
  s.name = "correlated";
  s.description = "Two TRNGs with uniform marginals and p(a = b) = 3/4; Alice obtains a = 0.";
  s.seed = 6;
  s.observers = {observer("Alice", 0, 0), observer("Bob", 0, 1)};
  s.trngs = {trng("a", 0, 0, 0), trng("b", 0, 1, 0)};
  s.correlations = {CorrelationDecl{
      {"a", "b"},
      {Probability::ratio(3, 8), Probability::ratio(1, 8), Probability::ratio(1, 8), Probability::ratio(3, 8)}}};
  s.outcomes = {{"a", 0}};
  s.queries = {
      {"inside Alice's cone only", PropensityQuery{"b", 0, at(0.6, 0.3)}},
      {"outside both cones", PropensityQuery{"b", 0, at(0.4, 0.5)}},
      {"Alice after her own bit", PropensityQuery{"a", 0, at(1, 0)}},
      truth("a = b in the overlap", "a=0 <-> b=0", 1, 0.5),
  };
  return s;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"fig1", "fig2", "fig3", "prbox", "singlet", "correlated"}; }

Scenario builtin_scenario(std::string_view name) {
  if (name == "fig1") return fig1();
  if (name == "fig2") return fig2();
  if (name == "fig3") return fig3();
  if (name == "prbox") return prbox();
  if (name == "singlet") return singlet_scenario();
  if (name == "correlated") return correlated();
  throw Error("unknown built-in scenario '" + std::string(name) + "'");
}

}  // namespace relind
