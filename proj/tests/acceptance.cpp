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

#include "cli.hpp"
#include "properties.hpp"

#include <relind/boxes.hpp>
#include <relind/scenario.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace relind;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> body;
};

const Minkowski kMk;

bool same_ray(const QuantumRegister& a, const QuantumRegister& b) {
  return std::abs(std::abs(overlap(a, b)) - 1.0) <= 1e-12;
}

QuantumRegister product2(const Basis& first, int i, const Basis& second, int j) {
  const std::array<std::array<Complex, 2>, 2> q{first.vectors[i], second.vectors[j]};
  return QuantumRegister::product(q);
}

Outcome fig1_geometry() {
  Outcome o;
  const Scenario s = builtin_scenario("fig1");
  const Realization r = realize(s, s.seed);
  const Frame moving{0.5, "moving"};
  const SpacetimePoint b{0, 1};
  const double tb = kMk.simultaneity_coordinate(moving, b);
  const auto a_prime = kMk.point_at_frame_time(Worldline{{0, 0}, 0.0}, moving, tb);
  o.require(std::abs(a_prime.t + 0.5) <= 1e-9 && std::abs(a_prime.x) <= 1e-9,
            "plane through B meets Alice at " + props::show(a_prime));
  const auto a0 = Proposition::parse("a=0");
  o.require(truth_at(r.determinations, a0, a_prime, kMk) == Truth::Indeterminate, "a=0 determinate at A'");
  o.require(truth_at(r.determinations, a0, b, kMk) == Truth::Indeterminate, "a=0 determinate at B");
  o.require(is_determinate(truth_at(r.determinations, a0, {1, 0}, kMk)), "a=0 indeterminate at (1, 0)");
  o.detail = o.pass ? "A' = " + props::show(a_prime) + ", a=0 indeterminate at A' and B, determinate at (1, 0)"
                    : o.detail;
  return o;
}

Outcome fig2_frontier() {
  Outcome o;
  const Scenario s = builtin_scenario("fig2");
  const Realization r = realize(s, s.seed);
  const auto p = Proposition::parse("a=1 ^ b=1");
  const auto t = determinacy_frontier(r.determinations, p, Worldline{{0, 0.5}, 0.0}, kMk);
  o.require(t.has_value() && std::abs(*t - 0.5) <= 1e-9, "frontier is not 0.5");
  o.require(truth_at(r.determinations, p, {0.5 - 1e-6, 0.5}, kMk) == Truth::Indeterminate,
            "determinate just before the frontier");
  o.require(is_determinate(truth_at(r.determinations, p, {0.5, 0.5}, kMk)), "indeterminate at the frontier");
  if (o.pass) o.detail = "frontier t = " + std::to_string(*t) + " (" + clock_time(*t) + ")";
  return o;
}

bool valid_counterexample(const FalsifierResult& f, const Determinations& d, const Frame& frame) {
  if (!f.counterexample) return false;
  const auto& c = *f.counterexample;
  return kMk.simultaneous(frame, c.p, c.q) && is_determinate(truth_at(d, c.proposition, c.p, kMk)) &&
         truth_at(d, c.proposition, c.q, kMk) == Truth::Indeterminate && c.value_at_p == truth_at(d, c.proposition, c.p, kMk);
}

Outcome falsifier_and_local_reality() {
  Outcome o;
  const Scenario s = builtin_scenario("fig1");
  const Realization r = realize(s, s.seed);
  const Frame rest{};
  const Frame moving{0.5, "moving"};
  o.require(valid_counterexample(present_reality_falsifier(r.determinations, s.observers, rest, kMk),
                                 r.determinations, rest),
            "no counterexample in the rest frame");
  o.require(valid_counterexample(present_reality_falsifier(r.determinations, s.observers, moving, kMk),
                                 r.determinations, moving),
            "no counterexample in the moving frame");

  // The whole scenario re-expressed in the moving frame's coordinates.
  const auto boosted = r.determinations.boosted(kMk, 0.5);
  std::vector<Observer> observers;
  for (const auto& ob : s.observers) {
    Observer b = ob;
    b.worldline.anchor = kMk.boost(ob.worldline.anchor, 0.5);
    b.worldline.velocity = kMk.compose_velocities(ob.worldline.velocity, -0.5);
    observers.push_back(b);
  }
  o.require(valid_counterexample(present_reality_falsifier(boosted, observers, rest, kMk), boosted, rest),
            "no counterexample in the boosted scenario");

  Rng rng(31337);
  std::size_t discrepancies = 0, checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto q = props::random_point(rng, 3);
    const Frame f{props::between(rng, -0.99, 0.99), "fuzz"};
    const std::vector<Proposition> ps{Proposition::atom("a", static_cast<int>(rng.next() % 2)),
                                      Proposition::parse("a=0 ^ a_2=1"), Proposition::parse("a_2=1 | a_3=0")};
    const std::array<Frame, 1> frames{f};
    const auto rep = check_local_reality(r.determinations, q, ps, frames, kMk);
    discrepancies += rep.discrepancies.size();
    checked += rep.checked;
  }
  o.require(discrepancies == 0, std::to_string(discrepancies) + " local-reality discrepancies");
  if (o.pass) o.detail = "counterexamples in 3 frames; " + std::to_string(checked) + " local-reality checks, 0 discrepancies";
  return o;
}

Outcome propensity_update() {
  Outcome o;
  const CorrelationModel m({"a", "b"}, {Probability::ratio(3, 8), Probability::ratio(1, 8),
                                        Probability::ratio(1, 8), Probability::ratio(3, 8)});
  o.require(validate_model(m).ok(), "model invalid");
  o.require(m.marginal("a", 0) == Probability::ratio(1, 2) && m.marginal("b", 0) == Probability::ratio(1, 2),
            "marginals not uniform");
  Determinations d;
  d.add({"a", 0, {0, 0}});
  d.declare("b");
  const auto inside = propensity_at(m, d, "b", 0, {0.6, 0.3}, kMk);
  const auto outside = propensity_at(m, d, "b", 0, {0.4, 0.5}, kMk);
  o.require(inside.propensity.is_exact() && inside.propensity == Probability::ratio(3, 4),
            "inside: " + inside.propensity.to_string());
  o.require(outside.propensity.is_exact() && outside.propensity == Probability::ratio(1, 2),
            "outside: " + outside.propensity.to_string());
  Rng rng(2026);
  int equal = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto s = m.sample(rng);
    equal += s.at("a") == s.at("b");
  }
  const double freq = static_cast<double>(equal) / n;
  o.require(freq >= 0.745 && freq <= 0.755, "frequency " + std::to_string(freq));
  if (o.pass) {
    o.detail = "inside " + inside.propensity.to_string() + ", outside " + outside.propensity.to_string() +
               ", p(a=b) sampled " + std::to_string(freq);
  }
  return o;
}

Outcome pr_box_checks() {
  Outcome o;
  const Box pr = pr_box();
  o.require(no_signaling_check(pr, 0).ok(), "signaling");
  o.require(chsh_value(pr).is_exact() && chsh_value(pr) == Probability(4), "CHSH " + chsh_value(pr).to_string());
  o.require(!local_bound(pr).is_local, "reported local");
  for (int y = 0; y < 2; ++y) {
    const ConditionedBox cb{pr, Side::A, 0, 0};
    o.require(condition_box(cb, true, y)[0] == Probability(1), "inside cone, y=" + std::to_string(y));
    o.require(condition_box(cb, false, y)[0] == Probability::ratio(1, 2), "outside cone, y=" + std::to_string(y));
  }
  if (o.pass) o.detail = "no-signaling exact, S = 4, non-local, p(b=0) = 1 inside / 1/2 outside";
  return o;
}

Outcome singlet_checks() {
  Outcome o;
  const Scenario s = builtin_scenario("singlet");
  const Realization r = realize(s, s.seed);
  const auto& setup = *r.quantum;
  const Basis x = Basis::x(), y = Basis::y();
  o.require(same_ray(state_at(setup, {0.4, 0.1}, kMk).state, product2(x, 0, x, 1)), "Alice's region");
  o.require(same_ray(state_at(setup, {0.4, 0.9}, kMk).state, product2(y, 1, y, 0)), "Bob's region");
  o.require(same_ray(state_at(setup, {1, 0.5}, kMk).state, product2(x, 0, y, 0)), "intersection");

  QuantumSetup free = setup;
  for (auto& m : free.measurements) m.outcome.reset();
  Rng rng(55);
  std::array<int, 4> counts{};
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto done = realize_outcomes(free, rng);
    ++counts[*done.measurements[0].outcome * 2 + *done.measurements[1].outcome];
  }
  std::string freqs;
  for (int c : counts) {
    const double f = static_cast<double>(c) / n;
    o.require(f >= 0.24 && f <= 0.26, "joint frequency " + std::to_string(f));
    freqs += " " + std::to_string(f);
  }
  if (o.pass) o.detail = "regional states match; joint frequencies" + freqs;
  return o;
}

Outcome w_state_checks() {
  Outcome o;
  const Scenario s = builtin_scenario("fig3");
  const Realization r = realize(s, s.seed);
  const auto& setup = *r.quantum;
  const Frame rest{}, moving{0.5, "moving"};
  const auto target = QuantumRegister::basis_state("001");
  o.require(same_ray(state_on_slice(setup, rest, 5, kMk).state, target), "rest ordering");
  o.require(same_ray(state_on_slice(setup, moving, 5, kMk).state, target), "moving ordering");
  const auto beta = state_on_slice(setup, rest, 0.1, kMk);
  const auto eta = state_on_slice(setup, moving, -0.1, kMk);
  o.require(beta.applied == std::vector<std::string>{"a"} && eta.applied == std::vector<std::string>{"b"},
            "slices apply the wrong projections");
  const double f = fidelity(beta.state, eta.state);
  o.require(std::abs(f - 0.25) <= 1e-12, "overlap squared " + std::to_string(f));

  // Bob's qubit, outside Alice's cone, for different choices of Alice's projector.
  const SpacetimePoint bob{0.1, 1};
  const auto reference = reduced_density(state_at(setup, bob, kMk).state, 1);
  double worst = 0.0;
  Rng rng(8);
  std::vector<Basis> choices{Basis::z(), Basis::x(), Basis::y()};
  for (int i = 0; i < 20; ++i) choices.push_back(props::random_basis(rng));
  for (const auto& basis : choices) {
    const auto [p0, p1] = born_probabilities(setup.initial, 0, basis);
    const double ps[2] = {p0, p1};
    Density2 mixed{};
    for (int k = 0; k < 2; ++k) {
      if (ps[k] < 1e-12) continue;
      QuantumSetup variant = setup;
      variant.measurements[0].basis = basis;
      variant.measurements[0].outcome = k;
      worst = std::max(worst, max_abs_difference(reference, reduced_density(state_at(variant, bob, kMk).state, 1)));
      const auto after = reduced_density(state_at(variant, {0.1, 0.05}, kMk).state, 1);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) mixed[a][b] += ps[k] * after[a][b];
    }
    worst = std::max(worst, max_abs_difference(reference, mixed));
  }
  o.require(worst <= 1e-12, "reduced density moved by " + std::to_string(worst));
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "both orderings end in |001>, |<beta|eta>|^2 = %.15f, max density change %.1e", f,
                  worst);
    o.detail = buf;
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::string summary;
  for (const auto& r : props::all_properties(20261016, 1000)) {
    o.require(r.cases >= 1000 && r.failures == 0, r.name + " failed: " + r.first_failure);
    summary += (summary.empty() ? "" : ", ") + r.name + " " + std::to_string(r.cases);
  }
  if (o.pass) o.detail = summary;
  return o;
}

std::string capture(const std::vector<std::string>& args, const std::string& in_text, int& code) {
  std::istringstream in(in_text);
  std::ostringstream out, err;
  code = cli::run_cli(args, in, out, err);
  return out.str();
}

Outcome reproducibility() {
  Outcome o;
  for (const auto& name : builtin_names()) {
    const std::string doc = print_scenario(builtin_scenario(name));
    int c1 = 0, c2 = 0;
    const auto r1 = capture({"run", "-", "--seed", "7", "--format", "structured"}, doc, c1);
    const auto r2 = capture({"run", "-", "--seed", "7", "--format", "structured"}, doc, c2);
    o.require(c1 == 0 && c2 == 0 && !r1.empty() && r1 == r2, name + ": reports differ");
    const auto d1 = capture({"diagram", "-", "--seed", "7"}, doc, c1);
    const auto d2 = capture({"diagram", "-", "--seed", "7"}, doc, c2);
    o.require(c1 == 0 && c2 == 0 && !d1.empty() && d1 == d2, name + ": SVG differs");
  }
  if (o.pass) o.detail = "reports and SVG byte-identical for " + std::to_string(builtin_names().size()) + " built-ins";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "fig1 geometry", 1.0, fig1_geometry},
      {2, "fig2 frontier", 1.0, fig2_frontier},
      {3, "present-reality falsifier and local-reality fuzz", 10.0, falsifier_and_local_reality},
      {4, "propensity update", 5.0, propensity_update},
      {5, "PR box", 1.0, pr_box_checks},
      {6, "singlet scenario", 10.0, singlet_checks},
      {7, "fig3 W-state", 1.0, w_state_checks},
      {8, "property suites", 30.0, property_suites},
      {9, "reproducibility", 10.0, reproducibility},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (runtime limit " + std::to_string(c.limit_seconds) + " s exceeded)";
    }
    failed += !o.pass;
    std::printf("[%s] criterion %d: %s (%.3f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
