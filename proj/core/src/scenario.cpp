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

#include "internal.hpp"

#include <cmath>
#include <set>

namespace relind {

namespace detail {

const FrameDecl* find_frame(const Scenario& s, const std::string& label) {
  for (const auto& f : s.frames) {
    if (f.frame.label == label) return &f;
  }
  return nullptr;
}

const Observer* find_observer(const Scenario& s, const std::string& label) {
  for (const auto& o : s.observers) {
    if (o.label == label) return &o;
  }
  return nullptr;
}

const BoxDecl* find_box(const Scenario& s, const std::string& name) {
  for (const auto& b : s.boxes) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

std::vector<VariableSource> variable_sources(const Scenario& s, const Minkowski& mk) {
  using Kind = VariableSource::Kind;
  std::vector<VariableSource> out;
  for (std::size_t i = 0; i < s.variables.size(); ++i) {
    const auto& v = s.variables[i];
    out.push_back({v.name, Kind::Explicit, to_rest(s, v.location), v.p_one, "/variables/" + std::to_string(i)});
  }
  for (std::size_t i = 0; i < s.trngs.size(); ++i) {
    TrngProcess process = s.trngs[i].process;
    process.worldline.anchor = to_rest(s, process.worldline.anchor);
    for (auto& tick : tick_events(process, s.trngs[i].horizon, mk)) {
      out.push_back({tick.variable, Kind::Trng, tick.location, process.marginal, "/trngs/" + std::to_string(i)});
    }
  }
  for (std::size_t i = 0; i < s.boxes.size(); ++i) {
    const auto& b = s.boxes[i];
    const std::string origin = "/boxes/" + std::to_string(i);
    const auto a_at = to_rest(s, b.alice.location);
    const auto b_at = to_rest(s, b.bob.location);
    out.push_back({b.alice.input, Kind::BoxInput, a_at, b.alice.input_p1, origin});
    out.push_back({b.bob.input, Kind::BoxInput, b_at, b.bob.input_p1, origin});
    out.push_back({b.alice.output, Kind::BoxOutput, a_at, std::nullopt, origin});
    out.push_back({b.bob.output, Kind::BoxOutput, b_at, std::nullopt, origin});
  }
  if (s.quantum) {
    for (std::size_t i = 0; i < s.quantum->measurements.size(); ++i) {
      const auto& m = s.quantum->measurements[i];
      out.push_back({m.variable, Kind::Measurement, to_rest(s, m.location), std::nullopt,
                     "/quantum/measurements/" + std::to_string(i)});
    }
  }
  return out;
}

}  // namespace detail

SpacetimePoint to_rest(const Scenario& s, const SpacetimePoint& p) {
  if (p.frame == "rest") return p;
  const auto* f = detail::find_frame(s, p.frame);
  if (f == nullptr) throw Error("unknown frame '" + p.frame + "'");
  const Minkowski mk(s.c);
  SpacetimePoint rest = mk.boost(p, -f->frame.velocity, p.frame);
  return rest;
}

namespace {

class Validator {
 public:
  explicit Validator(const Scenario& s) : s_(s) {}

  std::vector<Diagnostic> run() {
    if (!std::isfinite(s_.c) || s_.c <= 0.0) {
      error("/c", "positive-c", "signal speed c must be positive", "c");
      return diags_;
    }
    mk_.emplace(s_.c);
    check_frames();
    check_observers();
    if (!diags_.empty()) return diags_;
    check_sources();
    check_models();
    check_quantum();
    check_outcomes();
    check_knowledge();
    check_queries();
    return diags_;
  }

 private:
  void error(std::string path, std::string rule, std::string message, std::string identifier = {}) {
    diags_.push_back({Diagnostic::Kind::Semantic, 0, 0, std::move(path), std::move(identifier), std::move(rule),
                      std::move(message)});
  }

  bool velocity_ok(double v) const { return std::isfinite(v) && std::abs(v) < s_.c; }

  void check_point(const std::string& path, const SpacetimePoint& p) {
    if (p.frame != "rest" && detail::find_frame(s_, p.frame) == nullptr) {
      error(path + "/frame", "frame-reference", "unknown frame '" + p.frame + "'", p.frame);
    }
  }

  void check_frames() {
    std::set<std::string> seen{};
    for (std::size_t i = 0; i < s_.frames.size(); ++i) {
      const auto& f = s_.frames[i];
      const std::string path = "/frames/" + std::to_string(i);
      if (!seen.insert(f.frame.label).second) {
        error(path + "/label", "unique-frame", "frame '" + f.frame.label + "' declared twice", f.frame.label);
      }
      if (!velocity_ok(f.frame.velocity)) {
        error(path + "/velocity", "subluminal", "frame velocity must satisfy |v| < c", f.frame.label);
      }
      if (f.frame.label == "rest" && f.frame.velocity != 0.0) {
        error(path + "/velocity", "rest-frame", "the 'rest' frame must have velocity 0", f.frame.label);
      }
    }
    for (std::size_t i = 0; i < s_.frames.size(); ++i) {
      if (s_.frames[i].through) check_point("/frames/" + std::to_string(i) + "/through", *s_.frames[i].through);
    }
  }

  void check_observers() {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < s_.observers.size(); ++i) {
      const auto& o = s_.observers[i];
      const std::string path = "/observers/" + std::to_string(i);
      if (!seen.insert(o.label).second) {
        error(path + "/label", "unique-observer", "observer '" + o.label + "' declared twice", o.label);
      }
      if (!velocity_ok(o.worldline.velocity)) {
        error(path + "/velocity", "timelike-worldline", "observer velocity must satisfy |v| < c", o.label);
      }
      check_point(path + "/anchor", o.worldline.anchor);
    }
    for (std::size_t i = 0; i < s_.variables.size(); ++i) {
      check_point("/variables/" + std::to_string(i) + "/at", s_.variables[i].location);
    }
    for (std::size_t i = 0; i < s_.trngs.size(); ++i) {
      const auto& t = s_.trngs[i];
      const std::string path = "/trngs/" + std::to_string(i);
      check_point(path + "/anchor", t.process.worldline.anchor);
      if (!velocity_ok(t.process.worldline.velocity)) {
        error(path + "/velocity", "timelike-worldline", "TRNG velocity must satisfy |v| < c", t.process.prefix);
      }
      if (!(t.process.proper_period > 0.0)) {
        error(path + "/proper_period", "positive-period", "proper period must be positive", t.process.prefix);
      }
      if (t.process.marginal < Probability(0) || t.process.marginal > Probability(1)) {
        error(path + "/marginal", "probability-range", "marginal must lie in [0, 1]", t.process.prefix);
      }
    }
    for (std::size_t i = 0; i < s_.boxes.size(); ++i) {
      const std::string path = "/boxes/" + std::to_string(i);
      check_point(path + "/alice/at", s_.boxes[i].alice.location);
      check_point(path + "/bob/at", s_.boxes[i].bob.location);
      for (const auto* port : {&s_.boxes[i].alice, &s_.boxes[i].bob}) {
        if (port->input_p1 < Probability(0) || port->input_p1 > Probability(1)) {
          error(path, "probability-range", "input_p1 must lie in [0, 1]", port->input);
        }
      }
    }
    if (s_.quantum) {
      for (std::size_t i = 0; i < s_.quantum->measurements.size(); ++i) {
        check_point("/quantum/measurements/" + std::to_string(i) + "/at", s_.quantum->measurements[i].location);
      }
    }
    for (const auto& v : s_.variables) {
      if (v.p_one && (*v.p_one < Probability(0) || *v.p_one > Probability(1))) {
        error("/variables", "probability-range", "p_one must lie in [0, 1]", v.name);
      }
    }
  }

  void check_sources() {
    try {
      sources_ = detail::variable_sources(s_, *mk_);
    } catch (const Error& e) {
      error("", "variable-sources", e.what());
      return;
    }
    for (const auto& src : sources_) {
      if (!kinds_.emplace(src.name, src.kind).second) {
        error(src.origin, "single-determination", "duplicate variable determination: '" + src.name + "'",
              src.name);
      }
    }
    std::set<std::string> boxes;
    for (std::size_t i = 0; i < s_.boxes.size(); ++i) {
      if (!boxes.insert(s_.boxes[i].name).second) {
        error("/boxes/" + std::to_string(i) + "/name", "unique-box", "box '" + s_.boxes[i].name + "' declared twice",
              s_.boxes[i].name);
      }
    }
  }

  void check_models() {
    using Kind = detail::VariableSource::Kind;
    std::set<std::string> modeled;
    for (std::size_t i = 0; i < s_.correlations.size(); ++i) {
      const auto& c = s_.correlations[i];
      const std::string path = "/correlations/" + std::to_string(i);
      bool refs_ok = true;
      for (const auto& v : c.variables) {
        auto it = kinds_.find(v);
        if (it == kinds_.end()) {
          error(path + "/variables", "variable-reference", "undeclared variable '" + v + "'", v);
          refs_ok = false;
        } else if (it->second != Kind::Explicit && it->second != Kind::Trng) {
          error(path + "/variables", "correlation-variable",
                "'" + v + "' belongs to a box or a quantum measurement and cannot join a correlation model", v);
          refs_ok = false;
        } else if (!modeled.insert(v).second) {
          error(path + "/variables", "single-model", "'" + v + "' appears in more than one correlation model", v);
          refs_ok = false;
        }
      }
      if (!refs_ok) continue;
      try {
        CorrelationModel m(c.variables, c.joint);
        for (const auto& src : sources_) {
          if (m.contains(src.name) && src.p_one) m.declare_marginal(src.name, *src.p_one);
        }
        for (const auto& v : validate_model(m).violations) error(path, v.rule, v.detail);
      } catch (const Error& e) {
        error(path + "/joint", "table-shape", e.what());
      }
    }
  }

  void check_quantum() {
    if (!s_.quantum) return;
    const auto& q = *s_.quantum;
    int n = 0;
    try {
      if (!q.initial_name.empty()) {
        auto states = standard_states();
        auto it = states.find(q.initial_name);
        if (it == states.end()) {
          error("/quantum/initial", "state-name", "unknown initial state '" + q.initial_name + "'", q.initial_name);
          return;
        }
        n = it->second.qubits();
      } else {
        n = QuantumRegister::from_amplitudes(q.amplitudes).qubits();
      }
    } catch (const Error& e) {
      error("/quantum/initial", "state-vector", e.what());
      return;
    }
    for (std::size_t i = 0; i < q.measurements.size(); ++i) {
      const auto& m = q.measurements[i];
      if (m.qubit < 0 || m.qubit >= n) {
        error("/quantum/measurements/" + std::to_string(i) + "/qubit", "qubit-range",
              "qubit " + std::to_string(m.qubit) + " out of range for " + std::to_string(n) + " qubits", m.variable);
      }
    }
  }

  void check_outcomes() {
    for (const auto& [var, bit] : s_.outcomes) {
      if (!kinds_.contains(var)) error("/outcomes/" + var, "variable-reference", "undeclared variable '" + var + "'", var);
      if (bit != 0 && bit != 1) error("/outcomes/" + var, "bit", "forced outcome must be 0 or 1", var);
    }
  }

  void check_knowledge() {
    for (std::size_t i = 0; i < s_.knowledge.size(); ++i) {
      const auto& k = s_.knowledge[i];
      const std::string path = "/knowledge/" + std::to_string(i);
      check_point(path + "/known_from", k.known_from);
      if (detail::find_observer(s_, k.observer) == nullptr) {
        error(path + "/observer", "observer-reference", "unknown observer '" + k.observer + "'", k.observer);
      }
      const detail::VariableSource* src = nullptr;
      for (const auto& s : sources_) {
        if (s.name == k.variable) src = &s;
      }
      if (src == nullptr) {
        error(path + "/variable", "variable-reference", "undeclared variable '" + k.variable + "'", k.variable);
        continue;
      }
      if (detail::find_frame(s_, k.known_from.frame) == nullptr && k.known_from.frame != "rest") continue;
      if (!mk_->in_future_cone(src->location, to_rest(s_, k.known_from))) {
        error(path + "/known_from", "known-implies-determinate",
              k.observer + " cannot know '" + k.variable + "' outside its determination cone", k.variable);
      }
    }
  }

  void check_proposition(const std::string& path, const Proposition& p) {
    for (const auto& v : p.variables()) {
      if (!kinds_.contains(v)) error(path, "variable-reference", "undeclared variable '" + v + "'", v);
    }
  }

  void check_state_target(const std::string& path, const StateTarget& t) {
    if (!s_.quantum) error(path, "quantum-required", "state queries need a quantum section");
    if (t.at) {
      check_point(path + "/at", *t.at);
    } else if (t.frame != "rest" && detail::find_frame(s_, t.frame) == nullptr) {
      error(path + "/frame", "frame-reference", "unknown frame '" + t.frame + "'", t.frame);
    }
  }

  void check_box_ref(const std::string& path, const std::string& name) {
    if (detail::find_box(s_, name) == nullptr) error(path + "/box", "box-reference", "unknown box '" + name + "'", name);
  }

  void check_queries() {
    for (std::size_t i = 0; i < s_.queries.size(); ++i) {
      const std::string path = "/queries/" + std::to_string(i);
      std::visit(
          [&](const auto& q) {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, TruthQuery>) {
              check_proposition(path + "/proposition", q.proposition);
              check_point(path + "/at", q.at);
            } else if constexpr (std::is_same_v<T, PropensityQuery>) {
              if (!kinds_.contains(q.variable)) {
                error(path + "/variable", "variable-reference", "undeclared variable '" + q.variable + "'", q.variable);
              }
              check_point(path + "/at", q.at);
            } else if constexpr (std::is_same_v<T, StateQuery>) {
              check_state_target(path, q.target);
            } else if constexpr (std::is_same_v<T, FrontierQuery>) {
              check_proposition(path + "/proposition", q.proposition);
              if (detail::find_observer(s_, q.observer) == nullptr) {
                error(path + "/observer", "observer-reference", "unknown observer '" + q.observer + "'", q.observer);
              }
            } else if constexpr (std::is_same_v<T, FalsifyQuery>) {
              if (q.frame != "rest" && detail::find_frame(s_, q.frame) == nullptr) {
                error(path + "/frame", "frame-reference", "unknown frame '" + q.frame + "'", q.frame);
              }
            } else if constexpr (std::is_same_v<T, BoxPropensityQuery>) {
              check_box_ref(path, q.box);
              check_point(path + "/at", q.at);
            } else if constexpr (std::is_same_v<T, LocalRealityQuery>) {
              for (const auto& p : q.propositions) check_proposition(path + "/propositions", p);
              check_point(path + "/at", q.at);
            } else if constexpr (std::is_same_v<T, OverlapQuery>) {
              check_state_target(path + "/first", q.first);
              check_state_target(path + "/second", q.second);
            } else {
              check_box_ref(path, q.box);
            }
          },
          s_.queries[i].body);
    }
  }

  const Scenario& s_;
  std::optional<Minkowski> mk_;
  std::vector<Diagnostic> diags_;
  std::vector<detail::VariableSource> sources_;
  std::map<std::string, detail::VariableSource::Kind> kinds_;
};

}  // namespace

std::vector<Diagnostic> validate_scenario(const Scenario& s) { return Validator(s).run(); }

Realization realize(const Scenario& s, std::uint64_t seed, double tolerance) {
  using Kind = detail::VariableSource::Kind;
  if (auto diags = validate_scenario(s); !diags.empty()) throw ScenarioError(std::move(diags));
  Realization r{Minkowski(s.c, tolerance), seed, {}, {}, {}, {}, std::nullopt};
  const auto sources = detail::variable_sources(s, r.mk);

  for (const auto& c : s.correlations) {
    CorrelationModel m(c.variables, c.joint);
    for (const auto& src : sources) {
      if (m.contains(src.name) && src.p_one) m.declare_marginal(src.name, *src.p_one);
    }
    r.models.push_back(std::move(m));
  }
  for (const auto& b : s.boxes) {
    r.models.push_back(b.box.with_inputs({b.alice.input, b.bob.input, b.alice.output, b.bob.output},
                                         b.alice.input_p1, b.bob.input_p1));
    r.boxes.emplace(b.name, b.box);
  }
  for (std::size_t k = 0; k < r.models.size(); ++k) {
    for (const auto& v : r.models[k].variables()) r.model_of.emplace(v, k);
  }
  for (const auto& src : sources) {
    if (src.kind == Kind::Measurement || r.model_of.contains(src.name)) continue;
    r.model_of.emplace(src.name, r.models.size());
    r.models.push_back(CorrelationModel::independent_bit(src.name, src.p_one.value_or(Probability::ratio(1, 2))));
  }

  const Rng root(seed);
  std::map<std::string, int> values;
  for (std::size_t k = 0; k < r.models.size(); ++k) {
    Rng rng = root.split(k + 1);
    values.merge(r.models[k].sample(rng, s.outcomes));
  }
  if (s.quantum) {
    QuantumSetup setup{s.quantum->initial_name.empty() ? QuantumRegister::from_amplitudes(s.quantum->amplitudes)
                                                       : standard_states().at(s.quantum->initial_name),
                       {}};
    for (const auto& m : s.quantum->measurements) {
      std::optional<int> forced;
      if (auto it = s.outcomes.find(m.variable); it != s.outcomes.end()) forced = it->second;
      setup.measurements.push_back({m.variable, m.qubit, m.basis, to_rest(s, m.location), forced});
    }
    Rng rng = root.split(0);
    r.quantum = realize_outcomes(setup, rng);
    for (const auto& m : r.quantum->measurements) values[m.variable] = *m.outcome;
  }
  for (const auto& src : sources) r.determinations.add({src.name, values.at(src.name), src.location});
  return r;
}

}  // namespace relind
