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

#include <fmt/format.h>

#include <chrono>
#include <cmath>

namespace relind {

namespace {

using ojson = nlohmann::ordered_json;

ojson point_json(const SpacetimePoint& p) {
  ojson j;
  j["t"] = p.t;
  j["x"] = p.x;
  if (p.frame != "rest") j["frame"] = p.frame;
  return j;
}

ojson probability_json(const Probability& p) {
  if (p.is_exact()) return p.to_string();
  return p.to_double();
}

// -0.0 and round-off noise print as 0 in human-facing strings.
double tidy(double v) { return std::abs(v) < 5e-13 ? 0.0 : v; }

std::string ket_string(const QuantumRegister& r) {
  std::string out;
  const int n = r.qubits();
  for (std::size_t i = 0; i < r.amplitudes().size(); ++i) {
    const Complex a = r.amplitudes()[i];
    if (std::abs(a) < 1e-12) continue;
    std::string bits;
    for (int q = 0; q < n; ++q) bits += ((i >> (n - 1 - q)) & 1) ? '1' : '0';
    std::string coeff;
    if (std::abs(a.imag()) < 1e-12) {
      coeff = fmt::format("{:+.6f}", tidy(a.real()));
    } else if (std::abs(a.real()) < 1e-12) {
      coeff = fmt::format("{:+.6f}i", tidy(a.imag()));
    } else {
      coeff = fmt::format("+({:.6f}{:+.6f}i)", tidy(a.real()), tidy(a.imag()));
    }
    out += (out.empty() ? "" : " ") + coeff + "|" + bits + ">";
  }
  return out;
}

ojson register_json(const QuantumRegister& r) {
  ojson amps = ojson::array();
  for (const auto& a : r.amplitudes()) amps.push_back(ojson::array({a.real(), a.imag()}));
  ojson j;
  j["ket"] = ket_string(r);
  j["amplitudes"] = std::move(amps);
  return j;
}

std::string truth_name(Truth v) { return to_string(v); }

}  // namespace

std::string clock_time(double minutes) {
  // t = 0 is 1:00 pm.
  const double total_ms = std::round((13.0 * 60.0 + minutes) * 60000.0);
  const long long day_ms = 24LL * 3600 * 1000;
  long long ms = static_cast<long long>(total_ms) % day_ms;
  if (ms < 0) ms += day_ms;
  const long long h24 = ms / 3600000;
  const long long m = (ms / 60000) % 60;
  const long long s = (ms / 1000) % 60;
  const long long frac = ms % 1000;
  const long long h12 = h24 % 12 == 0 ? 12 : h24 % 12;
  std::string out = fmt::format("{}:{:02}:{:02}", h12, m, s);
  if (frac != 0) out += fmt::format(".{:03}", frac);
  return out + (h24 < 12 ? " am" : " pm");
}

namespace {

class Engine {
 public:
  Engine(const Scenario& s, const Realization& r) : s_(s), r_(r) {}

  // Fills `entry` with inputs, result and conditioning events.
  void evaluate(const Query& q, ojson& entry) {
    entry["inputs"] = ojson::object();
    entry["result"] = nullptr;
    entry["conditioning_events"] = ojson::array();
    std::visit([&](const auto& body) { eval(body, entry); }, q.body);
  }

 private:
  const Minkowski& mk() const { return r_.mk; }
  SpacetimePoint rest(const SpacetimePoint& p) const { return to_rest(s_, p); }

  Frame frame(const std::string& label) const {
    if (const auto* f = detail::find_frame(s_, label)) return f->frame;
    if (label == "rest") return Frame{0.0, "rest"};
    throw Error("unknown frame '" + label + "'");
  }

  ojson conditioning(const std::set<std::string>& vars, const SpacetimePoint& q) const {
    ojson out = ojson::array();
    for (const auto* e : causal_past(r_.determinations, q, mk())) {
      if (vars.contains(e->variable)) out.push_back(e->variable);
    }
    return out;
  }

  bool spacelike_joint(const std::set<std::string>& vars) const {
    std::vector<const DeterminationEvent*> events;
    for (const auto& v : vars) {
      if (const auto* e = r_.determinations.find(v)) events.push_back(e);
    }
    for (std::size_t i = 0; i < events.size(); ++i)
      for (std::size_t j = i + 1; j < events.size(); ++j)
        if (mk().causal_relation(events[i]->location, events[j]->location).kind == CausalKind::Spacelike) return true;
    return false;
  }

  void eval(const TruthQuery& q, ojson& entry) {
    entry["inputs"]["proposition"] = q.proposition.to_string();
    entry["inputs"]["at"] = point_json(q.at);
    const auto p = rest(q.at);
    const Truth v = truth_at(r_.determinations, q.proposition, p, mk());
    const auto vars = q.proposition.variables();
    entry["result"] = {{"value", truth_name(v)},
                       {"determinate", is_determinate(v)},
                       {"spacelike_joint", spacelike_joint(vars)}};
    entry["conditioning_events"] = conditioning(vars, p);
  }

  void eval(const PropensityQuery& q, ojson& entry) {
    entry["inputs"] = {{"variable", q.variable}, {"value", q.value}, {"at", point_json(q.at)}};
    const auto p = rest(q.at);
    if (auto it = r_.model_of.find(q.variable); it != r_.model_of.end()) {
      const auto a = propensity_at(r_.models[it->second], r_.determinations, q.variable, q.value, p, mk());
      entry["result"] = {{"propensity", probability_json(a.propensity)},
                         {"numeric", a.propensity.to_double()},
                         {"determinate", a.determinate}};
      entry["conditioning_events"] = a.conditioning;
      return;
    }
    // Quantum outcome: Born rule on the state attributed at the query point.
    const MeasurementEvent* m = nullptr;
    for (const auto& e : r_.quantum->measurements) {
      if (e.variable == q.variable) m = &e;
    }
    if (m == nullptr) throw DeclarationError(q.variable);
    const auto assignment = state_at(*r_.quantum, p, mk());
    double prob = 0.0;
    bool determinate = false;
    if (std::find(assignment.applied.begin(), assignment.applied.end(), m->variable) != assignment.applied.end()) {
      prob = *m->outcome == q.value ? 1.0 : 0.0;
      determinate = true;
    } else {
      const auto [p0, p1] = born_probabilities(assignment.state, m->qubit, m->basis);
      prob = q.value == 0 ? p0 : p1;
    }
    entry["result"] = {{"propensity", prob}, {"numeric", prob}, {"determinate", determinate}};
    entry["conditioning_events"] = assignment.applied;
  }

  StateAssignment assign(const StateTarget& t) const {
    if (t.at) return state_at(*r_.quantum, rest(*t.at), mk());
    return state_on_slice(*r_.quantum, frame(t.frame), t.frame_time, mk());
  }

  static ojson target_json(const StateTarget& t) {
    if (t.at) return {{"at", point_json(*t.at)}};
    return {{"frame", t.frame}, {"time", t.frame_time}};
  }

  void eval(const StateQuery& q, ojson& entry) {
    entry["inputs"] = target_json(q.target);
    const auto a = assign(q.target);
    entry["result"] = register_json(a.state);
    entry["conditioning_events"] = a.applied;
  }

  void eval(const FrontierQuery& q, ojson& entry) {
    entry["inputs"] = {{"proposition", q.proposition.to_string()}, {"observer", q.observer}};
    const auto* o = detail::find_observer(s_, q.observer);
    Worldline w = o->worldline;
    w.anchor = rest(w.anchor);
    const auto t = determinacy_frontier(r_.determinations, q.proposition, w, mk());
    if (t) {
      entry["result"] = {{"time", *t}, {"clock", clock_time(*t)}};
      entry["conditioning_events"] = conditioning(q.proposition.variables(), mk().point_at(w, *t));
    } else {
      entry["result"] = {{"time", nullptr}, {"clock", "never"}};
    }
  }

  void eval(const FalsifyQuery& q, ojson& entry) {
    entry["inputs"] = {{"frame", q.frame}};
    std::vector<Observer> observers = s_.observers;
    for (auto& o : observers) o.worldline.anchor = rest(o.worldline.anchor);
    const auto res = present_reality_falsifier(r_.determinations, observers, frame(q.frame), mk());
    if (!res.counterexample) {
      entry["result"] = {{"found", false}, {"reason", res.reason}};
      return;
    }
    const auto& c = *res.counterexample;
    entry["result"] = {{"found", true},
                       {"proposition", c.proposition.to_string()},
                       {"p", point_json(c.p)},
                       {"q", point_json(c.q)},
                       {"value_at_p", truth_name(c.value_at_p)},
                       {"value_at_q", truth_name(c.value_at_q)},
                       {"observer_at_q", c.observer_at_q}};
    entry["conditioning_events"] = ojson::array({c.proposition.as_atom().variable});
  }

  const Box& box(const std::string& name) const { return r_.boxes.at(name); }

  void eval(const NoSignalingQuery& q, ojson& entry) {
    entry["inputs"] = {{"box", q.box}};
    const auto rep = no_signaling_check(box(q.box));
    ojson violations = ojson::array();
    for (const auto& v : rep.violations) {
      violations.push_back({{"side", std::string(1, v.side)},
                            {"outcome", v.outcome},
                            {"input", v.input},
                            {"magnitude", probability_json(v.magnitude)}});
    }
    entry["result"] = {{"ok", rep.ok()}, {"violations", std::move(violations)}};
  }

  void eval(const ChshQuery& q, ojson& entry) {
    entry["inputs"] = {{"box", q.box}};
    const auto s = chsh_value(box(q.box));
    entry["result"] = {{"value", probability_json(s)}, {"numeric", s.to_double()}};
  }

  void eval(const LocalBoundQuery& q, ojson& entry) {
    entry["inputs"] = {{"box", q.box}};
    const auto res = local_bound(box(q.box));
    entry["result"] = {{"is_local", res.is_local}, {"best_s", probability_json(res.best_s)}};
  }

  void eval(const BoxPropensityQuery& q, ojson& entry) {
    entry["inputs"] = {{"box", q.box}, {"side", q.side == Side::A ? "A" : "B"}, {"at", point_json(q.at)}};
    const auto* decl = detail::find_box(s_, q.box);
    const BoxPort& local = q.side == Side::A ? decl->alice : decl->bob;
    const BoxPort& remote = q.side == Side::A ? decl->bob : decl->alice;
    const auto p = rest(q.at);
    const auto& d = r_.determinations;
    ConditionedBox cb{box(q.box), q.side, d.find(local.input)->value, d.find(local.output)->value};
    const bool in_cone = mk().in_future_cone(rest(local.location), p);
    const auto dist = condition_box(cb, in_cone, d.find(remote.input)->value);
    entry["result"] = {{"remote_output", remote.output},
                       {"remote_input", d.find(remote.input)->value},
                       {"in_cone", in_cone},
                       {"distribution", ojson::array({probability_json(dist[0]), probability_json(dist[1])})}};
    if (in_cone) entry["conditioning_events"] = ojson::array({local.input, local.output});
  }

  void eval(const LocalRealityQuery& q, ojson& entry) {
    ojson props = ojson::array();
    for (const auto& p : q.propositions) props.push_back(p.to_string());
    entry["inputs"] = {{"propositions", props}, {"at", point_json(q.at)}};
    std::vector<Frame> frames;
    for (const auto& f : s_.frames) frames.push_back(f.frame);
    if (frames.empty()) frames.push_back(Frame{0.0, "rest"});
    const auto rep = check_local_reality(r_.determinations, rest(q.at), q.propositions, frames, mk());
    ojson disc = ojson::array();
    for (const auto& d : rep.discrepancies) {
      disc.push_back({{"proposition", d.proposition},
                      {"frame", d.frame},
                      {"rest_value", truth_name(d.rest_value)},
                      {"frame_value", truth_name(d.frame_value)}});
    }
    entry["result"] = {{"holds", rep.holds()}, {"checked", rep.checked}, {"discrepancies", std::move(disc)}};
  }

  void eval(const OverlapQuery& q, ojson& entry) {
    entry["inputs"] = {{"first", target_json(q.first)}, {"second", target_json(q.second)}};
    const auto a = assign(q.first);
    const auto b = assign(q.second);
    const Complex ov = overlap(a.state, b.state);
    entry["result"] = {{"overlap", ojson::array({ov.real(), ov.imag()})},
                       {"overlap_squared", std::norm(ov)},
                       {"first", ket_string(a.state)},
                       {"second", ket_string(b.state)}};
  }

  const Scenario& s_;
  const Realization& r_;
};

}  // namespace

Report run(const Scenario& s, const RunOptions& options) {
  const std::uint64_t seed = options.seed.value_or(s.seed);
  const Realization r = realize(s, seed, options.tolerance);

  Report report;
  report["schema"] = kScenarioSchema;
  report["scenario"] = s.name;
  report["seed"] = seed;
  report["c"] = s.c;
  report["tolerance"] = options.tolerance;
  ojson events = ojson::array();
  for (const auto& e : r.determinations.events()) {
    events.push_back({{"variable", e.variable}, {"value", e.value}, {"at", point_json(e.location)}});
  }
  report["determinations"] = std::move(events);

  Engine engine(s, r);
  ojson queries = ojson::array();
  for (std::size_t i = 0; i < s.queries.size(); ++i) {
    const auto& q = s.queries[i];
    ojson entry;
    entry["index"] = i;
    entry["kind"] = std::string(query_kind(q));
    entry["label"] = q.label;
    const auto start = std::chrono::steady_clock::now();
    try {
      engine.evaluate(q, entry);
    } catch (const Error& e) {
      entry["result"] = nullptr;
      entry["error"] = e.what();
    }
    if (options.timings) {
      const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
      entry["elapsed"] = static_cast<double>(us.count()) / 1000.0;
    } else {
      entry["elapsed"] = nullptr;
    }
    queries.push_back(std::move(entry));
  }
  report["queries"] = std::move(queries);
  return report;
}

namespace {

std::string paint(const std::string& text, const char* code, bool color) {
  if (!color) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string format_point(const ojson& p) {
  std::string s = fmt::format("(t={}, x={})", p.at("t").get<double>(), p.at("x").get<double>());
  if (p.contains("frame")) s += " in " + p.at("frame").get<std::string>();
  return s;
}

std::string format_value(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fmt::format("{:.12g}", v.get<double>());
  return v.dump();
}

std::string describe_result(const std::string& kind, const ojson& res, bool color) {
  if (kind == "truth") {
    const auto v = res.at("value").get<std::string>();
    const char* code = v == "true" ? "32" : v == "false" ? "31" : "33";
    return paint(v, code, color);
  }
  if (kind == "propensity") return format_value(res.at("propensity"));
  if (kind == "state") return res.at("ket").get<std::string>();
  if (kind == "frontier") {
    if (res.at("time").is_null()) return "never determinate";
    return fmt::format("t = {} ({})", res.at("time").get<double>(), res.at("clock").get<std::string>());
  }
  if (kind == "falsify-present-reality") {
    if (!res.at("found").get<bool>()) return res.at("reason").get<std::string>();
    return fmt::format("{} is {} at {} but {} at {} ({})", res.at("proposition").get<std::string>(),
                       res.at("value_at_p").get<std::string>(), format_point(res.at("p")),
                       paint(res.at("value_at_q").get<std::string>(), "33", color), format_point(res.at("q")),
                       res.at("observer_at_q").get<std::string>());
  }
  if (kind == "no-signaling") {
    return res.at("ok").get<bool>() ? paint("no-signaling", "32", color)
                                    : paint(fmt::format("{} violations", res.at("violations").size()), "31", color);
  }
  if (kind == "chsh") return "S = " + format_value(res.at("value"));
  if (kind == "local-bound") {
    return fmt::format("{}, best S = {}", res.at("is_local").get<bool>() ? "local" : "non-local",
                       format_value(res.at("best_s")));
  }
  if (kind == "box-propensity") {
    const auto& d = res.at("distribution");
    return fmt::format("p({}=0) = {}, p({}=1) = {} ({})", res.at("remote_output").get<std::string>(),
                       format_value(d[0]), res.at("remote_output").get<std::string>(), format_value(d[1]),
                       res.at("in_cone").get<bool>() ? "inside cone" : "outside cone");
  }
  if (kind == "local-reality") {
    return res.at("holds").get<bool>() ? fmt::format("holds ({} checks)", res.at("checked").get<std::size_t>())
                                       : fmt::format("{} discrepancies", res.at("discrepancies").size());
  }
  if (kind == "overlap") return fmt::format("|<.|.>|^2 = {:.12g}", res.at("overlap_squared").get<double>());
  return res.dump();
}

std::string describe_inputs(const ojson& in) {
  std::string out;
  for (const auto& [key, value] : in.items()) {
    if (!out.empty()) out += ", ";
    if (value.is_object() && value.contains("t")) {
      out += key + " " + format_point(value);
    } else {
      out += key + " " + format_value(value);
    }
  }
  return out;
}

}  // namespace

std::string render_text(const Report& r, bool color) {
  std::string out = fmt::format("scenario {} (seed {}, c = {})\n", r.at("scenario").get<std::string>(),
                                r.at("seed").get<std::uint64_t>(), r.at("c").get<double>());
  out += "determinations:\n";
  for (const auto& e : r.at("determinations")) {
    out += fmt::format("  {} = {} at {}\n", e.at("variable").get<std::string>(), e.at("value").get<int>(),
                       format_point(e.at("at")));
  }
  out += "queries:\n";
  for (const auto& q : r.at("queries")) {
    const auto kind = q.at("kind").get<std::string>();
    out += fmt::format("  [{}] {}", q.at("index").get<std::size_t>(), kind);
    if (!q.at("label").get<std::string>().empty()) out += " \"" + q.at("label").get<std::string>() + "\"";
    out += "\n      " + describe_inputs(q.at("inputs")) + "\n      -> ";
    if (q.contains("error")) {
      out += paint("error: " + q.at("error").get<std::string>(), "31", color);
    } else {
      out += describe_result(kind, q.at("result"), color);
    }
    out += "\n";
  }
  return out;
}

}  // namespace relind
