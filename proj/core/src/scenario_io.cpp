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

#include <fmt/format.h>

#include <cmath>
#include <set>

namespace relind {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string Diagnostic::to_string() const {
  std::string where;
  if (kind == Kind::Syntax) {
    where = fmt::format("{}:{}: syntax error: ", line, column);
  } else {
    where = "semantic error";
    if (!path.empty()) where += " at " + path;
    if (!rule.empty()) where += " [" + rule + "]";
    where += ": ";
  }
  return where + message;
}

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::string out = "invalid scenario";
  for (const auto& d : diagnostics) out += "\n  " + d.to_string();
  return out;
}

}  // namespace

ScenarioError::ScenarioError(std::vector<Diagnostic> diagnostics)
    : Error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::string_view query_kind(const Query& q) {
  static constexpr std::string_view kNames[] = {
      "truth",  "propensity", "state",       "frontier",       "falsify-present-reality", "no-signaling",
      "chsh",   "local-bound", "box-propensity", "local-reality", "overlap"};
  static_assert(std::size(kNames) == std::variant_size_v<QueryBody>);
  return kNames[q.body.index()];
}

namespace {

// Thrown while reading one element; converted into a Diagnostic by the caller.
struct FieldError {
  std::string path;
  std::string identifier;
  std::string rule;
  std::string message;
};

[[noreturn]] void fail(const std::string& path, const std::string& rule, const std::string& message,
                       const std::string& identifier = {}) {
  throw FieldError{path, identifier, rule, message};
}

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& require(const json& j, std::string_view key, const std::string& path) {
  if (!j.is_object()) fail(path, "type", "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(child(path, key), "required", "missing required field: " + std::string(key));
  return *it;
}

const json* optional_field(const json& j, std::string_view key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

double read_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "type", "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "finite", "number must be finite");
  return v;
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "type", "expected a string");
  return j.get<std::string>();
}

std::string read_identifier(const json& j, const std::string& path) {
  auto s = read_string(j, path);
  bool ok = !s.empty() && !std::isdigit(static_cast<unsigned char>(s.front()));
  for (char ch : s) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
  if (!ok) fail(path, "identifier", "'" + s + "' is not an identifier ([A-Za-z_][A-Za-z0-9_]*)", s);
  return s;
}

int read_bit(const json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.get<long long>() != 0 && j.get<long long>() != 1)) {
    fail(path, "bit", "expected 0 or 1");
  }
  return j.get<int>();
}

Probability read_probability(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return Probability::parse(j.get<std::string>());
    if (j.is_number_integer()) return Probability(Rational(j.get<long long>()));
    if (j.is_number_unsigned()) return Probability(Rational(j.get<unsigned long long>()));
    if (j.is_number_float()) return Probability::inexact(read_number(j, path));
  } catch (const DomainError& e) {
    fail(path, "probability", e.what());
  }
  fail(path, "type", "expected a probability (number or \"p/q\" string)");
}

SpacetimePoint read_point(const json& j, const std::string& path) {
  const double t = read_number(require(j, "t", path), child(path, "t"));
  const double x = read_number(require(j, "x", path), child(path, "x"));
  std::string frame = "rest";
  if (const auto* f = optional_field(j, "frame")) frame = read_identifier(*f, child(path, "frame"));
  return SpacetimePoint(t, x, frame);
}

Complex read_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {read_number(j, path), 0.0};
  if (j.is_array() && j.size() == 2) return {read_number(j[0], child(path, 0)), read_number(j[1], child(path, 1))};
  fail(path, "type", "expected a real number or a [re, im] pair");
}

std::array<Complex, 2> read_qubit_vector(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "type", "expected two complex amplitudes");
  return {read_complex(j[0], child(path, 0)), read_complex(j[1], child(path, 1))};
}

Basis read_basis(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return Basis::named(j.get<std::string>());
    if (j.is_array() && j.size() == 2) {
      return Basis::custom(read_qubit_vector(j[0], child(path, 0)), read_qubit_vector(j[1], child(path, 1)));
    }
  } catch (const DomainError& e) {
    fail(path, "basis", e.what());
  }
  fail(path, "type", "expected \"x\", \"y\", \"z\" or a pair of orthonormal vectors");
}

Proposition read_proposition(const json& j, const std::string& path) {
  const auto text = read_string(j, path);
  try {
    return Proposition::parse(text);
  } catch (const PropositionParseError& e) {
    fail(path, "proposition", e.what());
  }
}

const json& require_array(const json& j, std::string_view key, const std::string& path) {
  const auto& arr = require(j, key, path);
  if (!arr.is_array()) fail(child(path, key), "type", "expected an array");
  return arr;
}

StateTarget read_state_target(const json& j, const std::string& path) {
  StateTarget target;
  if (const auto* at = optional_field(j, "at")) {
    target.at = read_point(*at, child(path, "at"));
    return target;
  }
  target.frame = read_identifier(require(j, "frame", path), child(path, "frame"));
  target.frame_time = read_number(require(j, "time", path), child(path, "time"));
  return target;
}

Side read_side(const json& j, const std::string& path) {
  const auto s = read_string(j, path);
  if (s == "A") return Side::A;
  if (s == "B") return Side::B;
  fail(path, "side", "side must be \"A\" or \"B\"");
}

Query read_query(const json& j, const std::string& path) {
  const auto kind = read_string(require(j, "kind", path), child(path, "kind"));
  std::string label;
  if (const auto* l = optional_field(j, "label")) label = read_string(*l, child(path, "label"));
  auto point = [&](std::string_view key) { return read_point(require(j, key, path), child(path, key)); };
  auto ident = [&](std::string_view key) { return read_identifier(require(j, key, path), child(path, key)); };
  auto prop = [&] { return read_proposition(require(j, "proposition", path), child(path, "proposition")); };

  if (kind == "truth") return {label, TruthQuery{prop(), point("at")}};
  if (kind == "propensity") {
    return {label, PropensityQuery{ident("variable"), read_bit(require(j, "value", path), child(path, "value")),
                                   point("at")}};
  }
  if (kind == "state") return {label, StateQuery{read_state_target(j, path)}};
  if (kind == "frontier") return {label, FrontierQuery{prop(), ident("observer")}};
  if (kind == "falsify-present-reality") {
    FalsifyQuery q;
    if (const auto* f = optional_field(j, "frame")) q.frame = read_identifier(*f, child(path, "frame"));
    return {label, q};
  }
  if (kind == "no-signaling") return {label, NoSignalingQuery{ident("box")}};
  if (kind == "chsh") return {label, ChshQuery{ident("box")}};
  if (kind == "local-bound") return {label, LocalBoundQuery{ident("box")}};
  if (kind == "box-propensity") {
    return {label, BoxPropensityQuery{ident("box"), read_side(require(j, "side", path), child(path, "side")),
                                      point("at")}};
  }
  if (kind == "local-reality") {
    LocalRealityQuery q{{}, point("at")};
    const auto& arr = require_array(j, "propositions", path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      q.propositions.push_back(read_proposition(arr[i], child(child(path, "propositions"), i)));
    }
    return {label, std::move(q)};
  }
  if (kind == "overlap") {
    return {label, OverlapQuery{read_state_target(require(j, "first", path), child(path, "first")),
                                read_state_target(require(j, "second", path), child(path, "second"))}};
  }
  fail(child(path, "kind"), "query-kind", "unknown query kind '" + kind + "'", kind);
}

BoxPort read_port(const json& j, const std::string& path) {
  BoxPort port;
  port.input = read_identifier(require(j, "input", path), child(path, "input"));
  port.output = read_identifier(require(j, "output", path), child(path, "output"));
  port.location = read_point(require(j, "at", path), child(path, "at"));
  if (const auto* p = optional_field(j, "input_p1")) port.input_p1 = read_probability(*p, child(path, "input_p1"));
  return port;
}

class Reader {
 public:
  explicit Reader(std::vector<Diagnostic>& diags) : diags_(diags) {}

  // Runs `fn`, turning a FieldError into a diagnostic.
  template <typename Fn>
  void attempt(Fn&& fn) {
    try {
      fn();
    } catch (const FieldError& e) {
      diags_.push_back({Diagnostic::Kind::Semantic, 0, 0, e.path, e.identifier, e.rule, e.message});
    } catch (const Error& e) {
      diags_.push_back({Diagnostic::Kind::Semantic, 0, 0, "", "", "value", e.what()});
    }
  }

  template <typename Fn>
  void each(const json& doc, std::string_view key, Fn&& fn) {
    const auto* arr = optional_field(doc, key);
    if (arr == nullptr) return;
    const std::string path = "/" + std::string(key);
    if (!arr->is_array()) {
      diags_.push_back({Diagnostic::Kind::Semantic, 0, 0, path, "", "type", "expected an array"});
      return;
    }
    for (std::size_t i = 0; i < arr->size(); ++i) attempt([&] { fn((*arr)[i], child(path, i)); });
  }

 private:
  std::vector<Diagnostic>& diags_;
};

void read_document(const json& doc, Scenario& s, std::vector<Diagnostic>& diags) {
  Reader r(diags);
  if (!doc.is_object()) {
    diags.push_back({Diagnostic::Kind::Semantic, 0, 0, "", "", "type", "scenario must be a JSON object"});
    return;
  }
  r.attempt([&] { s.c = read_number(require(doc, "c", ""), "/c"); });
  r.attempt([&] {
    const auto& schema = require(doc, "schema", "");
    if (!schema.is_number_integer() || schema.get<long long>() != kScenarioSchema) {
      fail("/schema", "schema-version", "unsupported schema version (expected " + std::to_string(kScenarioSchema) + ")");
    }
  });
  r.attempt([&] {
    if (const auto* n = optional_field(doc, "name")) s.name = read_string(*n, "/name");
    if (const auto* d = optional_field(doc, "description")) s.description = read_string(*d, "/description");
    if (const auto* seed = optional_field(doc, "seed")) {
      if (!seed->is_number_unsigned() && !(seed->is_number_integer() && seed->get<long long>() >= 0)) {
        fail("/seed", "type", "seed must be a non-negative integer");
      }
      s.seed = seed->get<std::uint64_t>();
    }
  });
  r.each(doc, "frames", [&](const json& j, const std::string& path) {
    FrameDecl f;
    f.frame.label = read_identifier(require(j, "label", path), child(path, "label"));
    f.frame.velocity = read_number(require(j, "velocity", path), child(path, "velocity"));
    if (const auto* th = optional_field(j, "through")) f.through = read_point(*th, child(path, "through"));
    s.frames.push_back(std::move(f));
  });
  r.each(doc, "observers", [&](const json& j, const std::string& path) {
    Observer o;
    o.label = read_identifier(require(j, "label", path), child(path, "label"));
    o.worldline.anchor = read_point(require(j, "anchor", path), child(path, "anchor"));
    o.worldline.velocity = read_number(require(j, "velocity", path), child(path, "velocity"));
    s.observers.push_back(std::move(o));
  });
  r.each(doc, "variables", [&](const json& j, const std::string& path) {
    VariableDecl v;
    v.name = read_identifier(require(j, "name", path), child(path, "name"));
    v.location = read_point(require(j, "at", path), child(path, "at"));
    if (const auto* p = optional_field(j, "p_one")) v.p_one = read_probability(*p, child(path, "p_one"));
    s.variables.push_back(std::move(v));
  });
  r.each(doc, "trngs", [&](const json& j, const std::string& path) {
    TrngDecl t;
    t.process.prefix = read_identifier(require(j, "prefix", path), child(path, "prefix"));
    if (const auto* labels = optional_field(j, "labels")) {
      if (!labels->is_array()) fail(child(path, "labels"), "type", "expected an array");
      for (std::size_t i = 0; i < labels->size(); ++i) {
        t.process.labels.push_back(read_identifier((*labels)[i], child(child(path, "labels"), i)));
      }
    }
    t.process.worldline.anchor = read_point(require(j, "anchor", path), child(path, "anchor"));
    t.process.worldline.velocity = read_number(require(j, "velocity", path), child(path, "velocity"));
    t.process.proper_period = read_number(require(j, "proper_period", path), child(path, "proper_period"));
    if (const auto* m = optional_field(j, "marginal")) t.process.marginal = read_probability(*m, child(path, "marginal"));
    t.horizon = read_number(require(j, "horizon", path), child(path, "horizon"));
    s.trngs.push_back(std::move(t));
  });
  r.each(doc, "correlations", [&](const json& j, const std::string& path) {
    CorrelationDecl c;
    const auto& vars = require_array(j, "variables", path);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      c.variables.push_back(read_identifier(vars[i], child(child(path, "variables"), i)));
    }
    const auto& joint = require_array(j, "joint", path);
    for (std::size_t i = 0; i < joint.size(); ++i) {
      c.joint.push_back(read_probability(joint[i], child(child(path, "joint"), i)));
    }
    s.correlations.push_back(std::move(c));
  });
  r.each(doc, "boxes", [&](const json& j, const std::string& path) {
    BoxDecl b;
    b.name = read_identifier(require(j, "name", path), child(path, "name"));
    const auto& table = require(j, "table", path);
    if (table.is_string()) {
      if (table.get<std::string>() != "pr") fail(child(path, "table"), "box-preset", "unknown box preset");
      b.preset = "pr";
      b.box = pr_box();
    } else {
      if (!table.is_array() || table.size() != 16) {
        fail(child(path, "table"), "box-table", "box table needs 16 entries in (x, y, a, b) order");
      }
      Box::Table t;
      for (std::size_t i = 0; i < 16; ++i) t[i] = read_probability(table[i], child(child(path, "table"), i));
      try {
        b.box = Box(std::move(t));
      } catch (const DomainError& e) {
        fail(child(path, "table"), "box-table", e.what(), b.name);
      }
    }
    b.alice = read_port(require(j, "alice", path), child(path, "alice"));
    b.bob = read_port(require(j, "bob", path), child(path, "bob"));
    s.boxes.push_back(std::move(b));
  });
  r.attempt([&] {
    const auto* q = optional_field(doc, "quantum");
    if (q == nullptr) return;
    QuantumDecl decl;
    const auto& init = require(*q, "initial", "/quantum");
    if (init.is_string()) {
      decl.initial_name = init.get<std::string>();
    } else if (init.is_array()) {
      for (std::size_t i = 0; i < init.size(); ++i) {
        decl.amplitudes.push_back(read_complex(init[i], child(std::string("/quantum/initial"), i)));
      }
    } else {
      fail("/quantum/initial", "type", "initial state must be a name or an amplitude list");
    }
    s.quantum = std::move(decl);
  });
  if (s.quantum) {
    if (const auto* q = optional_field(doc, "quantum")) {
      r.each(*q, "measurements", [&](const json& j, const std::string& sub) {
        const std::string path = "/quantum" + sub;
        MeasurementDecl m;
        m.variable = read_identifier(require(j, "variable", path), child(path, "variable"));
        const auto& qubit = require(j, "qubit", path);
        if (!qubit.is_number_integer()) fail(child(path, "qubit"), "type", "qubit index must be an integer");
        m.qubit = qubit.get<int>();
        m.basis = read_basis(require(j, "basis", path), child(path, "basis"));
        m.location = read_point(require(j, "at", path), child(path, "at"));
        s.quantum->measurements.push_back(std::move(m));
      });
    }
  }
  r.attempt([&] {
    const auto* o = optional_field(doc, "outcomes");
    if (o == nullptr) return;
    if (!o->is_object()) fail("/outcomes", "type", "expected an object of variable: bit");
    for (const auto& [var, bit] : o->items()) {
      s.outcomes.emplace(read_identifier(json(var), "/outcomes/" + var), read_bit(bit, "/outcomes/" + var));
    }
  });
  r.each(doc, "knowledge", [&](const json& j, const std::string& path) {
    KnowledgeMark k;
    k.observer = read_identifier(require(j, "observer", path), child(path, "observer"));
    k.variable = read_identifier(require(j, "variable", path), child(path, "variable"));
    k.known_from = read_point(require(j, "known_from", path), child(path, "known_from"));
    s.knowledge.push_back(std::move(k));
  });
  r.each(doc, "queries", [&](const json& j, const std::string& path) { s.queries.push_back(read_query(j, path)); });
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Scenario parse_scenario(std::string_view document) {
  std::vector<Diagnostic> diags;
  json doc;
  const bool blank = document.find_first_not_of(" \t\r\n") == std::string_view::npos;
  if (blank) {
    doc = json::object();
  } else {
    try {
      doc = json::parse(document);
    } catch (const json::parse_error& e) {
      // byte is 1-based and points one past the offending character.
      const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
      const auto [line, col] = line_column(document, byte);
      std::string msg = e.what();
      if (auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
      throw ScenarioError({{Diagnostic::Kind::Syntax, line, col, "", "", "json", msg}});
    }
  }
  Scenario s;
  read_document(doc, s, diags);
  if (!diags.empty()) throw ScenarioError(std::move(diags));
  auto semantic = validate_scenario(s);
  if (!semantic.empty()) throw ScenarioError(std::move(semantic));
  return s;
}

// --- printing ----------------------------------------------------------------

namespace {

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

ojson complex_json(const Complex& c) {
  if (c.imag() == 0.0) return c.real();
  return ojson::array({c.real(), c.imag()});
}

ojson basis_json(const Basis& b) {
  if (b.name == "x" || b.name == "y" || b.name == "z") {
    if (b == Basis::named(b.name)) return b.name;
  }
  ojson out = ojson::array();
  for (const auto& v : b.vectors) out.push_back(ojson::array({complex_json(v[0]), complex_json(v[1])}));
  return out;
}

ojson state_target_json(const StateTarget& t) {
  ojson j = ojson::object();
  if (t.at) {
    j["at"] = point_json(*t.at);
  } else {
    j["frame"] = t.frame;
    j["time"] = t.frame_time;
  }
  return j;
}

ojson port_json(const BoxPort& p) {
  ojson j;
  j["input"] = p.input;
  j["output"] = p.output;
  j["at"] = point_json(p.location);
  j["input_p1"] = probability_json(p.input_p1);
  return j;
}

struct QueryWriter {
  ojson& j;
  void operator()(const TruthQuery& q) const {
    j["proposition"] = q.proposition.to_string();
    j["at"] = point_json(q.at);
  }
  void operator()(const PropensityQuery& q) const {
    j["variable"] = q.variable;
    j["value"] = q.value;
    j["at"] = point_json(q.at);
  }
  void operator()(const StateQuery& q) const { j.update(state_target_json(q.target)); }
  void operator()(const FrontierQuery& q) const {
    j["proposition"] = q.proposition.to_string();
    j["observer"] = q.observer;
  }
  void operator()(const FalsifyQuery& q) const { j["frame"] = q.frame; }
  void operator()(const NoSignalingQuery& q) const { j["box"] = q.box; }
  void operator()(const ChshQuery& q) const { j["box"] = q.box; }
  void operator()(const LocalBoundQuery& q) const { j["box"] = q.box; }
  void operator()(const BoxPropensityQuery& q) const {
    j["box"] = q.box;
    j["side"] = q.side == Side::A ? "A" : "B";
    j["at"] = point_json(q.at);
  }
  void operator()(const LocalRealityQuery& q) const {
    ojson props = ojson::array();
    for (const auto& p : q.propositions) props.push_back(p.to_string());
    j["propositions"] = std::move(props);
    j["at"] = point_json(q.at);
  }
  void operator()(const OverlapQuery& q) const {
    j["first"] = state_target_json(q.first);
    j["second"] = state_target_json(q.second);
  }
};

}  // namespace

ojson to_json(const Scenario& s) {
  ojson j;
  j["schema"] = kScenarioSchema;
  j["name"] = s.name;
  if (!s.description.empty()) j["description"] = s.description;
  j["c"] = s.c;
  j["seed"] = s.seed;
  if (!s.frames.empty()) {
    auto& arr = j["frames"] = ojson::array();
    for (const auto& f : s.frames) {
      ojson e;
      e["label"] = f.frame.label;
      e["velocity"] = f.frame.velocity;
      if (f.through) e["through"] = point_json(*f.through);
      arr.push_back(std::move(e));
    }
  }
  if (!s.observers.empty()) {
    auto& arr = j["observers"] = ojson::array();
    for (const auto& o : s.observers) {
      ojson e;
      e["label"] = o.label;
      e["anchor"] = point_json(o.worldline.anchor);
      e["velocity"] = o.worldline.velocity;
      arr.push_back(std::move(e));
    }
  }
  if (!s.variables.empty()) {
    auto& arr = j["variables"] = ojson::array();
    for (const auto& v : s.variables) {
      ojson e;
      e["name"] = v.name;
      e["at"] = point_json(v.location);
      if (v.p_one) e["p_one"] = probability_json(*v.p_one);
      arr.push_back(std::move(e));
    }
  }
  if (!s.trngs.empty()) {
    auto& arr = j["trngs"] = ojson::array();
    for (const auto& t : s.trngs) {
      ojson e;
      e["prefix"] = t.process.prefix;
      if (!t.process.labels.empty()) e["labels"] = t.process.labels;
      e["anchor"] = point_json(t.process.worldline.anchor);
      e["velocity"] = t.process.worldline.velocity;
      e["proper_period"] = t.process.proper_period;
      e["marginal"] = probability_json(t.process.marginal);
      e["horizon"] = t.horizon;
      arr.push_back(std::move(e));
    }
  }
  if (!s.correlations.empty()) {
    auto& arr = j["correlations"] = ojson::array();
    for (const auto& c : s.correlations) {
      ojson e;
      e["variables"] = c.variables;
      auto& joint = e["joint"] = ojson::array();
      for (const auto& p : c.joint) joint.push_back(probability_json(p));
      arr.push_back(std::move(e));
    }
  }
  if (!s.boxes.empty()) {
    auto& arr = j["boxes"] = ojson::array();
    for (const auto& b : s.boxes) {
      ojson e;
      e["name"] = b.name;
      if (!b.preset.empty()) {
        e["table"] = b.preset;
      } else {
        auto& t = e["table"] = ojson::array();
        for (const auto& p : b.box.table()) t.push_back(probability_json(p));
      }
      e["alice"] = port_json(b.alice);
      e["bob"] = port_json(b.bob);
      arr.push_back(std::move(e));
    }
  }
  if (s.quantum) {
    ojson q;
    if (!s.quantum->initial_name.empty()) {
      q["initial"] = s.quantum->initial_name;
    } else {
      auto& amps = q["initial"] = ojson::array();
      for (const auto& a : s.quantum->amplitudes) amps.push_back(complex_json(a));
    }
    auto& arr = q["measurements"] = ojson::array();
    for (const auto& m : s.quantum->measurements) {
      ojson e;
      e["variable"] = m.variable;
      e["qubit"] = m.qubit;
      e["basis"] = basis_json(m.basis);
      e["at"] = point_json(m.location);
      arr.push_back(std::move(e));
    }
    j["quantum"] = std::move(q);
  }
  if (!s.outcomes.empty()) {
    auto& o = j["outcomes"] = ojson::object();
    for (const auto& [var, bit] : s.outcomes) o[var] = bit;
  }
  if (!s.knowledge.empty()) {
    auto& arr = j["knowledge"] = ojson::array();
    for (const auto& k : s.knowledge) {
      ojson e;
      e["observer"] = k.observer;
      e["variable"] = k.variable;
      e["known_from"] = point_json(k.known_from);
      arr.push_back(std::move(e));
    }
  }
  auto& queries = j["queries"] = ojson::array();
  for (const auto& q : s.queries) {
    ojson e;
    e["kind"] = std::string(query_kind(q));
    if (!q.label.empty()) e["label"] = q.label;
    std::visit(QueryWriter{e}, q.body);
    queries.push_back(std::move(e));
  }
  return j;
}

std::string print_scenario(const Scenario& s) { return to_json(s).dump(2) + "\n"; }

}  // namespace relind
