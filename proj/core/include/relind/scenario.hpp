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

#pragma once

#include "relind/boxes.hpp"
#include "relind/determinacy.hpp"
#include "relind/errors.hpp"
#include "relind/probability.hpp"
#include "relind/proposition.hpp"
#include "relind/quantum.hpp"
#include "relind/randomness.hpp"
#include "relind/spacetime.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace relind {

inline constexpr int kScenarioSchema = 1;

/// A declared inertial frame. `through` only affects where the diagram draws
/// its plane of simultaneity.
struct FrameDecl {
  Frame frame;
  std::optional<SpacetimePoint> through;

  bool operator==(const FrameDecl&) const = default;
};

/// A bare random bit determined at `location`, independent unless listed in a
/// correlation model.
struct VariableDecl {
  std::string name;
  SpacetimePoint location;
  std::optional<Probability> p_one;

  bool operator==(const VariableDecl&) const = default;
};

struct TrngDecl {
  TrngProcess process;
  double horizon = 0.0;

  bool operator==(const TrngDecl&) const = default;
};

struct CorrelationDecl {
  std::vector<std::string> variables;
  std::vector<Probability> joint;

  bool operator==(const CorrelationDecl&) const = default;
};

/// One party of a box: its input and output bits are both determined at
/// `location`. p(input = 1) = input_p1, so 0 or 1 make the input a constant.
struct BoxPort {
  std::string input;
  std::string output;
  SpacetimePoint location;
  Probability input_p1 = Probability::ratio(1, 2);

  bool operator==(const BoxPort&) const = default;
};

struct BoxDecl {
  std::string name;
  /// "pr" for the built-in PR box, empty for an explicit table.
  std::string preset;
  Box box = pr_box();
  BoxPort alice;
  BoxPort bob;

  bool operator==(const BoxDecl&) const = default;
};

struct MeasurementDecl {
  std::string variable;
  int qubit = 0;
  Basis basis = Basis::z();
  SpacetimePoint location;

  bool operator==(const MeasurementDecl&) const = default;
};

struct QuantumDecl {
  /// "singlet" / "w3", or empty when `amplitudes` is given.
  std::string initial_name;
  std::vector<Complex> amplitudes;
  std::vector<MeasurementDecl> measurements;

  bool operator==(const QuantumDecl&) const = default;
};

// --- queries -----------------------------------------------------------------

/// Either a space-time point (per-point assignment) or a time in a frame
/// (hyperplane assignment).
struct StateTarget {
  std::optional<SpacetimePoint> at;
  std::string frame;
  double frame_time = 0.0;

  bool operator==(const StateTarget&) const = default;
};

struct TruthQuery {
  Proposition proposition;
  SpacetimePoint at;

  bool operator==(const TruthQuery&) const = default;
};
struct PropensityQuery {
  std::string variable;
  int value = 0;
  SpacetimePoint at;

  bool operator==(const PropensityQuery&) const = default;
};
struct StateQuery {
  StateTarget target;

  bool operator==(const StateQuery&) const = default;
};
struct FrontierQuery {
  Proposition proposition;
  std::string observer;

  bool operator==(const FrontierQuery&) const = default;
};
struct FalsifyQuery {
  std::string frame = "rest";

  bool operator==(const FalsifyQuery&) const = default;
};
struct NoSignalingQuery {
  std::string box;

  bool operator==(const NoSignalingQuery&) const = default;
};
struct ChshQuery {
  std::string box;

  bool operator==(const ChshQuery&) const = default;
};
struct LocalBoundQuery {
  std::string box;

  bool operator==(const LocalBoundQuery&) const = default;
};
struct BoxPropensityQuery {
  std::string box;
  Side side = Side::A;
  SpacetimePoint at;

  bool operator==(const BoxPropensityQuery&) const = default;
};
struct LocalRealityQuery {
  std::vector<Proposition> propositions;
  SpacetimePoint at;

  bool operator==(const LocalRealityQuery&) const = default;
};
struct OverlapQuery {
  StateTarget first;
  StateTarget second;

  bool operator==(const OverlapQuery&) const = default;
};

using QueryBody = std::variant<TruthQuery, PropensityQuery, StateQuery, FrontierQuery, FalsifyQuery,
                               NoSignalingQuery, ChshQuery, LocalBoundQuery, BoxPropensityQuery,
                               LocalRealityQuery, OverlapQuery>;

struct Query {
  std::string label;
  QueryBody body;

  bool operator==(const Query&) const = default;
};

/// "truth", "propensity", "state", "frontier", "falsify-present-reality",
/// "no-signaling", "chsh", "local-bound", "box-propensity", "local-reality",
/// "overlap".
std::string_view query_kind(const Query& q);

struct Scenario {
  std::string name;
  std::string description;
  double c = 1.0;
  std::uint64_t seed = 0;
  std::vector<FrameDecl> frames;
  std::vector<Observer> observers;
  std::vector<VariableDecl> variables;
  std::vector<TrngDecl> trngs;
  std::vector<CorrelationDecl> correlations;
  std::vector<BoxDecl> boxes;
  std::optional<QuantumDecl> quantum;
  std::map<std::string, int> outcomes;  ///< forced values
  std::vector<KnowledgeMark> knowledge;
  std::vector<Query> queries;

  bool operator==(const Scenario&) const = default;
};

// --- parsing -----------------------------------------------------------------

struct Diagnostic {
  enum class Kind { Syntax, Semantic };
  Kind kind = Kind::Semantic;
  std::size_t line = 0;    ///< 1-based, syntax errors only
  std::size_t column = 0;  ///< 1-based, syntax errors only
  std::string path;        ///< JSON pointer of the offending value
  std::string identifier;
  std::string rule;
  std::string message;

  std::string to_string() const;
};

class ScenarioError : public Error {
 public:
  explicit ScenarioError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Parses and validates a UTF-8 JSON scenario. Throws ScenarioError listing
/// every problem found.
Scenario parse_scenario(std::string_view document);

/// Semantic validation of an in-memory scenario (parse_scenario runs this).
std::vector<Diagnostic> validate_scenario(const Scenario& s);

nlohmann::ordered_json to_json(const Scenario& s);
/// Canonical pretty-printed document; parse_scenario(print_scenario(s)) == s.
std::string print_scenario(const Scenario& s);

// --- built-ins ---------------------------------------------------------------

/// fig1, fig2, fig3, prbox, singlet, correlated.
std::vector<std::string> builtin_names();
/// Throws Error for an unknown name.
Scenario builtin_scenario(std::string_view name);

// --- evaluation --------------------------------------------------------------

/// Scenario with every variable realised.
struct Realization {
  Minkowski mk;
  std::uint64_t seed = 0;
  Determinations determinations;
  std::vector<CorrelationModel> models;
  std::map<std::string, std::size_t> model_of;
  std::map<std::string, Box> boxes;
  std::optional<QuantumSetup> quantum;
};

/// Converts a declared point to rest-frame coordinates, keeping its label.
SpacetimePoint to_rest(const Scenario& s, const SpacetimePoint& p);

/// Samples every unforced variable from its model with `seed`.
Realization realize(const Scenario& s, std::uint64_t seed, double tolerance = kGeomEpsilon);

struct RunOptions {
  std::optional<std::uint64_t> seed;  ///< overrides Scenario::seed
  double tolerance = kGeomEpsilon;
  bool timings = false;  ///< fill `elapsed`; off keeps reports byte-stable
};

using Report = nlohmann::ordered_json;

/// Evaluates every query in order. Query failures are recorded in their
/// entries; only an unrealisable scenario throws.
Report run(const Scenario& s, const RunOptions& options = {});

/// Wall-clock label for a coordinate time in minutes; t = 0 is 1:00 pm.
std::string clock_time(double minutes);

/// Human-readable rendering of a report; ANSI colour when `color` is set.
std::string render_text(const Report& r, bool color);

/// Deterministic SVG 1.1 space-time diagram of a scenario and its report.
std::string render_diagram(const Scenario& s, const Report& r);

}  // namespace relind
