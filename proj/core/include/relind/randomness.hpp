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

#include "relind/determinacy.hpp"
#include "relind/probability.hpp"
#include "relind/spacetime.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace relind {

/// Deterministic 64-bit generator with reproducible sub-streams.
///
/// Each `split(k)` derives an independent engine from (seed, k) through a
/// SplitMix64 finaliser, so adding a consumer never perturbs the draws of
/// another one.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  Rng split(std::uint64_t stream) const;
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// A true random number generator riding a worldline. It emits one bit per
/// `proper_period` of its own proper time, starting one period after the
/// worldline anchor.
struct TrngProcess {
  std::string prefix;
  /// Optional names for the first ticks; later ticks are `<prefix>_<k>`.
  std::vector<std::string> labels;
  Worldline worldline;
  double proper_period = 1.0;
  Probability marginal = Probability::ratio(1, 2);  ///< p(bit = 1)

  bool operator==(const TrngProcess&) const = default;
};

struct TrngTick {
  std::string variable;
  int index = 0;  ///< 1-based tick number
  SpacetimePoint location;
};

std::string tick_variable(const TrngProcess& p, int index);

/// Ticks with coordinate time <= horizon. The coordinate period is
/// gamma(v) * proper_period (moving clocks run slow).
std::vector<TrngTick> tick_events(const TrngProcess& p, double horizon, const Minkowski& mk);

/// Joint propensity table over binary variables. Entry i assigns bit
/// (i >> (n - 1 - k)) & 1 to variables[k]: the first variable is the most
/// significant bit.
class CorrelationModel {
 public:
  CorrelationModel() = default;
  /// Throws Error on duplicate variables, more than 16 variables, or a table
  /// whose size is not 2^n. Value ranges are checked by validate_model.
  CorrelationModel(std::vector<std::string> variables, std::vector<Probability> joint);

  static CorrelationModel independent_bit(std::string variable, Probability p_one);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Probability>& joint() const { return joint_; }
  bool contains(const std::string& variable) const;
  std::size_t position(const std::string& variable) const;

  /// p(variable = 1) declared alongside the table (e.g. by a TRNG).
  void declare_marginal(const std::string& variable, Probability p_one);
  const std::map<std::string, Probability>& declared_marginals() const { return declared_marginals_; }

  /// Probability that every (variable, bit) in `assignment` holds.
  Probability probability(const std::map<std::string, int>& assignment) const;
  Probability marginal(const std::string& variable, int value) const;
  /// Throws ModelInconsistency when p(given) = 0.
  Probability conditional(const std::string& variable, int value,
                          const std::map<std::string, int>& given) const;

  /// Draws a full assignment conditioned on `forced`.
  std::map<std::string, int> sample(Rng& rng, const std::map<std::string, int>& forced = {}) const;

 private:
  std::vector<std::string> variables_;
  std::vector<Probability> joint_;
  std::map<std::string, Probability> declared_marginals_;
};

struct Violation {
  std::string rule;
  std::string detail;
  double magnitude = 0.0;
};

struct ModelReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Range, normalisation and declared-marginal checks, each within `tol`
/// (exact comparison for exact tables).
ModelReport validate_model(const CorrelationModel& m, double tol = 1e-12);

struct PropensityAssignment {
  std::string variable;
  int value = 0;
  SpacetimePoint point;
  Probability propensity;
  /// Determination events (by variable) the answer was conditioned on.
  std::vector<std::string> conditioning;
  bool determinate = false;
};

/// Propensity of `variable = value` at `q`: the joint conditioned on exactly
/// the realised events of the model's variables in the closed causal past of
/// q. Returns 0/1 once the variable's own event is in that past.
PropensityAssignment propensity_at(const CorrelationModel& m, const Determinations& realized,
                                   const std::string& variable, int value, const SpacetimePoint& q,
                                   const Minkowski& mk);

}  // namespace relind
