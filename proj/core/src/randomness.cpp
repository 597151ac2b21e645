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

#include "relind/randomness.hpp"

#include "relind/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace relind {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::split(std::uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream + 1))); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::string tick_variable(const TrngProcess& p, int index) {
  if (index >= 1 && static_cast<std::size_t>(index) <= p.labels.size()) return p.labels[index - 1];
  return p.prefix + "_" + std::to_string(index);
}

std::vector<TrngTick> tick_events(const TrngProcess& p, double horizon, const Minkowski& mk) {
  if (!(p.proper_period > 0.0) || !std::isfinite(p.proper_period)) {
    throw DomainError("TRNG '" + p.prefix + "' needs a positive proper period");
  }
  if (p.marginal < Probability(0) || p.marginal > Probability(1)) {
    throw DomainError("TRNG '" + p.prefix + "' marginal outside [0, 1]");
  }
  const double period = mk.gamma(p.worldline.velocity) * p.proper_period;
  std::vector<TrngTick> ticks;
  for (int k = 1;; ++k) {
    const double t = p.worldline.anchor.t + k * period;
    if (t > horizon + mk.epsilon()) break;
    ticks.push_back({tick_variable(p, k), k, mk.point_at(p.worldline, t)});
  }
  return ticks;
}

CorrelationModel::CorrelationModel(std::vector<std::string> variables, std::vector<Probability> joint)
    : variables_(std::move(variables)), joint_(std::move(joint)) {
  if (variables_.empty()) throw Error("correlation model needs at least one variable");
  if (variables_.size() > 16) throw Error("correlation model supports at most 16 variables");
  std::set<std::string> seen(variables_.begin(), variables_.end());
  if (seen.size() != variables_.size()) throw Error("correlation model lists a variable twice");
  if (joint_.size() != (std::size_t{1} << variables_.size())) {
    throw Error("joint table over " + std::to_string(variables_.size()) + " variables needs " +
                std::to_string(std::size_t{1} << variables_.size()) + " entries, got " +
                std::to_string(joint_.size()));
  }
}

CorrelationModel CorrelationModel::independent_bit(std::string variable, Probability p_one) {
  CorrelationModel m({variable}, {Probability(1) - p_one, p_one});
  m.declare_marginal(variable, p_one);
  return m;
}

bool CorrelationModel::contains(const std::string& variable) const {
  return std::find(variables_.begin(), variables_.end(), variable) != variables_.end();
}

std::size_t CorrelationModel::position(const std::string& variable) const {
  auto it = std::find(variables_.begin(), variables_.end(), variable);
  if (it == variables_.end()) throw DeclarationError(variable);
  return static_cast<std::size_t>(it - variables_.begin());
}

void CorrelationModel::declare_marginal(const std::string& variable, Probability p_one) {
  position(variable);
  declared_marginals_.insert_or_assign(variable, std::move(p_one));
}

Probability CorrelationModel::probability(const std::map<std::string, int>& assignment) const {
  const std::size_t n = variables_.size();
  std::size_t mask = 0;
  std::size_t want = 0;
  for (const auto& [var, bit] : assignment) {
    const std::size_t shift = n - 1 - position(var);
    mask |= std::size_t{1} << shift;
    if (bit) want |= std::size_t{1} << shift;
  }
  Probability total;
  for (std::size_t i = 0; i < joint_.size(); ++i) {
    if ((i & mask) == want) total += joint_[i];
  }
  return total;
}

Probability CorrelationModel::marginal(const std::string& variable, int value) const {
  return probability({{variable, value}});
}

Probability CorrelationModel::conditional(const std::string& variable, int value,
                                          const std::map<std::string, int>& given) const {
  const Probability denom = probability(given);
  if (denom.is_zero()) throw ModelInconsistency("conditioning on an event of probability zero");
  auto both = given;
  if (auto it = both.find(variable); it != both.end()) {
    return Probability(it->second == value ? 1 : 0);
  }
  both.emplace(variable, value);
  return probability(both) / denom;
}

std::map<std::string, int> CorrelationModel::sample(Rng& rng, const std::map<std::string, int>& forced) const {
  const std::size_t n = variables_.size();
  std::size_t mask = 0;
  std::size_t want = 0;
  for (const auto& [var, bit] : forced) {
    if (!contains(var)) continue;
    const std::size_t shift = n - 1 - position(var);
    mask |= std::size_t{1} << shift;
    if (bit) want |= std::size_t{1} << shift;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < joint_.size(); ++i) {
    if ((i & mask) == want) total += joint_[i].to_double();
  }
  if (!(total > 0.0)) throw ModelInconsistency("forced outcomes have probability zero");
  const double u = rng.uniform() * total;
  double acc = 0.0;
  std::size_t chosen = joint_.size();
  for (std::size_t i = 0; i < joint_.size(); ++i) {
    if ((i & mask) != want) continue;
    const double p = joint_[i].to_double();
    if (p <= 0.0) continue;
    chosen = i;  // last positive entry absorbs rounding at the top end
    acc += p;
    if (u < acc) break;
  }
  std::map<std::string, int> out;
  for (std::size_t k = 0; k < n; ++k) out.emplace(variables_[k], static_cast<int>((chosen >> (n - 1 - k)) & 1));
  return out;
}

ModelReport validate_model(const CorrelationModel& m, double tol) {
  ModelReport report;
  const std::size_t n = m.variables().size();
  Probability sum;
  for (std::size_t i = 0; i < m.joint().size(); ++i) {
    const auto& p = m.joint()[i];
    sum += p;
    if (p < Probability(0) || p > Probability(1)) {
      std::string outcome;
      for (std::size_t k = 0; k < n; ++k) outcome += ((i >> (n - 1 - k)) & 1) ? '1' : '0';
      const double d = p.to_double();
      report.violations.push_back({"range", "entry " + outcome + " = " + p.to_string(),
                                   d < 0 ? -d : d - 1.0});
    }
  }
  if (!within(sum, Probability(1), tol)) {
    report.violations.push_back({"normalization", "entries sum to " + sum.to_string(),
                                 std::abs(sum.to_double() - 1.0)});
  }
  for (const auto& [var, declared] : m.declared_marginals()) {
    const Probability actual = m.marginal(var, 1);
    if (!within(actual, declared, tol)) {
      report.violations.push_back({"marginal", "p(" + var + "=1) is " + actual.to_string() +
                                                   ", declared " + declared.to_string(),
                                   std::abs(actual.to_double() - declared.to_double())});
    }
  }
  return report;
}

PropensityAssignment propensity_at(const CorrelationModel& m, const Determinations& realized,
                                   const std::string& variable, int value, const SpacetimePoint& q,
                                   const Minkowski& mk) {
  if (value != 0 && value != 1) throw DomainError("claimed value must be a bit");
  m.position(variable);
  PropensityAssignment out{variable, value, q, Probability(), {}, false};
  std::map<std::string, int> given;
  for (const auto* e : causal_past(realized, q, mk)) {
    if (!m.contains(e->variable)) continue;
    given.emplace(e->variable, e->value);
    out.conditioning.push_back(e->variable);
  }
  if (auto it = given.find(variable); it != given.end()) {
    out.propensity = Probability(it->second == value ? 1 : 0);
    out.determinate = true;
    return out;
  }
  out.propensity = m.conditional(variable, value, given);
  return out;
}

}  // namespace relind
