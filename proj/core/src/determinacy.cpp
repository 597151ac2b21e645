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

#include "relind/determinacy.hpp"

#include "relind/errors.hpp"

#include <algorithm>
#include <cmath>

namespace relind {

void Determinations::declare(const std::string& variable) {
  if (variable.empty()) throw Error("variable name must not be empty");
  declared_.insert(variable);
}

void Determinations::add(DeterminationEvent e) {
  if (e.value != 0 && e.value != 1) {
    throw DomainError("determination of '" + e.variable + "' must be a bit");
  }
  if (index_.contains(e.variable)) {
    throw Error("variable '" + e.variable + "' is determined more than once");
  }
  declare(e.variable);
  index_.emplace(e.variable, events_.size());
  events_.push_back(std::move(e));
}

const DeterminationEvent* Determinations::find(const std::string& variable) const {
  auto it = index_.find(variable);
  return it == index_.end() ? nullptr : &events_[it->second];
}

Determinations Determinations::boosted(const Minkowski& mk, double v) const {
  Determinations out;
  out.declared_ = declared_;
  for (const auto& e : events_) {
    out.add(DeterminationEvent{e.variable, e.value, mk.boost(e.location, v)});
  }
  return out;
}

Truth atom_truth_at(const Determinations& d, const Atom& atom, const SpacetimePoint& q,
                    const Minkowski& mk) {
  if (!d.is_declared(atom.variable)) throw DeclarationError(atom.variable);
  const DeterminationEvent* e = d.find(atom.variable);
  if (e == nullptr || !mk.in_future_cone(e->location, q)) return Truth::Indeterminate;
  return from_bool(e->value == atom.value);
}

Truth truth_at(const Determinations& d, const Proposition& p, const SpacetimePoint& q,
               const Minkowski& mk) {
  if (p.is_atom()) return atom_truth_at(d, p.as_atom(), q, mk);
  const auto& c = p.as_compound();
  std::vector<Truth> inputs;
  inputs.reserve(c.children.size());
  for (const auto& child : c.children) inputs.push_back(truth_at(d, child, q, mk));
  return kleene_connective(c.kind, inputs);
}

namespace {

std::vector<const DeterminationEvent*> relevant_events(const Determinations& d, const Proposition& p) {
  std::vector<const DeterminationEvent*> out;
  for (const auto& var : p.variables()) {
    if (!d.is_declared(var)) throw DeclarationError(var);
    if (const auto* e = d.find(var)) out.push_back(e);
  }
  return out;
}

}  // namespace

std::optional<double> determinacy_frontier(const Determinations& d, const Proposition& p,
                                           const Worldline& w, const Minkowski& mk) {
  std::vector<double> entries;
  for (const auto* e : relevant_events(d, p)) entries.push_back(mk.cone_entry_time(e->location, w));
  std::sort(entries.begin(), entries.end());
  // Truth along a timelike worldline only changes where it enters a cone.
  for (double t : entries) {
    if (is_determinate(truth_at(d, p, mk.point_at(w, t), mk))) return t;
  }
  return std::nullopt;
}

std::vector<SpacetimePoint> determinate_region(const Determinations& d, const Proposition& p,
                                               const Minkowski& mk) {
  const auto events = relevant_events(d, p);
  if (events.size() > 16) throw Error("determinate_region supports at most 16 relevant variables");
  const std::size_t n = events.size();
  std::vector<unsigned> settling;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Determinations subset;
    for (const auto& var : d.declared()) subset.declare(var);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.add(*events[i]);
    }
    // Inside the joint cone of the subset every subset atom is determinate and
    // the rest are indeterminate, so one evaluation at the apex decides it.
    std::vector<SpacetimePoint> locs;
    for (const auto& e : subset.events()) locs.push_back(e.location);
    const auto apex = mk.cone_join(locs);
    if (is_determinate(truth_at(subset, p, apex, mk))) settling.push_back(mask);
  }
  std::vector<SpacetimePoint> apices;
  for (unsigned mask : settling) {
    const bool minimal = std::none_of(settling.begin(), settling.end(), [mask](unsigned other) {
      return other != mask && (other & mask) == other;
    });
    if (!minimal) continue;
    std::vector<SpacetimePoint> locs;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) locs.push_back(events[i]->location);
    }
    apices.push_back(mk.cone_join(locs));
  }
  return apices;
}

std::vector<const DeterminationEvent*> causal_past(const Determinations& d, const SpacetimePoint& q,
                                                   const Minkowski& mk) {
  std::vector<const DeterminationEvent*> out;
  for (const auto& e : d.events()) {
    if (mk.in_future_cone(e.location, q)) out.push_back(&e);
  }
  return out;
}

std::vector<std::string> check_knowledge(const Determinations& d, std::span<const KnowledgeMark> marks,
                                         const Minkowski& mk) {
  std::vector<std::string> problems;
  for (const auto& m : marks) {
    if (!d.is_declared(m.variable)) throw DeclarationError(m.variable);
    const auto* e = d.find(m.variable);
    if (e == nullptr || !mk.in_future_cone(e->location, m.known_from)) {
      problems.push_back(m.observer + " cannot know '" + m.variable + "' at (" +
                         std::to_string(m.known_from.t) + ", " + std::to_string(m.known_from.x) +
                         "): it is still indeterminate there");
    }
  }
  return problems;
}

LocalRealityReport check_local_reality(const Determinations& d, const SpacetimePoint& q,
                                       std::span<const Proposition> propositions,
                                       std::span<const Frame> frames, const Minkowski& mk) {
  LocalRealityReport report;
  for (const auto& p : propositions) {
    const Truth rest = truth_at(d, p, q, mk);
    for (const auto& f : frames) {
      const Determinations moved = d.boosted(mk, f.velocity);
      const Truth seen = truth_at(moved, p, mk.boost(q, f.velocity, f.label), mk);
      ++report.checked;
      if (seen != rest) report.discrepancies.push_back({p.to_string(), f.label, rest, seen});
    }
  }
  return report;
}

FalsifierResult present_reality_falsifier(const Determinations& d, std::span<const Observer> observers,
                                          const Frame& frame, const Minkowski& mk) {
  FalsifierResult result;
  if (d.events().empty()) {
    result.reason = "no counterexample constructible: no determination events";
    return result;
  }
  std::vector<const Observer*> at_rest;
  for (const auto& o : observers) {
    if (std::abs(o.worldline.velocity - frame.velocity) <= mk.epsilon()) at_rest.push_back(&o);
  }
  // Two observers at rest in the frame are distinct iff they are distinct at any frame time.
  bool separated = false;
  for (std::size_t i = 0; i < at_rest.size() && !separated; ++i) {
    for (std::size_t j = i + 1; j < at_rest.size() && !separated; ++j) {
      const auto pi = mk.point_at_frame_time(at_rest[i]->worldline, frame, 0.0);
      const auto pj = mk.point_at_frame_time(at_rest[j]->worldline, frame, 0.0);
      separated = std::abs(pi.x - pj.x) > mk.epsilon();
    }
  }
  if (!separated) {
    result.reason = "no counterexample constructible: needs two observers at rest in frame '" +
                    frame.label + "' at distinct positions";
    return result;
  }
  for (const auto& e : d.events()) {
    const double now = mk.simultaneity_coordinate(frame, e.location);
    const auto claim = Proposition::atom(e.variable, 0);
    const Truth at_p = truth_at(d, claim, e.location, mk);
    for (const auto& o : observers) {
      const auto q = mk.point_at_frame_time(o.worldline, frame, now);
      if (same_event(q, e.location, mk.epsilon())) continue;
      const Truth at_q = truth_at(d, claim, q, mk);
      if (is_determinate(at_p) && !is_determinate(at_q)) {
        result.counterexample = PresentRealityCounterexample{e.location, q, claim, at_p, at_q, o.label};
        return result;
      }
    }
  }
  result.reason = "no counterexample constructible: every simultaneous observer point is already inside the relevant cones";
  return result;
}

}  // namespace relind
