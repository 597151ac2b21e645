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

#include "relind/proposition.hpp"
#include "relind/spacetime.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relind {

/// The space-time point at which `variable` acquires the bit `value`.
struct DeterminationEvent {
  std::string variable;
  int value = 0;
  SpacetimePoint location;
};

/// Declared variables and the (at most one) determination event of each.
class Determinations {
 public:
  void declare(const std::string& variable);
  /// Declares the variable if needed. Throws Error when the variable already
  /// has an event or the value is not a bit.
  void add(DeterminationEvent e);

  bool is_declared(const std::string& variable) const { return declared_.contains(variable); }
  /// nullptr when the variable is declared but not (yet) determined.
  const DeterminationEvent* find(const std::string& variable) const;
  const std::vector<DeterminationEvent>& events() const { return events_; }
  const std::set<std::string>& declared() const { return declared_; }

  /// Same events with every location boosted by `v`.
  Determinations boosted(const Minkowski& mk, double v) const;

 private:
  std::set<std::string> declared_;
  std::vector<DeterminationEvent> events_;
  std::map<std::string, std::size_t> index_;
};

/// True/False inside the closed future cone of the variable's determination
/// event, Indeterminate elsewhere. Throws DeclarationError for unknown variables.
Truth atom_truth_at(const Determinations& d, const Atom& atom, const SpacetimePoint& q,
                    const Minkowski& mk);

Truth truth_at(const Determinations& d, const Proposition& p, const SpacetimePoint& q,
               const Minkowski& mk);

/// Earliest coordinate time at which `p` is determinate along `w`, or nullopt
/// if it never becomes determinate.
std::optional<double> determinacy_frontier(const Determinations& d, const Proposition& p,
                                           const Worldline& w, const Minkowski& mk);

/// Apices of the cones on whose union `p` is determinate. Each apex is the
/// cone join of a minimal set of determination events that settles `p`.
std::vector<SpacetimePoint> determinate_region(const Determinations& d, const Proposition& p,
                                               const Minkowski& mk);

/// Events in the closed causal past of `q`, in declaration order.
std::vector<const DeterminationEvent*> causal_past(const Determinations& d, const SpacetimePoint& q,
                                                   const Minkowski& mk);

// --- epistemic overlay ------------------------------------------------------

struct KnowledgeMark {
  std::string observer;
  std::string variable;
  SpacetimePoint known_from;

  bool operator==(const KnowledgeMark&) const = default;
};

/// One message per mark that claims knowledge of a value that is not yet
/// determinate at `known_from`. Empty when the overlay is consistent.
std::vector<std::string> check_knowledge(const Determinations& d, std::span<const KnowledgeMark> marks,
                                         const Minkowski& mk);

// --- shared-reality assumptions --------------------------------------------

struct LocalRealityDiscrepancy {
  std::string proposition;
  std::string frame;
  Truth rest_value;
  Truth frame_value;
};

struct LocalRealityReport {
  std::size_t checked = 0;
  std::vector<LocalRealityDiscrepancy> discrepancies;
  bool holds() const { return discrepancies.empty(); }
};

/// Re-evaluates every proposition at `q` after expressing the whole scenario
/// in each frame's coordinates, and lists any value that changed.
LocalRealityReport check_local_reality(const Determinations& d, const SpacetimePoint& q,
                                       std::span<const Proposition> propositions,
                                       std::span<const Frame> frames, const Minkowski& mk);

struct Observer {
  std::string label;
  Worldline worldline;

  bool operator==(const Observer&) const = default;
};

/// P and Q are simultaneous in `frame`; `proposition` is determinate at P and
/// indeterminate at Q.
struct PresentRealityCounterexample {
  SpacetimePoint p;
  SpacetimePoint q;
  Proposition proposition;
  Truth value_at_p;
  Truth value_at_q;
  std::string observer_at_q;
};

struct FalsifierResult {
  std::optional<PresentRealityCounterexample> counterexample;
  std::string reason;  ///< why no counterexample could be built
};

/// Searches for a refutation of "distant observers at relative rest share
/// truth values about present events". Needs a determination event and two
/// observers at rest in `frame` at distinct positions.
FalsifierResult present_reality_falsifier(const Determinations& d, std::span<const Observer> observers,
                                          const Frame& frame, const Minkowski& mk);

}  // namespace relind
