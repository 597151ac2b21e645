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

#include "relind/probability.hpp"
#include "relind/randomness.hpp"

#include <array>
#include <string>
#include <vector>

namespace relind {

/// Bipartite binary-input, binary-output conditional distribution p(a,b|x,y).
/// The 16 entries are stored in lexicographic (x, y, a, b) order.
class Box {
 public:
  using Table = std::array<Probability, 16>;

  /// Throws DomainError when an entry leaves [0, 1] or some p(.,.|x,y) does
  /// not sum to one within `tol`. Signalling boxes are accepted.
  explicit Box(Table table, double tol = 1e-12);

  static constexpr std::size_t index(int a, int b, int x, int y) {
    return static_cast<std::size_t>(x * 8 + y * 4 + a * 2 + b);
  }

  const Probability& operator()(int a, int b, int x, int y) const { return table_[index(a, b, x, y)]; }
  const Table& table() const { return table_; }

  Probability marginal_a(int a, int x, int y) const;
  Probability marginal_b(int b, int x, int y) const;

  /// Joint distribution over (x, y, a, b) with independent inputs,
  /// p(x=1) = px1 and p(y=1) = py1.
  CorrelationModel with_inputs(const std::array<std::string, 4>& names_xyab, Probability px1,
                               Probability py1) const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  Table table_;
};

/// p(a,b|x,y) = 1/2 if a xor b = x*y, else 0.
Box pr_box();
/// a = fa[x], b = fb[y] with certainty.
Box deterministic_box(std::array<int, 2> fa, std::array<int, 2> fb);
/// p(a=1|x) = pa1[x], p(b=1|y) = pb1[y], independently.
Box product_box(std::array<Probability, 2> pa1, std::array<Probability, 2> pb1);
/// Convex combination; weights must be non-negative and sum to one.
Box mixture(const std::vector<Probability>& weights, const std::vector<Box>& boxes);
/// Swaps the parties: q(a,b|x,y) = p(b,a|y,x).
Box swap_parties(const Box& b);

struct SignalingViolation {
  char side;  ///< 'A' when Alice's marginal depends on y, 'B' when Bob's depends on x
  int outcome;
  int input;
  Probability magnitude;
};

struct NoSignalingReport {
  std::vector<SignalingViolation> violations;
  bool ok() const { return violations.empty(); }
};

NoSignalingReport no_signaling_check(const Box& b, double tol = 1e-12);

/// S = sum_{x,y} (-1)^{xy} E_xy with E_xy = sum_{a,b} (-1)^{a xor b} p(a,b|x,y).
Probability chsh_value(const Box& b);

/// One of the eight relabelled CHSH expressions (variant in [0, 8)); variant 0
/// is chsh_value.
Probability chsh_variant(const Box& b, int variant);

struct LocalityResult {
  bool is_local = false;
  /// Largest of the eight CHSH expressions.
  Probability best_s;
};

/// Membership in the local polytope spanned by the 16 deterministic
/// strategies. In this 2-input 2-output setting the polytope is cut out of the
/// no-signalling set by positivity and the eight CHSH facets, so the check is
/// exact for exact tables.
LocalityResult local_bound(const Box& b, double tol = 1e-12);

/// All 16 deterministic local strategies, a(x) in the outer loop.
std::vector<Box> deterministic_strategies();

enum class Side { A, B };

/// A box seen from one party after it fed `input` and read `outcome`.
struct ConditionedBox {
  Box base;
  Side side = Side::A;
  int input = 0;
  int outcome = 0;
};

/// Distribution of the remote outcome given the remote input. Inside the
/// conditioning party's future cone it is p(b|x,y,a); elsewhere the
/// unconditioned marginal p(b|y). Throws ModelInconsistency when the local
/// outcome has probability zero.
std::array<Probability, 2> condition_box(const ConditionedBox& cb, bool q_in_cone, int remote_input);

}  // namespace relind
