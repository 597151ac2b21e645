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

#include "relind/boxes.hpp"

#include "relind/errors.hpp"

namespace relind {

namespace {

int sign(int bit) { return bit ? -1 : 1; }

void check_bits(std::initializer_list<int> bits) {
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("box inputs and outcomes are bits");
  }
}

}  // namespace

Box::Box(Table table, double tol) : table_(std::move(table)) {
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      Probability sum;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const auto& p = table_[index(a, b, x, y)];
          if (p < Probability(0) || p > Probability(1)) {
            throw DomainError("box entry p(" + std::to_string(a) + "," + std::to_string(b) + "|" +
                              std::to_string(x) + "," + std::to_string(y) + ") = " + p.to_string() +
                              " outside [0, 1]");
          }
          sum += p;
        }
      }
      if (!within(sum, Probability(1), tol)) {
        throw DomainError("box is not normalised for inputs (" + std::to_string(x) + "," +
                          std::to_string(y) + "): sum " + sum.to_string());
      }
    }
  }
}

Probability Box::marginal_a(int a, int x, int y) const {
  check_bits({a, x, y});
  return (*this)(a, 0, x, y) + (*this)(a, 1, x, y);
}

Probability Box::marginal_b(int b, int x, int y) const {
  check_bits({b, x, y});
  return (*this)(0, b, x, y) + (*this)(1, b, x, y);
}

CorrelationModel Box::with_inputs(const std::array<std::string, 4>& names, Probability px1,
                                  Probability py1) const {
  const std::array<Probability, 2> px{Probability(1) - px1, px1};
  const std::array<Probability, 2> py{Probability(1) - py1, py1};
  std::vector<Probability> joint(16);
  // Model order (x, y, a, b) matches the box table order.
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) joint[index(a, b, x, y)] = px[x] * py[y] * (*this)(a, b, x, y);
  CorrelationModel m({names[0], names[1], names[2], names[3]}, std::move(joint));
  m.declare_marginal(names[0], px1);
  m.declare_marginal(names[1], py1);
  return m;
}

Box pr_box() {
  Box::Table t;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          t[Box::index(a, b, x, y)] = ((a ^ b) == (x & y)) ? Probability::ratio(1, 2) : Probability(0);
  return Box(std::move(t), 0.0);
}

Box deterministic_box(std::array<int, 2> fa, std::array<int, 2> fb) {
  check_bits({fa[0], fa[1], fb[0], fb[1]});
  Box::Table t;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) t[Box::index(fa[x], fb[y], x, y)] = Probability(1);
  return Box(std::move(t), 0.0);
}

Box product_box(std::array<Probability, 2> pa1, std::array<Probability, 2> pb1) {
  Box::Table t;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const Probability pa = a ? pa1[x] : Probability(1) - pa1[x];
          const Probability pb = b ? pb1[y] : Probability(1) - pb1[y];
          t[Box::index(a, b, x, y)] = pa * pb;
        }
  return Box(std::move(t));
}

Box mixture(const std::vector<Probability>& weights, const std::vector<Box>& boxes) {
  if (weights.size() != boxes.size() || boxes.empty()) throw Error("mixture needs one weight per box");
  Probability total;
  Box::Table t;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    if (weights[k] < Probability(0)) throw DomainError("negative mixture weight");
    total += weights[k];
    for (std::size_t i = 0; i < 16; ++i) t[i] += weights[k] * boxes[k].table()[i];
  }
  if (!within(total, Probability(1), 1e-12)) throw DomainError("mixture weights must sum to one");
  return Box(std::move(t));
}

Box swap_parties(const Box& src) {
  Box::Table t;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) t[Box::index(a, b, x, y)] = src(b, a, y, x);
  return Box(std::move(t));
}

NoSignalingReport no_signaling_check(const Box& b, double tol) {
  NoSignalingReport report;
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      const Probability diff = (b.marginal_a(a, x, 0) - b.marginal_a(a, x, 1)).abs();
      if (!within(diff, Probability(0), tol)) report.violations.push_back({'A', a, x, diff});
    }
  }
  for (int y = 0; y < 2; ++y) {
    for (int bb = 0; bb < 2; ++bb) {
      const Probability diff = (b.marginal_b(bb, 0, y) - b.marginal_b(bb, 1, y)).abs();
      if (!within(diff, Probability(0), tol)) report.violations.push_back({'B', bb, y, diff});
    }
  }
  return report;
}

Probability chsh_variant(const Box& b, int variant) {
  if (variant < 0 || variant >= 8) throw DomainError("CHSH variant must be in [0, 8)");
  const int alpha = variant & 1;
  const int beta = (variant >> 1) & 1;
  const int flip = (variant >> 2) & 1;
  Probability s;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      Probability correlator;
      for (int a = 0; a < 2; ++a)
        for (int o = 0; o < 2; ++o) correlator += Probability(sign(a ^ o)) * b(a, o, x, y);
      s += Probability(sign((x & y) ^ (alpha & x) ^ (beta & y) ^ flip)) * correlator;
    }
  }
  return s;
}

Probability chsh_value(const Box& b) { return chsh_variant(b, 0); }

LocalityResult local_bound(const Box& b, double tol) {
  LocalityResult result;
  result.best_s = chsh_variant(b, 0);
  for (int v = 1; v < 8; ++v) {
    auto s = chsh_variant(b, v);
    if (s > result.best_s) result.best_s = std::move(s);
  }
  const bool facets_hold = result.best_s <= Probability(2) || within(result.best_s, Probability(2), tol);
  result.is_local = facets_hold && no_signaling_check(b, tol).ok();
  return result;
}

std::vector<Box> deterministic_strategies() {
  std::vector<Box> out;
  for (int fa = 0; fa < 4; ++fa)
    for (int fb = 0; fb < 4; ++fb)
      out.push_back(deterministic_box({fa & 1, fa >> 1}, {fb & 1, fb >> 1}));
  return out;
}

std::array<Probability, 2> condition_box(const ConditionedBox& cb, bool q_in_cone, int remote_input) {
  check_bits({cb.input, cb.outcome, remote_input});
  const bool alice = cb.side == Side::A;
  const int x = alice ? cb.input : remote_input;
  const int y = alice ? remote_input : cb.input;
  std::array<Probability, 2> out;
  const Probability local = alice ? cb.base.marginal_a(cb.outcome, x, y) : cb.base.marginal_b(cb.outcome, x, y);
  if (local.is_zero()) {
    throw ModelInconsistency("conditioning outcome has probability zero under its input");
  }
  for (int r = 0; r < 2; ++r) {
    if (q_in_cone) {
      const Probability joint = alice ? cb.base(cb.outcome, r, x, y) : cb.base(r, cb.outcome, x, y);
      out[r] = joint / local;
    } else {
      out[r] = alice ? cb.base.marginal_b(r, x, y) : cb.base.marginal_a(r, x, y);
    }
  }
  return out;
}

}  // namespace relind
