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

#include "relind/spacetime.hpp"

#include "relind/errors.hpp"

#include <algorithm>
#include <cmath>

namespace relind {

SpacetimePoint::SpacetimePoint(double t_, double x_, std::string frame_)
    : t(t_), x(x_), frame(std::move(frame_)) {
  if (!std::isfinite(t) || !std::isfinite(x)) {
    throw DomainError("spacetime coordinates must be finite");
  }
}

bool same_event(const SpacetimePoint& p, const SpacetimePoint& q, double eps) {
  return std::abs(p.t - q.t) <= eps && std::abs(p.x - q.x) <= eps;
}

const char* to_string(CausalKind kind) {
  switch (kind) {
    case CausalKind::Timelike: return "timelike";
    case CausalKind::Lightlike: return "lightlike";
    case CausalKind::Spacelike: return "spacelike";
  }
  return "?";
}

const char* to_string(CausalOrder order) {
  switch (order) {
    case CausalOrder::FirstPrecedesSecond: return "first-precedes-second";
    case CausalOrder::SecondPrecedesFirst: return "second-precedes-first";
    case CausalOrder::None: return "none";
  }
  return "?";
}

Minkowski::Minkowski(double c, double eps) : c_(c), eps_(eps) {
  if (!std::isfinite(c) || c <= 0.0) throw DomainError("signal speed c must be a positive finite number");
  if (!std::isfinite(eps) || eps < 0.0) throw DomainError("tolerance must be a non-negative finite number");
}

void Minkowski::check_velocity(double v) const {
  if (!std::isfinite(v) || std::abs(v) >= c_) {
    throw DomainError("velocity " + std::to_string(v) + " is not strictly below c = " + std::to_string(c_));
  }
}

double Minkowski::gamma(double v) const {
  check_velocity(v);
  const double beta = v / c_;
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

SpacetimePoint Minkowski::boost(const SpacetimePoint& p, double v, std::string frame) const {
  const double g = gamma(v);
  return SpacetimePoint(g * (p.t - v * p.x / (c_ * c_)), g * (p.x - v * p.t), std::move(frame));
}

double Minkowski::interval(const SpacetimePoint& p, const SpacetimePoint& q) const {
  const double dt = q.t - p.t;
  const double dx = q.x - p.x;
  return c_ * c_ * dt * dt - dx * dx;
}

CausalRelation Minkowski::causal_relation(const SpacetimePoint& p, const SpacetimePoint& q) const {
  const double s2 = interval(p, q);
  CausalRelation rel;
  if (std::abs(s2) <= eps_) {
    rel.kind = CausalKind::Lightlike;
  } else if (s2 > 0) {
    rel.kind = CausalKind::Timelike;
  } else {
    return rel;
  }
  const double dt = q.t - p.t;
  if (dt > 0) {
    rel.order = CausalOrder::FirstPrecedesSecond;
  } else if (dt < 0) {
    rel.order = CausalOrder::SecondPrecedesFirst;
  }
  // dt == 0 with a non-spacelike interval means coincident events: no order.
  return rel;
}

bool Minkowski::in_future_cone(const SpacetimePoint& source, const SpacetimePoint& q) const {
  const double dt = q.t - source.t;
  const double dx = std::abs(q.x - source.x);
  return dt >= -eps_ && c_ * dt - dx >= -eps_;
}

double Minkowski::simultaneity_coordinate(const Frame& f, const SpacetimePoint& p) const {
  if (f.velocity == 0.0) return p.t;
  return gamma(f.velocity) * (p.t - f.velocity * p.x / (c_ * c_));
}

bool Minkowski::simultaneous(const Frame& f, const SpacetimePoint& p, const SpacetimePoint& q) const {
  return std::abs(simultaneity_coordinate(f, p) - simultaneity_coordinate(f, q)) <= eps_;
}

SpacetimePoint Minkowski::point_at(const Worldline& w, double t) const {
  return SpacetimePoint(t, w.anchor.x + w.velocity * (t - w.anchor.t));
}

SpacetimePoint Minkowski::point_at_frame_time(const Worldline& w, const Frame& f, double frame_time) const {
  check_velocity(w.velocity);
  const double g = gamma(f.velocity);
  const double v = f.velocity;
  // gamma (t - v (x0 + u (t - t0)) / c^2) = frame_time, solved for t.
  const double c2 = c_ * c_;
  const double t = (frame_time / g + v * (w.anchor.x - w.velocity * w.anchor.t) / c2) /
                   (1.0 - v * w.velocity / c2);
  return point_at(w, t);
}

double Minkowski::compose_velocities(double v1, double v2) const {
  check_velocity(v1);
  check_velocity(v2);
  return (v1 + v2) / (1.0 + v1 * v2 / (c_ * c_));
}

double Minkowski::cone_entry_time(const SpacetimePoint& source, const Worldline& w) const {
  check_velocity(w.velocity);
  const double u = w.velocity;
  const double offset = w.anchor.x - source.x - u * w.anchor.t;
  // c (t - ts) >= offset + u t   and   c (t - ts) >= -(offset + u t)
  const double right = (c_ * source.t + offset) / (c_ - u);
  const double left = (c_ * source.t - offset) / (c_ + u);
  return std::max(right, left);
}

SpacetimePoint Minkowski::cone_join(std::span<const SpacetimePoint> sources) const {
  if (sources.empty()) throw DomainError("cone_join needs at least one source");
  // Light-cone coordinates: u = ct - x, w = ct + x. A future cone is {u >= u0, w >= w0}.
  double u = sources.front().t * c_ - sources.front().x;
  double w = sources.front().t * c_ + sources.front().x;
  for (const auto& p : sources.subspan(1)) {
    u = std::max(u, c_ * p.t - p.x);
    w = std::max(w, c_ * p.t + p.x);
  }
  return SpacetimePoint((u + w) / (2.0 * c_), (w - u) / 2.0);
}

}  // namespace relind
