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

#include <span>
#include <string>

namespace relind {

/// Absolute tolerance used for cone membership, lightlike classification and
/// simultaneity comparisons.
inline constexpr double kGeomEpsilon = 1e-9;

/// An event (t, x) in 1+1 dimensions. Times are minutes, positions are
/// light-minutes when c = 1. `frame` is a reporting label only; all library
/// computations treat coordinates as given in the global rest frame unless a
/// function says otherwise.
struct SpacetimePoint {
  double t = 0.0;
  double x = 0.0;
  std::string frame = "rest";

  SpacetimePoint() = default;
  /// Throws DomainError on non-finite coordinates.
  SpacetimePoint(double t, double x, std::string frame = "rest");

  bool operator==(const SpacetimePoint&) const = default;
};

/// Coordinate equality within kGeomEpsilon; frame labels are ignored.
bool same_event(const SpacetimePoint& p, const SpacetimePoint& q, double eps = kGeomEpsilon);

/// An inertial frame moving at `velocity` relative to the global rest frame.
struct Frame {
  double velocity = 0.0;
  std::string label = "rest";

  bool operator==(const Frame&) const = default;
};

/// A straight timelike trajectory x(t) = anchor.x + velocity * (t - anchor.t).
struct Worldline {
  SpacetimePoint anchor;
  double velocity = 0.0;

  bool operator==(const Worldline&) const = default;
};

enum class CausalKind { Timelike, Lightlike, Spacelike };
enum class CausalOrder { FirstPrecedesSecond, SecondPrecedesFirst, None };

struct CausalRelation {
  CausalKind kind = CausalKind::Spacelike;
  CausalOrder order = CausalOrder::None;

  friend bool operator==(const CausalRelation&, const CausalRelation&) = default;
};

const char* to_string(CausalKind kind);
const char* to_string(CausalOrder order);

/// Special-relativistic kinematics at a fixed maximal signal speed.
///
/// Cones are closed: lightlike separation counts as causal connection.
class Minkowski {
 public:
  /// Throws DomainError unless c > 0 and eps >= 0 are finite.
  explicit Minkowski(double c = 1.0, double eps = kGeomEpsilon);

  double c() const noexcept { return c_; }
  double epsilon() const noexcept { return eps_; }

  /// 1 / sqrt(1 - v^2/c^2). Throws DomainError for |v| >= c.
  double gamma(double v) const;
  void check_velocity(double v) const;

  /// Coordinates of `p` in a frame moving at `v` relative to p's frame.
  SpacetimePoint boost(const SpacetimePoint& p, double v, std::string frame = "boosted") const;

  /// c^2 dt^2 - dx^2. Positive is timelike.
  double interval(const SpacetimePoint& p, const SpacetimePoint& q) const;
  CausalRelation causal_relation(const SpacetimePoint& p, const SpacetimePoint& q) const;

  /// q lies in the closed future cone of `source`: c dt >= |dx|, dt >= 0.
  bool in_future_cone(const SpacetimePoint& source, const SpacetimePoint& q) const;

  /// Time coordinate of `p` in frame `f`: gamma (t - v x / c^2).
  double simultaneity_coordinate(const Frame& f, const SpacetimePoint& p) const;
  bool simultaneous(const Frame& f, const SpacetimePoint& p, const SpacetimePoint& q) const;

  SpacetimePoint point_at(const Worldline& w, double t) const;

  /// Point of `w` whose time coordinate in frame `f` equals `frame_time`.
  SpacetimePoint point_at_frame_time(const Worldline& w, const Frame& f, double frame_time) const;

  /// Relativistic velocity addition. Throws DomainError for inputs at or beyond c.
  double compose_velocities(double v1, double v2) const;

  /// Earliest coordinate time at which `w` lies inside the closed future cone
  /// of `source`. A timelike worldline never leaves a future cone once inside.
  double cone_entry_time(const SpacetimePoint& source, const Worldline& w) const;

  /// Apex of the intersection of the closed future cones of `sources`; in
  /// 1+1 dimensions that intersection is itself a future cone. Throws
  /// DomainError on an empty span.
  SpacetimePoint cone_join(std::span<const SpacetimePoint> sources) const;

 private:
  double c_;
  double eps_;
};

}  // namespace relind
