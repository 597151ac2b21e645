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

#include <relind/errors.hpp>
#include <relind/spacetime.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

using namespace relind;

TEST_SUITE("spacetime") {

TEST_CASE("gamma and velocity limits") {
  const Minkowski mk;
  CHECK(mk.gamma(0.6) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(mk.gamma(0.0) == 1.0);
  CHECK_THROWS_AS(mk.gamma(1.0), DomainError);
  CHECK_THROWS_AS(mk.gamma(-1.5), DomainError);
  CHECK_THROWS_AS(Minkowski(0.0), DomainError);
  CHECK_THROWS_AS(SpacetimePoint(std::nan(""), 0.0), DomainError);
  CHECK_THROWS_AS(SpacetimePoint(0.0, std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("boost matches reference coordinates") {
  const Minkowski mk;
  const auto q = mk.boost({0, 1}, 0.5);
  CHECK(q.t == doctest::Approx(-0.5773502691896258).epsilon(1e-12));
  CHECK(q.x == doctest::Approx(1.1547005383792517).epsilon(1e-12));
  CHECK(q.frame == "boosted");
  const auto back = mk.boost(q, -0.5);
  CHECK(same_event(back, {0, 1}));
}

TEST_CASE("velocity composition") {
  const Minkowski mk;
  CHECK(mk.compose_velocities(0.5, 0.5) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(mk.compose_velocities(0.9, -0.9) == doctest::Approx(0.0));
  CHECK_THROWS_AS(mk.compose_velocities(1.0, 0.1), DomainError);
}

TEST_CASE("causal classification") {
  const Minkowski mk;
  auto r = mk.causal_relation({0, 0}, {1, 0.5});
  CHECK(r.kind == CausalKind::Timelike);
  CHECK(r.order == CausalOrder::FirstPrecedesSecond);
  r = mk.causal_relation({1, 1}, {0, 0});
  CHECK(r.kind == CausalKind::Lightlike);
  CHECK(r.order == CausalOrder::SecondPrecedesFirst);
  r = mk.causal_relation({0, 0}, {0, 1});
  CHECK(r.kind == CausalKind::Spacelike);
  CHECK(r.order == CausalOrder::None);
  CHECK(mk.in_future_cone({0, 0}, {1, 1}));
  CHECK(mk.in_future_cone({0, 0}, {0, 0}));
  CHECK_FALSE(mk.in_future_cone({0, 0}, {1 - 1e-6, 1}));
  CHECK_FALSE(mk.in_future_cone({0, 0}, {-1, 0}));
}

TEST_CASE("relativity of simultaneity") {
  const Minkowski mk;
  const Frame moving{0.5, "moving"};
  // The moving frame's plane through (0, 1) meets x = 0 at t = -0.5.
  const double tb = mk.simultaneity_coordinate(moving, {0, 1});
  CHECK(tb == doctest::Approx(-0.5773502691896258).epsilon(1e-12));
  CHECK(mk.simultaneity_coordinate(moving, {-0.5, 0}) == doctest::Approx(tb).epsilon(1e-12));
  CHECK(mk.simultaneous(moving, {0, 1}, {-0.5, 0}));
  CHECK_FALSE(mk.simultaneous(Frame{}, {0, 1}, {-0.5, 0}));
  const auto a = mk.point_at_frame_time(Worldline{{0, 0}, 0.0}, moving, tb);
  CHECK(a.t == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(a.x == 0.0);
}

TEST_CASE("worldline cone entry and cone join") {
  const Minkowski mk;
  CHECK(mk.cone_entry_time({0, 0}, Worldline{{0, 1}, 0.0}) == doctest::Approx(1.0));
  CHECK(mk.cone_entry_time({0, 0}, Worldline{{0, 0.5}, 0.0}) == doctest::Approx(0.5));
  CHECK(mk.cone_entry_time({0, 0}, Worldline{{0, 1}, 0.5}) == doctest::Approx(2.0));
  CHECK(mk.cone_entry_time({0, 0}, Worldline{{0, 1}, -0.5}) == doctest::Approx(2.0 / 3.0));
  const std::vector<SpacetimePoint> two{{0, 0}, {0, 1}};
  const auto apex = mk.cone_join(two);
  CHECK(apex.t == doctest::Approx(0.5));
  CHECK(apex.x == doctest::Approx(0.5));
  const std::vector<SpacetimePoint> nested{{0, 0}, {2, 0.5}};
  CHECK(same_event(mk.cone_join(nested), {2, 0.5}));
  CHECK_THROWS_AS(mk.cone_join(std::span<const SpacetimePoint>{}), DomainError);
}

TEST_CASE("non-unit signal speed") {
  const Minkowski mk(2.0);
  CHECK(mk.in_future_cone({0, 0}, {0.5, 1.0}));
  CHECK_FALSE(mk.in_future_cone({0, 0}, {0.4, 1.0}));
  CHECK(mk.gamma(1.2) == doctest::Approx(1.25));
  CHECK(mk.cone_entry_time({0, 0}, Worldline{{0, 1}, 0.0}) == doctest::Approx(0.5));
}

}
