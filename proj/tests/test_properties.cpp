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

#include "properties.hpp"

#include <doctest.h>

using namespace relind;

TEST_SUITE("properties") {

TEST_CASE("randomized invariants") {
  for (const auto& r : props::all_properties(20261016, 2000)) {
    CAPTURE(r.name);
    CAPTURE(r.first_failure);
    CHECK(r.cases == 2000);
    CHECK(r.failures == 0);
  }
}

TEST_CASE("random propositions survive a text round trip") {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto p = props::random_proposition(rng, props::property_variables(), 4);
    CHECK(Proposition::parse(p.to_string()) == p);
  }
}

}
