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

#include "relind/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relind::detail {

/// Where a scenario variable comes from.
struct VariableSource {
  enum class Kind { Explicit, Trng, BoxInput, BoxOutput, Measurement };
  std::string name;
  Kind kind;
  SpacetimePoint location;  ///< rest-frame coordinates
  std::optional<Probability> p_one;
  std::string origin;  ///< JSON pointer of the declaring element
};

/// Every variable the scenario determines, in declaration order. Points are
/// converted to the rest frame; frames must already resolve.
std::vector<VariableSource> variable_sources(const Scenario& s, const Minkowski& mk);

const FrameDecl* find_frame(const Scenario& s, const std::string& label);
const Observer* find_observer(const Scenario& s, const std::string& label);
const BoxDecl* find_box(const Scenario& s, const std::string& name);

}  // namespace relind::detail
