// Copyright 2026 The SwarmGuard Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWARMGUARD_CLI_BOUNDS_HPP_
#define SWARMGUARD_CLI_BOUNDS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "swarmguard/objective.hpp"
#include "swarmguard/scenario.hpp"

namespace swarmguard::cli {

struct BoundParams {
  int instances = 100;
  std::uint64_t seed = 0;
  int max_robots = 4;
  int max_actions = 3;
  int max_alpha = 2;
  int max_targets = 8;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

// Small random instance: at least two robots (when allowed) and the
// targets in an 8 m square, budget below the team size, random
// primitive subsets, random range and budget.
Scenario make_bound_instance(std::uint64_t seed, const BoundParams& params);

struct BoundCheck {
  double value = 0.0;  // post-attack value of the planner's assignment
  double ratio = 0.0;  // value / optimum, 1 when the optimum is 0
  double bound = 0.0;
  bool holds = true;
};

struct BoundReport {
  int index = 0;
  std::uint64_t seed = 0;
  int robots = 0;
  int actions = 0;
  int alpha = 0;
  double curvature = 0.0;
  double optimum = 0.0;
  BoundCheck drm;
  BoundCheck idrm;
  BoundCheck myopic;

  bool holds() const { return drm.holds && idrm.holds && myopic.holds; }
};

BoundReport check_bounds(const Scenario& scenario, std::uint64_t cap);
std::vector<BoundReport> verify_bounds(const BoundParams& params);

std::string bound_report_header();
std::string to_csv(const BoundReport& report);

}  // namespace swarmguard::cli

#endif  // SWARMGUARD_CLI_BOUNDS_HPP_
