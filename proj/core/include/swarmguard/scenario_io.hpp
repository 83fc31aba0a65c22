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

#ifndef SWARMGUARD_SCENARIO_IO_HPP_
#define SWARMGUARD_SCENARIO_IO_HPP_

#include <filesystem>
#include <string>

#include "swarmguard/scenario.hpp"

namespace swarmguard {

inline constexpr int kScenarioSchemaVersion = 1;

// JSON scenario file:
//   {"schema_version": 1, "seed": u64, "comm_range": m, "attack_budget": n,
//    "geometry": {"l_t": m, "l_o": m, "l_f": m},
//    "robots": [{"id": i, "position": [x, y], "kinds": [...]}, ...],
//    "targets": [{"id": j, "position": [x, y], "velocity": [vx, vy]}, ...]}
// "kinds" is optional and omitted when a robot has all five primitives.
// Doubles are written in shortest round-trip form, so load(save(s)) == s.
std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

void save_scenario(const Scenario& scenario, const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace swarmguard

#endif  // SWARMGUARD_SCENARIO_IO_HPP_
