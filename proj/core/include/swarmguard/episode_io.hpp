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

#ifndef SWARMGUARD_EPISODE_IO_HPP_
#define SWARMGUARD_EPISODE_IO_HPP_

#include <string>

#include "swarmguard/tracking.hpp"

namespace swarmguard {

inline constexpr int kEpisodeSchemaVersion = 1;

// JSON Lines: a header record {"schema_version", "config", "attack_budget"}
// followed by one record per round.
std::string episode_to_jsonl(const EpisodeLog& log);

// Episode config file. Every key is optional:
//   planner, attacker, rounds, seed, dt, accel_sigma, measurement_sigma,
//   initial_position_sigma, initial_velocity_sigma, target_speed, jobs.
// Unknown keys and out-of-range values raise ParseError.
EpisodeConfig episode_config_from_json(const std::string& text,
                                       EpisodeConfig base = {});

}  // namespace swarmguard

#endif  // SWARMGUARD_EPISODE_IO_HPP_
