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

// Centralized assignment routines: greedy, bait-plus-greedy robust
// assignment, and the myopic baseline.
//
// All argmax selections over (robot, action) pairs break ties by smallest
// robot id, then smallest action id. Values are compared with
// kValueTolerance before tie-breaking.

#ifndef SWARMGUARD_ROBUST_CORE_HPP_
#define SWARMGUARD_ROBUST_CORE_HPP_

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "swarmguard/objective.hpp"
#include "swarmguard/scenario.hpp"

namespace swarmguard {

enum class Provenance { kBait, kGreedy, kMyopic };

std::string_view to_string(Provenance provenance);

struct Choice {
  ActionId action = 0;
  Provenance provenance = Provenance::kGreedy;
  friend bool operator==(const Choice&, const Choice&) = default;
};

// One action per assigned robot, keyed by robot id.
struct Assignment {
  std::map<RobotId, Choice> chosen;

  std::size_t size() const { return chosen.size(); }
  bool empty() const { return chosen.empty(); }
  // Chosen action ids in robot order.
  std::vector<ActionId> actions() const;
  // Robots whose choice has the given provenance.
  std::vector<RobotId> robots_with(Provenance provenance) const;
  // Adds `other`'s choices; throws InvalidParameter on overlapping robots.
  void merge(const Assignment& other);

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Same chosen actions, ignoring provenance.
bool same_actions(const Assignment& a, const Assignment& b);

// Throws FeasibilityError unless every chosen action is owned by its robot.
void check_assignment(const Assignment& assignment,
                      const CoverageObjective& objective);

// Greedy assignment: repeatedly assigns the unassigned robot/action pair
// with the largest marginal gain until every robot in `robots` has an
// action. Empty `robots` gives an empty assignment.
Assignment central_greedy(std::span<const RobotId> robots,
                          const CoverageObjective& objective);
Assignment central_greedy(std::span<const RobotId> robots,
                          const CoverageObjective& objective, EvalTally& tally);

// Bait-plus-greedy robust assignment for `bait_count` conjectured attacks.
//
// Bait step: the `bait_count` robots with the largest best single-action
// value f({x}) each take that action. Greedy step: the remaining robots
// are assigned greedily with the bait actions left out of the objective's
// argument. Throws InvalidParameter unless 0 <= bait_count <= |robots|.
Assignment central_robust(std::span<const RobotId> robots,
                          const CoverageObjective& objective, int bait_count);
Assignment central_robust(std::span<const RobotId> robots,
                          const CoverageObjective& objective, int bait_count,
                          EvalTally& tally);

// Every robot takes its individually best action.
Assignment myopic(std::span<const RobotId> robots,
                  const CoverageObjective& objective);
Assignment myopic(std::span<const RobotId> robots,
                  const CoverageObjective& objective, EvalTally& tally);

// Best single action of `robot` and its value (smallest action id on ties).
std::pair<ActionId, double> best_single_action(const CoverageObjective& objective,
                                               RobotId robot);

// `robots` sorted by descending best single-action value, smallest id
// first on ties. This is the bait order.
std::vector<RobotId> rank_by_best_single(std::span<const RobotId> robots,
                                         const CoverageObjective& objective);

std::vector<RobotId> all_robots(const CoverageObjective& objective);

}  // namespace swarmguard

#endif  // SWARMGUARD_ROBUST_CORE_HPP_
