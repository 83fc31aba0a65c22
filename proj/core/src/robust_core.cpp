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

#include "swarmguard/robust_core.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "swarmguard/errors.hpp"

namespace swarmguard {

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kBait:
      return "bait";
    case Provenance::kGreedy:
      return "greedy";
    case Provenance::kMyopic:
      return "myopic";
  }
  return "greedy";
}

std::vector<ActionId> Assignment::actions() const {
  std::vector<ActionId> out;
  out.reserve(chosen.size());
  for (const auto& [robot, choice] : chosen) out.push_back(choice.action);
  return out;
}

std::vector<RobotId> Assignment::robots_with(Provenance provenance) const {
  std::vector<RobotId> out;
  for (const auto& [robot, choice] : chosen) {
    if (choice.provenance == provenance) out.push_back(robot);
  }
  return out;
}

void Assignment::merge(const Assignment& other) {
  for (const auto& [robot, choice] : other.chosen) {
    if (!chosen.emplace(robot, choice).second) {
      throw InvalidParameter("robot " + std::to_string(robot) + " assigned twice");
    }
  }
}

bool same_actions(const Assignment& a, const Assignment& b) {
  return a.actions() == b.actions() && a.size() == b.size() &&
         std::equal(a.chosen.begin(), a.chosen.end(), b.chosen.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first; });
}

void check_assignment(const Assignment& assignment, const CoverageObjective& objective) {
  for (const auto& [robot, choice] : assignment.chosen) {
    if (objective.owner(choice.action) != robot) {
      throw FeasibilityError("action " + std::to_string(choice.action) +
                             " is not owned by robot " + std::to_string(robot));
    }
  }
}

std::vector<RobotId> all_robots(const CoverageObjective& objective) {
  std::vector<RobotId> out(objective.num_robots());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<RobotId>(i);
  return out;
}

namespace {

std::vector<RobotId> sorted_unique(std::span<const RobotId> robots,
                                   const CoverageObjective& objective) {
  std::vector<RobotId> out(robots.begin(), robots.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InvalidParameter("robot listed twice");
  }
  for (RobotId r : out) {
    if (objective.actions_of(r).empty()) {
      throw InvalidParameter("robot " + std::to_string(r) + " has no actions");
    }
  }
  return out;
}

std::pair<ActionId, double> best_single(const CoverageObjective& objective,
                                        RobotId robot, EvalTally& tally) {
  ActionId best = -1;
  double value = 0.0;
  for (ActionId a : objective.actions_of(robot)) {  // ascending ids
    const double v = objective.singleton(a);
    ++tally.evaluations;
    if (best < 0 || v > value + kValueTolerance) {
      best = a;
      value = v;
    }
  }
  return {best, value};
}

// Greedy over `robots` (sorted), tagging choices with `tag`.
void greedy_into(std::vector<RobotId> robots, const CoverageObjective& objective,
                 Provenance tag, Assignment& out, EvalTally& tally) {
  CoverageObjective::Accumulator acc(objective);
  while (!robots.empty()) {
    std::size_t best_index = 0;
    ActionId best_action = -1;
    double best_gain = 0.0;
    for (std::size_t i = 0; i < robots.size(); ++i) {
      for (ActionId a : objective.actions_of(robots[i])) {
        const double g = acc.gain(a);
        ++tally.evaluations;
        if (best_action < 0 || g > best_gain + kValueTolerance) {
          best_index = i;
          best_action = a;
          best_gain = g;
        }
      }
    }
    acc.add(best_action);
    out.chosen[robots[best_index]] = {best_action, tag};
    robots.erase(robots.begin() + static_cast<std::ptrdiff_t>(best_index));
  }
}

}  // namespace

std::pair<ActionId, double> best_single_action(const CoverageObjective& objective,
                                               RobotId robot) {
  EvalTally tally;
  return best_single(objective, robot, tally);
}

std::vector<RobotId> rank_by_best_single(std::span<const RobotId> robots,
                                         const CoverageObjective& objective) {
  std::vector<std::pair<double, RobotId>> keyed;
  for (RobotId r : robots) keyed.emplace_back(best_single_action(objective, r).second, r);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first > b.first + kValueTolerance) return true;
    if (b.first > a.first + kValueTolerance) return false;
    return a.second < b.second;
  });
  std::vector<RobotId> out;
  for (const auto& [value, r] : keyed) out.push_back(r);
  return out;
}

Assignment central_greedy(std::span<const RobotId> robots,
                          const CoverageObjective& objective) {
  EvalTally tally;
  return central_greedy(robots, objective, tally);
}

Assignment central_greedy(std::span<const RobotId> robots,
                          const CoverageObjective& objective, EvalTally& tally) {
  Assignment out;
  greedy_into(sorted_unique(robots, objective), objective, Provenance::kGreedy, out, tally);
  return out;
}

Assignment central_robust(std::span<const RobotId> robots,
                          const CoverageObjective& objective, int bait_count) {
  EvalTally tally;
  return central_robust(robots, objective, bait_count, tally);
}

Assignment central_robust(std::span<const RobotId> robots,
                          const CoverageObjective& objective, int bait_count,
                          EvalTally& tally) {
  auto members = sorted_unique(robots, objective);
  if (bait_count < 0 || static_cast<std::size_t>(bait_count) > members.size()) {
    throw InvalidParameter("bait count " + std::to_string(bait_count) +
                           " outside [0, " + std::to_string(members.size()) + "]");
  }
  // Bait step: best single actions, highest value first.
  std::vector<std::tuple<double, RobotId, ActionId>> singles;
  singles.reserve(members.size());
  for (RobotId r : members) {
    auto [action, value] = best_single(objective, r, tally);
    singles.emplace_back(value, r, action);
  }
  std::stable_sort(singles.begin(), singles.end(), [](const auto& a, const auto& b) {
    return std::get<0>(a) > std::get<0>(b) + kValueTolerance;
  });
  Assignment out;
  std::vector<RobotId> rest;
  for (std::size_t i = 0; i < singles.size(); ++i) {
    const auto& [value, r, action] = singles[i];
    if (i < static_cast<std::size_t>(bait_count)) {
      out.chosen[r] = {action, Provenance::kBait};
    } else {
      rest.push_back(r);
    }
  }
  // Greedy step: the bait actions are not part of the greedy objective.
  std::sort(rest.begin(), rest.end());
  greedy_into(std::move(rest), objective, Provenance::kGreedy, out, tally);
  return out;
}

Assignment myopic(std::span<const RobotId> robots, const CoverageObjective& objective) {
  EvalTally tally;
  return myopic(robots, objective, tally);
}

Assignment myopic(std::span<const RobotId> robots, const CoverageObjective& objective,
                  EvalTally& tally) {
  Assignment out;
  for (RobotId r : sorted_unique(robots, objective)) {
    out.chosen[r] = {best_single(objective, r, tally).first, Provenance::kMyopic};
  }
  return out;
}

}  // namespace swarmguard
