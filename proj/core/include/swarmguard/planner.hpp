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

// Uniform entry point over all planners and attackers, and the results
// row shared by the CLI and the Monte Carlo harness.

#ifndef SWARMGUARD_PLANNER_HPP_
#define SWARMGUARD_PLANNER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swarmguard/attacks.hpp"
#include "swarmguard/distributed.hpp"

namespace swarmguard {

enum class Planner {
  kCentralGreedy,
  kCentralRobust,
  kDrm,
  kIdrm,
  kDrmUna,
  kMyopic
};
enum class Attacker { kWorstCase, kGreedy, kNone };

// CLI spellings: central-greedy, central-robust, drm, idrm, drm-una, myopic;
// worst-case, greedy, none.
std::string_view to_string(Planner planner);
std::string_view to_string(Attacker attacker);
std::optional<Planner> parse_planner(std::string_view name);
std::optional<Attacker> parse_attacker(std::string_view name);

bool is_distributed(Planner planner);

// Centralized planners report one clique holding every robot, zero
// communication rounds and zero messages.
DistributedResult plan(Planner planner, const Scenario& scenario,
                       const CoverageObjective& objective,
                       const DistributedOptions& options = {});

AttackSet apply_attacker(Attacker attacker, const CoverageObjective& objective,
                         const Assignment& assignment, int alpha,
                         std::uint64_t cap = kDefaultEnumerationCap);

// One results-CSV row. Columns, in order:
// algo,seed,n,r_c,alpha,K,max_clique,rounds,msgs_total,evals_max_clique,
// parallel_time_s,coverage_pre,coverage_post
struct ResultRow {
  std::string algo;
  std::uint64_t seed = 0;
  int n = 0;
  double r_c = 0.0;
  int alpha = 0;
  int cliques = 0;
  int max_clique = 0;
  int rounds = 0;
  long long msgs_total = 0;
  std::uint64_t evals_max_clique = 0;
  double parallel_time_s = 0.0;
  double coverage_pre = 0.0;
  double coverage_post = 0.0;
  // Failed rows keep the identifying columns and leave the rest empty.
  bool ok = true;
  std::string error;
};

std::string results_csv_header();
std::string to_csv(const ResultRow& row);

struct RunOutcome {
  ResultRow row;
  DistributedResult plan;
  AttackSet attack;
};

// Plans on the scenario, attacks with the scenario's budget, and scores
// coverage before and after the attack.
RunOutcome run_once(const Scenario& scenario, Planner planner,
                    Attacker attacker, const DistributedOptions& options = {});

}  // namespace swarmguard

#endif  // SWARMGUARD_PLANNER_HPP_
