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

#include "swarmguard/planner.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <limits>
#include <sstream>
#include <utility>

#include "swarmguard/errors.hpp"

namespace swarmguard {

namespace {

constexpr std::array<std::pair<Planner, std::string_view>, 6> kPlannerNames{{
    {Planner::kCentralGreedy, "central-greedy"},
    {Planner::kCentralRobust, "central-robust"},
    {Planner::kDrm, "drm"},
    {Planner::kIdrm, "idrm"},
    {Planner::kDrmUna, "drm-una"},
    {Planner::kMyopic, "myopic"},
}};

constexpr std::array<std::pair<Attacker, std::string_view>, 3> kAttackerNames{{
    {Attacker::kWorstCase, "worst-case"},
    {Attacker::kGreedy, "greedy"},
    {Attacker::kNone, "none"},
}};

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), res.ptr};
}

// Centralized planners run on the whole team as one logical clique with no
// communication accounting.
DistributedResult centralized(Planner planner, const Scenario& scenario,
                              const CoverageObjective& objective) {
  DistributedResult result;
  const auto robots = all_robots(objective);
  result.graph = build_graph(scenario.robot_positions(), scenario.comm_range);
  result.partition.cliques = {robots};
  result.partition.clique_of.assign(robots.size(), 0);
  EvalTally tally;
  const auto start = std::chrono::steady_clock::now();
  switch (planner) {
    case Planner::kCentralGreedy:
      result.assignment = central_greedy(robots, objective, tally);
      break;
    case Planner::kCentralRobust:
      result.assignment = central_robust(robots, objective, scenario.attack_budget, tally);
      break;
    case Planner::kMyopic:
      result.assignment = myopic(robots, objective, tally);
      break;
    default:
      throw InvalidParameter("not a centralized planner");
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.stats.rounds = 0;
  result.stats.messages_per_robot.assign(robots.size(), 0);
  result.stats.evals_per_clique = {tally.evaluations};
  result.stats.clique_time_s = {elapsed};
  result.stats.parallel_time_s = elapsed;
  result.stats.total_time_s = elapsed;
  if (planner == Planner::kCentralRobust) {
    result.inference.alpha_per_clique = {
        std::min(scenario.attack_budget, static_cast<int>(robots.size()))};
  }
  return result;
}

}  // namespace

std::string_view to_string(Planner planner) {
  for (const auto& [value, name] : kPlannerNames) {
    if (value == planner) return name;
  }
  return "unknown";
}

std::string_view to_string(Attacker attacker) {
  for (const auto& [value, name] : kAttackerNames) {
    if (value == attacker) return name;
  }
  return "unknown";
}

std::optional<Planner> parse_planner(std::string_view name) {
  for (const auto& [value, text] : kPlannerNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

std::optional<Attacker> parse_attacker(std::string_view name) {
  for (const auto& [value, text] : kAttackerNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

bool is_distributed(Planner planner) {
  return planner == Planner::kDrm || planner == Planner::kIdrm || planner == Planner::kDrmUna;
}

DistributedResult plan(Planner planner, const Scenario& scenario,
                       const CoverageObjective& objective,
                       const DistributedOptions& options) {
  switch (planner) {
    case Planner::kDrm:
      return drm(scenario, objective, options);
    case Planner::kIdrm:
      return idrm(scenario, objective, options);
    case Planner::kDrmUna:
      return drm_una(scenario, objective, options);
    default:
      return centralized(planner, scenario, objective);
  }
}

AttackSet apply_attacker(Attacker attacker, const CoverageObjective& objective,
                         const Assignment& assignment, int alpha, std::uint64_t cap) {
  switch (attacker) {
    case Attacker::kWorstCase:
      return worst_case_attack(objective, assignment, alpha, cap);
    case Attacker::kGreedy:
      return greedy_attack(objective, assignment, alpha);
    case Attacker::kNone:
      break;
  }
  const auto actions = assignment.actions();
  return {{}, objective.evaluate(actions)};
}

std::string results_csv_header() {
  return "algo,seed,n,r_c,alpha,K,max_clique,rounds,msgs_total,evals_max_clique,"
         "parallel_time_s,coverage_pre,coverage_post";
}

std::string to_csv(const ResultRow& row) {
  std::ostringstream out;
  out << row.algo << ',' << row.seed << ',' << row.n << ',' << format_double(row.r_c) << ','
      << row.alpha << ',';
  if (!row.ok) {
    out << ",,,,,,,";
    return out.str();
  }
  out << row.cliques << ',' << row.max_clique << ',' << row.rounds << ',' << row.msgs_total
      << ',' << row.evals_max_clique << ',' << format_double(row.parallel_time_s) << ','
      << format_double(row.coverage_pre) << ',' << format_double(row.coverage_post);
  return out.str();
}

RunOutcome run_once(const Scenario& scenario, Planner planner, Attacker attacker,
                    const DistributedOptions& options) {
  const CoverageObjective objective(scenario);
  RunOutcome out;
  out.plan = plan(planner, scenario, objective, options);
  out.attack = apply_attacker(attacker, objective, out.plan.assignment,
                              scenario.attack_budget, options.enumeration_cap);
  auto& row = out.row;
  row.algo = std::string(to_string(planner));
  row.seed = scenario.seed;
  row.n = static_cast<int>(scenario.robots.size());
  row.r_c = scenario.comm_range;
  row.alpha = scenario.attack_budget;
  row.cliques = static_cast<int>(out.plan.partition.size());
  row.max_clique = static_cast<int>(out.plan.partition.max_clique_size());
  row.rounds = out.plan.stats.rounds;
  row.msgs_total = out.plan.stats.total_messages();
  row.evals_max_clique = out.plan.stats.max_clique_evals();
  row.parallel_time_s = out.plan.stats.parallel_time_s;
  row.coverage_pre = objective.evaluate(out.plan.assignment.actions());
  row.coverage_post = out.attack.residual_value;
  return out;
}

}  // namespace swarmguard
