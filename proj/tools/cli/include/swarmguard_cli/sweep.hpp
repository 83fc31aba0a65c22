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

#ifndef SWARMGUARD_CLI_SWEEP_HPP_
#define SWARMGUARD_CLI_SWEEP_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swarmguard/planner.hpp"
#include "swarmguard/scenario.hpp"

namespace swarmguard::cli {

// Attack budget as a function of team size: a fixed count or floor(p*N/q).
struct AlphaRule {
  bool fixed = true;
  int value = 0;
  int numerator = 0;
  int denominator = 1;

  int apply(int n_robots) const;
  std::string label() const;
  friend bool operator==(const AlphaRule&, const AlphaRule&) = default;
};

// Accepts "N/4", "N/2", "3N/4", "pN/q" or a non-negative integer.
AlphaRule parse_alpha_rule(std::string_view text);

struct SweepConfig {
  std::vector<std::uint64_t> seeds;
  std::vector<int> n_robots;
  std::vector<double> comm_ranges;
  std::vector<AlphaRule> alpha_rules;
  std::vector<Planner> planners;
  Attacker attacker = Attacker::kGreedy;
  int n_targets = 100;
  Area area;
  Geometry geometry;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::string output;
};

// Throws ParseError on malformed documents and InvalidParameter when the
// config is unusable (empty lists, alpha outside [0, N]).
SweepConfig sweep_config_from_json(const std::string& text);
void validate_sweep(const SweepConfig& config);

// Rows ordered by seed, robots, range, alpha rule, planner regardless of
// `jobs`. Capacity failures become rows with ok = false.
std::vector<ResultRow> run_sweep(const SweepConfig& config, int jobs);

struct SummaryRow {
  std::string algo;
  int n = 0;
  double r_c = 0.0;
  int alpha = 0;
  int runs = 0;
  int failed = 0;
  double mean_coverage_pre = 0.0;
  double mean_coverage_post = 0.0;
  double mean_parallel_time_s = 0.0;
  double mean_msgs_total = 0.0;
  double mean_evals_max_clique = 0.0;
};

// Per-setting means over successful rows, in first-appearance order.
std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);
std::string summary_csv(const std::vector<SummaryRow>& rows);

std::string format_number(double value);

}  // namespace swarmguard::cli

#endif  // SWARMGUARD_CLI_SWEEP_HPP_
