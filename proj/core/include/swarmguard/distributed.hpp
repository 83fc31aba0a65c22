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

// Distributed robust maximization over a clique partition of the
// communication graph, with communication and computation bookkeeping.
//
// Each clique is planned independently from read-only inputs, so cliques
// run on a small worker pool and the result does not depend on the order
// in which cliques are processed.

#ifndef SWARMGUARD_DISTRIBUTED_HPP_
#define SWARMGUARD_DISTRIBUTED_HPP_

#include <cstdint>
#include <vector>

#include "swarmguard/attacks.hpp"
#include "swarmguard/commgraph.hpp"
#include "swarmguard/objective.hpp"
#include "swarmguard/robust_core.hpp"
#include "swarmguard/scenario.hpp"

namespace swarmguard {

struct CommStats {
  int rounds = 0;
  std::vector<int> messages_per_robot;
  std::vector<std::uint64_t> evals_per_clique;
  std::vector<double> clique_time_s;
  // Slowest robot's local partition computation (robots run concurrently).
  double partition_time_s = 0.0;
  // Sum of all robots' local partition computation.
  double partition_total_s = 0.0;
  // partition_time_s + max clique time.
  double parallel_time_s = 0.0;
  // partition_total_s + sum of clique times.
  double total_time_s = 0.0;

  long long total_messages() const;
  std::uint64_t max_clique_evals() const;
  std::uint64_t total_evals() const;
};

// Per-clique attack-count conjecture and how it was reached.
struct AlphaInference {
  std::vector<int> alpha_per_clique;

  // Known-budget inference: one entry per selected robot.
  struct Check {
    int clique = 0;
    RobotId robot = 0;
    // Rank of `robot` (0-based) among itself and its 3-hop neighbors.
    int rank = 0;
    std::vector<RobotId> compared_with;
    bool demoted = false;
  };
  std::vector<Check> checks;

  // Unknown-budget inference: averaged post-attack value per candidate
  // count, indexed [clique][candidate].
  std::vector<std::vector<double>> expected_values;

  int total() const;
};

enum class AttackOracle { kWorstCase, kGreedy, kAuto };

// Largest exact enumeration the automatic oracle accepts per clique.
inline constexpr std::uint64_t kAutoOracleSubsetLimit = 100'000;

struct DistributedOptions {
  // Worker threads for per-clique planning; 0 means hardware concurrency.
  int jobs = 1;
  // Optional per-clique attack counts for drm. Must have one entry per
  // clique, each in [0, |C_k|], summing to at least the attack budget.
  std::vector<int> alpha_per_clique;
  // Optional clique processing order (a permutation of clique indices).
  std::vector<std::size_t> processing_order;
  AttackOracle oracle = AttackOracle::kAuto;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct DistributedResult {
  Assignment assignment;
  CommGraph graph;
  CliquePartition partition;
  CommStats stats;
  AlphaInference inference;
};

// Known-budget distributed robust maximization. Each clique runs
// central_robust with alpha_k = min(alpha, |C_k|) unless overridden. Every
// robot sends 3|N_i| partition messages plus |C_k| - 1 intra-clique
// messages over four rounds.
DistributedResult drm(const Scenario& scenario,
                      const CoverageObjective& objective,
                      const DistributedOptions& options = {});

// Demotes selected bait robots that are not among the top `alpha` robots
// of their 3-hop neighborhood (the robot itself included), ranked by best
// single-action value with smallest id first on ties.
AlphaInference infer_alpha_known(const CliquePartition& partition,
                                 const CommGraph& graph,
                                 const CoverageObjective& objective, int alpha);
AlphaInference infer_alpha_known(const CliquePartition& partition,
                                 const CommGraph& graph,
                                 const CoverageObjective& objective, int alpha,
                                 EvalTally& tally);

// drm with infer_alpha_known's counts. Sharing best values with 3-hop
// neighbors adds three flooding rounds and 3|N_i| messages per robot.
DistributedResult idrm(const Scenario& scenario,
                       const CoverageObjective& objective,
                       const DistributedOptions& options = {});

struct UnknownAlphaResult {
  int alpha = 0;
  std::vector<double> expected_values;  // indexed by candidate count
};

// Picks the clique's attack count without a known budget: for each
// candidate a in 0..|C|, plans S_a = central_robust(C, a) and scores
// (1/|C|) * sum over a' in 0..|C| of f(S_a - A*_{a'}(S_a)). Returns the
// best-scoring candidate, smallest on ties. The exact oracle throws
// CapacityError on cliques too large to enumerate.
UnknownAlphaResult infer_alpha_unknown(std::span<const RobotId> clique,
                                       const CoverageObjective& objective,
                                       AttackOracle oracle,
                                       std::uint64_t cap = kDefaultEnumerationCap);
UnknownAlphaResult infer_alpha_unknown(std::span<const RobotId> clique,
                                       const CoverageObjective& objective,
                                       AttackOracle oracle, std::uint64_t cap,
                                       EvalTally& tally);

// Distributed robust maximization when the attack budget is unknown
// (scenario.attack_budget is ignored).
DistributedResult drm_una(const Scenario& scenario,
                          const CoverageObjective& objective,
                          const DistributedOptions& options = {});

}  // namespace swarmguard

#endif  // SWARMGUARD_DISTRIBUTED_HPP_
