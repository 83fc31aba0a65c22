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

#include "swarmguard/distributed.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "swarmguard/errors.hpp"

namespace swarmguard {

long long CommStats::total_messages() const {
  return std::accumulate(messages_per_robot.begin(), messages_per_robot.end(), 0LL);
}

std::uint64_t CommStats::max_clique_evals() const {
  return evals_per_clique.empty()
             ? 0
             : *std::max_element(evals_per_clique.begin(), evals_per_clique.end());
}

std::uint64_t CommStats::total_evals() const {
  return std::accumulate(evals_per_clique.begin(), evals_per_clique.end(),
                         std::uint64_t{0});
}

int AlphaInference::total() const {
  return std::accumulate(alpha_per_clique.begin(), alpha_per_clique.end(), 0);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int resolve_jobs(int jobs) {
  if (jobs < 0) throw InvalidParameter("jobs must be >= 0");
  if (jobs == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
  return jobs;
}

// Runs task(order[0..n)) on up to `jobs` threads. The first exception thrown
// by any task is rethrown after all workers finish.
void parallel_for(int jobs, const std::vector<std::size_t>& order,
                  const std::function<void(std::size_t)>& task) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)), order.size());
  if (workers <= 1) {
    for (std::size_t k : order) task(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      try {
        task(order[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::size_t> resolve_order(const DistributedOptions& options, std::size_t k) {
  if (options.processing_order.empty()) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  auto sorted = options.processing_order;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == k;
  for (std::size_t i = 0; ok && i < k; ++i) ok = sorted[i] == i;
  if (!ok) throw InvalidParameter("processing_order must be a permutation of clique indices");
  return options.processing_order;
}

struct Setup {
  CommGraph graph;
  DcpResult dcp;
  double partition_time_s = 0.0;
  double partition_total_s = 0.0;
};

Setup partition_scenario(const Scenario& scenario, const CoverageObjective& objective) {
  if (objective.num_robots() != scenario.robots.size()) {
    throw InvalidParameter("objective and scenario disagree on the robot count");
  }
  Setup setup;
  setup.graph = build_graph(scenario.robot_positions(), scenario.comm_range);
  setup.dcp = dcp_partition(setup.graph);
  const auto& times = setup.dcp.robot_time_s;
  if (!times.empty()) setup.partition_time_s = *std::max_element(times.begin(), times.end());
  setup.partition_total_s = std::accumulate(times.begin(), times.end(), 0.0);
  return setup;
}

// Per-clique planning with timing and evaluation counts; fills the
// assignment and the time/eval fields of the stats.
void plan_cliques(DistributedResult& result, const DistributedOptions& options,
                  const Setup& setup,
                  const std::function<Assignment(std::size_t, EvalTally&)>& plan_one) {
  const std::size_t k = result.partition.size();
  const auto order = resolve_order(options, k);
  std::vector<Assignment> parts(k);
  result.stats.evals_per_clique.assign(k, 0);
  result.stats.clique_time_s.assign(k, 0.0);
  parallel_for(options.jobs, order, [&](std::size_t c) {
    EvalTally tally;
    const auto start = Clock::now();
    parts[c] = plan_one(c, tally);
    result.stats.clique_time_s[c] = seconds_since(start);
    result.stats.evals_per_clique[c] = tally.evaluations;
  });
  for (const auto& part : parts) result.assignment.merge(part);
  const auto& times = result.stats.clique_time_s;
  result.stats.partition_time_s = setup.partition_time_s;
  result.stats.partition_total_s = setup.partition_total_s;
  result.stats.parallel_time_s =
      setup.partition_time_s + (times.empty() ? 0.0 : *std::max_element(times.begin(), times.end()));
  result.stats.total_time_s =
      setup.partition_total_s + std::accumulate(times.begin(), times.end(), 0.0);
}

// Four rounds: three partition rounds plus one intra-clique exchange.
void count_messages(DistributedResult& result, const DcpResult& dcp) {
  result.stats.rounds = dcp.rounds + 1;
  result.stats.messages_per_robot = dcp.messages_per_robot;
  for (std::size_t i = 0; i < result.stats.messages_per_robot.size(); ++i) {
    const int clique = result.partition.clique_of[i];
    result.stats.messages_per_robot[i] +=
        static_cast<int>(result.partition.cliques[static_cast<std::size_t>(clique)].size()) - 1;
  }
}

std::vector<int> default_alphas(const CliquePartition& partition, int alpha) {
  std::vector<int> out;
  out.reserve(partition.size());
  for (const auto& clique : partition.cliques) {
    out.push_back(std::min(alpha, static_cast<int>(clique.size())));
  }
  return out;
}

void check_alphas(const CliquePartition& partition, const std::vector<int>& alphas,
                  int alpha) {
  if (alphas.size() != partition.size()) {
    throw InvalidParameter("alpha_per_clique needs " + std::to_string(partition.size()) +
                           " entries, got " + std::to_string(alphas.size()));
  }
  long long sum = 0;
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (alphas[k] < 0 || alphas[k] > static_cast<int>(partition.cliques[k].size())) {
      throw InvalidParameter("alpha_per_clique[" + std::to_string(k) +
                             "] must lie in [0, clique size]");
    }
    sum += alphas[k];
  }
  if (sum < alpha) {
    throw InvalidParameter("alpha_per_clique sums to " + std::to_string(sum) +
                           ", below the attack budget " + std::to_string(alpha));
  }
}

DistributedResult robust_per_clique(const Scenario& scenario,
                                    const CoverageObjective& objective,
                                    const DistributedOptions& options, const Setup& setup,
                                    const std::vector<int>& alphas) {
  DistributedResult result;
  result.graph = setup.graph;
  result.partition = setup.dcp.partition;
  count_messages(result, setup.dcp);
  (void)scenario;
  plan_cliques(result, options, setup,
               [&](std::size_t k, EvalTally& tally) {
                 return central_robust(result.partition.cliques[k], objective, alphas[k],
                                       tally);
               });
  return result;
}

bool use_exact_oracle(AttackOracle oracle, std::size_t set_size) {
  switch (oracle) {
    case AttackOracle::kWorstCase:
      return true;
    case AttackOracle::kGreedy:
      return false;
    case AttackOracle::kAuto:
      break;
  }
  return subsets_up_to(set_size, set_size) <= kAutoOracleSubsetLimit;
}

// residual[a] = value left after the oracle removes min(a, |S|) actions,
// for a in 0..|S|.
std::vector<double> residual_profile(const CoverageObjective& objective,
                                     const std::vector<ActionId>& set, bool exact,
                                     std::uint64_t cap, EvalTally& tally) {
  const std::size_t n = set.size();
  std::vector<double> best(n + 1, std::numeric_limits<double>::infinity());
  if (exact) {
    const std::uint64_t subsets = subsets_up_to(n, n);
    if (n >= 63 || subsets > cap) {
      throw CapacityError("exact attack oracle needs " + std::to_string(subsets) +
                              " subsets; use the greedy oracle",
                          cap);
    }
    for (std::uint64_t removed = 0; removed < (std::uint64_t{1} << n); ++removed) {
      CoverageObjective::Accumulator acc(objective);
      for (std::size_t i = 0; i < n; ++i) {
        if (!(removed >> i & 1U)) acc.add(set[i]);
      }
      ++tally.evaluations;
      const auto size = static_cast<std::size_t>(std::popcount(removed));
      best[size] = std::min(best[size], acc.value());
    }
    return best;
  }
  // Greedy removal is prefix-consistent, so one trajectory serves every budget.
  std::vector<bool> gone(n, false);
  auto value_without = [&]() {
    CoverageObjective::Accumulator acc(objective);
    for (std::size_t i = 0; i < n; ++i) {
      if (!gone[i]) acc.add(set[i]);
    }
    ++tally.evaluations;
    return acc.value();
  };
  best[0] = value_without();
  for (std::size_t step = 1; step <= n; ++step) {
    std::size_t pick = n;
    double pick_value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (gone[i]) continue;
      gone[i] = true;
      const double v = value_without();
      gone[i] = false;
      if (pick == n || v < pick_value - kValueTolerance) {
        pick = i;
        pick_value = v;
      }
    }
    gone[pick] = true;
    best[step] = pick_value;
  }
  return best;
}

}  // namespace

DistributedResult drm(const Scenario& scenario, const CoverageObjective& objective,
                      const DistributedOptions& options) {
  const auto setup = partition_scenario(scenario, objective);
  auto alphas = options.alpha_per_clique;
  if (alphas.empty()) {
    alphas = default_alphas(setup.dcp.partition, scenario.attack_budget);
  } else {
    check_alphas(setup.dcp.partition, alphas, scenario.attack_budget);
  }
  auto result = robust_per_clique(scenario, objective, options, setup, alphas);
  result.inference.alpha_per_clique = alphas;
  return result;
}

AlphaInference infer_alpha_known(const CliquePartition& partition, const CommGraph& graph,
                                 const CoverageObjective& objective, int alpha) {
  EvalTally tally;
  return infer_alpha_known(partition, graph, objective, alpha, tally);
}

AlphaInference infer_alpha_known(const CliquePartition& partition, const CommGraph& graph,
                                 const CoverageObjective& objective, int alpha,
                                 EvalTally& tally) {
  if (alpha < 0) throw InvalidParameter("attack budget must be >= 0");
  const std::size_t n = graph.size();
  std::vector<double> score(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    score[r] = best_single_action(objective, static_cast<RobotId>(r)).second;
    tally.evaluations += objective.actions_of(static_cast<RobotId>(r)).size();
  }
  // Strict ranking: higher score first, then smaller id.
  auto ahead = [&](RobotId a, RobotId b) {
    const double sa = score[static_cast<std::size_t>(a)];
    const double sb = score[static_cast<std::size_t>(b)];
    if (sa > sb + kValueTolerance) return true;
    if (sb > sa + kValueTolerance) return false;
    return a < b;
  };

  AlphaInference out;
  out.alpha_per_clique = default_alphas(partition, alpha);
  for (std::size_t k = 0; k < partition.size(); ++k) {
    auto ranked = partition.cliques[k];
    std::sort(ranked.begin(), ranked.end(), ahead);
    ranked.resize(static_cast<std::size_t>(out.alpha_per_clique[k]));
    std::sort(ranked.begin(), ranked.end());
    for (RobotId robot : ranked) {
      AlphaInference::Check check;
      check.clique = static_cast<int>(k);
      check.robot = robot;
      check.compared_with = k_hop_neighbors(graph, robot, 3);
      for (RobotId other : check.compared_with) {
        if (other != robot && ahead(other, robot)) ++check.rank;
      }
      check.demoted = check.rank >= alpha;
      if (check.demoted) --out.alpha_per_clique[k];
      out.checks.push_back(std::move(check));
    }
  }
  return out;
}

DistributedResult idrm(const Scenario& scenario, const CoverageObjective& objective,
                       const DistributedOptions& options) {
  const auto setup = partition_scenario(scenario, objective);
  const auto start = Clock::now();
  EvalTally tally;
  auto inference = infer_alpha_known(setup.dcp.partition, setup.graph, objective,
                                     scenario.attack_budget, tally);
  const double inference_time = seconds_since(start);
  auto result = robust_per_clique(scenario, objective, options, setup,
                                  inference.alpha_per_clique);
  // 3-hop flooding of best-single values: three more rounds, one message per
  // neighbor per round.
  result.stats.rounds += 3;
  for (std::size_t i = 0; i < setup.graph.size(); ++i) {
    result.stats.messages_per_robot[i] +=
        3 * static_cast<int>(setup.graph.degree(static_cast<RobotId>(i)));
  }
  result.stats.partition_time_s += inference_time;
  result.stats.partition_total_s += inference_time;
  result.stats.parallel_time_s += inference_time;
  result.stats.total_time_s += inference_time;
  result.inference = std::move(inference);
  return result;
}

UnknownAlphaResult infer_alpha_unknown(std::span<const RobotId> clique,
                                       const CoverageObjective& objective,
                                       AttackOracle oracle, std::uint64_t cap) {
  EvalTally tally;
  return infer_alpha_unknown(clique, objective, oracle, cap, tally);
}

UnknownAlphaResult infer_alpha_unknown(std::span<const RobotId> clique,
                                       const CoverageObjective& objective,
                                       AttackOracle oracle, std::uint64_t cap,
                                       EvalTally& tally) {
  const int size = static_cast<int>(clique.size());
  if (size == 0) throw InvalidParameter("clique must be non-empty");
  UnknownAlphaResult out;
  out.expected_values.assign(static_cast<std::size_t>(size) + 1, 0.0);
  for (int candidate = 0; candidate <= size; ++candidate) {
    const auto set = central_robust(clique, objective, candidate, tally).actions();
    const auto profile =
        residual_profile(objective, set, use_exact_oracle(oracle, set.size()), cap, tally);
    double sum = 0.0;
    for (int removed = 0; removed <= size; ++removed) {
      sum += profile[std::min(static_cast<std::size_t>(removed), set.size())];
    }
    out.expected_values[static_cast<std::size_t>(candidate)] = sum / size;
  }
  for (int candidate = 1; candidate <= size; ++candidate) {
    if (out.expected_values[static_cast<std::size_t>(candidate)] >
        out.expected_values[static_cast<std::size_t>(out.alpha)] + kValueTolerance) {
      out.alpha = candidate;
    }
  }
  return out;
}

DistributedResult drm_una(const Scenario& scenario, const CoverageObjective& objective,
                          const DistributedOptions& options) {
  const auto setup = partition_scenario(scenario, objective);
  DistributedResult result;
  result.graph = setup.graph;
  result.partition = setup.dcp.partition;
  count_messages(result, setup.dcp);
  const std::size_t k = result.partition.size();
  result.inference.alpha_per_clique.assign(k, 0);
  result.inference.expected_values.assign(k, {});
  plan_cliques(result, options, setup,
               [&](std::size_t c, EvalTally& tally) {
                 const auto& clique = result.partition.cliques[c];
                 auto inferred = infer_alpha_unknown(clique, objective, options.oracle,
                                                     options.enumeration_cap, tally);
                 result.inference.alpha_per_clique[c] = inferred.alpha;
                 result.inference.expected_values[c] = std::move(inferred.expected_values);
                 return central_robust(clique, objective, inferred.alpha, tally);
               });
  return result;
}

}  // namespace swarmguard
