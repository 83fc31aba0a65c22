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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "swarmguard/attacks.hpp"
#include "swarmguard/commgraph.hpp"
#include "swarmguard/distributed.hpp"
#include "swarmguard/episode_io.hpp"
#include "swarmguard/objective.hpp"
#include "swarmguard/planner.hpp"
#include "swarmguard/robust_core.hpp"
#include "swarmguard/tracking.hpp"
#include "swarmguard_cli/bounds.hpp"

using namespace swarmguard;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c, d);
  return buf;
}

std::vector<ActionId> kept_actions(const Assignment& assignment, const std::vector<ActionId>& removed) {
  std::vector<ActionId> out;
  for (ActionId a : assignment.actions()) {
    if (std::find(removed.begin(), removed.end(), a) == removed.end()) out.push_back(a);
  }
  return out;
}

// Post-attack value of `assignment` under the independent worst-case oracle.
int oracle_residual(const Scenario& s, const Assignment& assignment, int alpha) {
  return oracle::worst_attack(s, assignment.actions(), alpha).value;
}

bool same_assignment(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [robot, choice] : a.chosen) {
    auto it = b.chosen.find(robot);
    if (it == b.chosen.end() || it->second.action != choice.action) return false;
  }
  return true;
}

Verdict bound_certification() {
  const auto start = Clock::now();
  cli::BoundParams params;
  params.instances = 120;
  params.seed = 2026;
  int violations = 0, nontrivial = 0, split = 0;
  double worst_drm = 1e9, worst_myopic = 1e9;
  for (int i = 0; i < params.instances; ++i) {
    const auto s = cli::make_bound_instance(params.seed + static_cast<std::uint64_t>(i), params);
    const CoverageObjective f(s);
    const int alpha = s.attack_budget;
    const double nu = oracle::curvature(s);
    const double opt = oracle::optimum(s, alpha);
    auto ratio = [&](const Assignment& a) {
      const double v = oracle_residual(s, a, alpha);
      return opt > 0 ? v / opt : 1.0;
    };
    const auto distributed = drm(s, f);
    if (opt > 0 && alpha > 0) ++nontrivial;
    if (distributed.partition.size() > 1) ++split;
    const double r_drm = ratio(distributed.assignment);
    const double r_idrm = ratio(idrm(s, f).assignment);
    const double r_myopic = ratio(myopic(all_robots(f), f));
    const double half = (1.0 - nu) / 2.0;
    if (r_drm < half - 1e-12) ++violations;
    if (r_idrm < half - 1e-12) ++violations;
    if (r_myopic < (1.0 - nu) - 1e-12) ++violations;
    worst_drm = std::min(worst_drm, std::min(r_drm, r_idrm) - half);
    worst_myopic = std::min(worst_myopic, r_myopic - (1.0 - nu));
  }
  const double elapsed = seconds_since(start);
  Verdict v;
  v.pass = violations == 0 && elapsed < 60.0 && 4 * nontrivial >= params.instances;
  v.detail = std::to_string(params.instances) + " instances (" + std::to_string(nontrivial) +
             " with a positive optimum under attack, " + std::to_string(split) + " with several cliques), " +
             std::to_string(violations) + " violations, " +
             fmt("min slack distributed %.3f, myopic %.3f, %.2f s", worst_drm, worst_myopic, elapsed);
  return v;
}

Verdict message_accounting() {
  std::mt19937_64 rng(11);
  int bad = 0;
  int robots_checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = fixtures::uniform_int(rng, 2, 40);
    const double range = fixtures::uniform(rng, 10.0, 80.0);
    const auto s = fixtures::random_scenario(rng(), n, 60, 150.0, range, fixtures::uniform_int(rng, 0, n));
    const CoverageObjective f(s);
    const auto result = drm(s, f);
    const auto adj = oracle::adjacency(s.robot_positions(), s.comm_range);
    if (result.stats.rounds != 4) ++bad;
    for (int i = 0; i < n; ++i) {
      const int degree = static_cast<int>(std::count(adj[i].begin(), adj[i].end(), true));
      const int clique = static_cast<int>(result.partition.cliques[result.partition.clique_of[i]].size());
      if (result.stats.messages_per_robot[i] != 3 * degree + clique - 1) ++bad;
      ++robots_checked;
    }
  }
  return {bad == 0, "30 scenarios, " + std::to_string(robots_checked) + " robots, " +
                        std::to_string(bad) + " mismatches"};
}

Verdict partition_correctness() {
  std::mt19937_64 rng(5);
  int invalid = 0;
  std::string first_reason;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = fixtures::uniform_int(rng, 1, 60);
    std::vector<Point> pts(static_cast<std::size_t>(n));
    for (auto& p : pts) p = {fixtures::uniform(rng, 0, 100), fixtures::uniform(rng, 0, 100)};
    const double range = fixtures::uniform(rng, 1.0, 60.0);
    const auto graph = build_graph(pts, range);
    const auto part = dcp_partition(graph).partition;
    std::string why;
    if (!oracle::valid_partition(oracle::adjacency(pts, range), part.cliques, &why)) {
      if (first_reason.empty()) first_reason = why;
      ++invalid;
    }
  }
  const auto glued = dcp_partition(fixtures::glued_graph()).partition;
  const std::vector<std::vector<RobotId>> expected = {{0, 1}, {2, 3, 4, 5}};
  auto got = glued.cliques;
  for (auto& c : got) std::sort(c.begin(), c.end());
  std::sort(got.begin(), got.end());
  const bool glued_ok = got == expected;
  return {invalid == 0 && glued_ok, "200 graphs, " + std::to_string(invalid) + " invalid" +
                                       (first_reason.empty() ? "" : " (" + first_reason + ")") +
                                       ", triangle+4-clique fixture " + (glued_ok ? "exact" : "WRONG")};
}

Verdict degenerate_equivalences() {
  std::mt19937_64 rng(17);
  int checks = 0, failures = 0;
  std::string failed;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (failed.empty()) failed = what;
    }
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int n = fixtures::uniform_int(rng, 1, 25);
    const int alpha = fixtures::uniform_int(rng, 0, n);
    const auto base = fixtures::random_scenario(rng(), n, 150, 60.0, 20.0, alpha);
    const CoverageObjective f(base);
    const auto robots = all_robots(f);

    auto one = base;
    one.comm_range = 1e6;
    expect(same_assignment(drm(one, f).assignment, central_robust(robots, f, alpha)),
           "single-clique DRM vs central_robust");
    expect(same_assignment(myopic(robots, f), central_robust(robots, f, n)),
           "myopic vs central_robust(|R|)");

    auto zero = base;
    zero.attack_budget = 0;
    const auto d0 = drm(zero, f);
    Assignment per_clique;
    for (const auto& clique : d0.partition.cliques) per_clique.merge(central_greedy(clique, f));
    expect(same_assignment(d0.assignment, per_clique), "alpha=0 DRM vs per-clique greedy");
  }
  // Isolated groups: no edge leaves a clique.
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RobotSpec> robots;
    std::vector<Target> targets;
    const int groups = fixtures::uniform_int(rng, 1, 5);
    for (int g = 0; g < groups; ++g) {
      const int size = fixtures::uniform_int(rng, 1, 5);
      for (int i = 0; i < size; ++i) {
        robots.push_back({{1000.0 * g + fixtures::uniform(rng, 0, 3), fixtures::uniform(rng, 0, 3)}});
      }
      for (int t = 0; t < 15; ++t) {
        Target target;
        target.id = static_cast<TargetId>(targets.size());
        target.position = {1000.0 * g + fixtures::uniform(rng, -12, 15), fixtures::uniform(rng, -12, 15)};
        targets.push_back(target);
      }
    }
    const int alpha = fixtures::uniform_int(rng, 0, static_cast<int>(robots.size()));
    const auto s = assemble_scenario(robots, targets, 5.0, alpha, Geometry{}, 0);
    const CoverageObjective f(s);
    const auto d = drm(s, f);
    bool isolated = true;
    for (std::size_t i = 0; i < s.robots.size(); ++i) {
      for (RobotId j : d.graph.neighbors(static_cast<RobotId>(i))) {
        isolated = isolated && d.partition.clique_of[i] == d.partition.clique_of[j];
      }
    }
    expect(isolated, "isolated fixture has an inter-clique edge");
    expect(same_assignment(d.assignment, idrm(s, f).assignment), "IDRM vs DRM on isolated cliques");
  }
  return {failures == 0, std::to_string(checks) + " equivalences, " + std::to_string(failures) +
                             " differ" + (failed.empty() ? "" : " (first: " + failed + ")")};
}

Verdict speedup() {
  double central_time = 0.0, drm_parallel = 0.0, drm_total = 0.0;
  bool evals_ok = true;
  int seeds = 10;
  for (int seed = 0; seed < seeds; ++seed) {
    const auto s = fixtures::random_scenario(static_cast<std::uint64_t>(seed), 60, 100, 200.0, 30.0, 30);
    const CoverageObjective f(s);
    const auto robots = all_robots(f);
    // Best of several repetitions to suppress scheduler noise.
    double best_central = 1e9, best_drm = 1e9, best_total = 1e9;
    std::uint64_t central_evals = 0;
    DistributedResult d;
    for (int rep = 0; rep < 5; ++rep) {
      EvalTally tally;
      const auto start = Clock::now();
      const auto a = central_robust(robots, f, s.attack_budget, tally);
      best_central = std::min(best_central, seconds_since(start));
      central_evals = tally.evaluations;
      (void)a;
      d = drm(s, f);
      best_drm = std::min(best_drm, d.stats.parallel_time_s);
      best_total = std::min(best_total, d.stats.total_time_s);
    }
    central_time += best_central;
    drm_parallel += best_drm;
    drm_total += best_total;
    const auto k = static_cast<double>(d.partition.size());
    if (static_cast<double>(d.stats.max_clique_evals()) > static_cast<double>(central_evals) / k) evals_ok = false;
  }

  // Symmetric clusters: K equal, far-apart groups of m robots, one attack.
  double worst_scaling = 0.0;
  for (int k : {2, 3, 4, 6}) {
    const int m = 8;
    std::vector<RobotSpec> robots;
    std::vector<Target> targets;
    std::mt19937_64 rng(static_cast<std::uint64_t>(k));
    for (int g = 0; g < k; ++g) {
      for (int i = 0; i < m; ++i) robots.push_back({{500.0 * g + 1.5 * i, 0.0}});
      for (int t = 0; t < 30; ++t) {
        Target target;
        target.id = static_cast<TargetId>(targets.size());
        target.position = {500.0 * g + fixtures::uniform(rng, -10, 20), fixtures::uniform(rng, -10, 10)};
        targets.push_back(target);
      }
    }
    const auto s = assemble_scenario(robots, targets, 15.0, 1, Geometry{}, 0);
    const CoverageObjective f(s);
    EvalTally tally;
    central_robust(all_robots(f), f, 1, tally);
    const auto d = drm(s, f);
    const double ratio = static_cast<double>(tally.evaluations) / static_cast<double>(d.stats.max_clique_evals());
    const double scaling = ratio / (k * k);
    worst_scaling = std::max(worst_scaling, std::max(scaling, 1.0 / scaling));
  }
  const double speedup = central_time / drm_parallel;
  Verdict v;
  v.pass = speedup >= 5.0 && evals_ok && worst_scaling <= 2.0;
  v.detail = fmt("N=60 r_c=30: central %.3g s, DRM parallel %.3g s (sequential %.3g s), speed-up %.1fx",
                 central_time / seeds, drm_parallel / seeds, drm_total / seeds, speedup) +
             fmt("; K^2 scaling off by at most %.2fx", worst_scaling) +
             (evals_ok ? "; max clique evals <= central/K" : "; max clique evals EXCEED central/K");
  return v;
}

Verdict coverage_ordering() {
  const int seeds = 30;
  double robust = 0, distributed = 0, greedy = 0, improved = 0;
  int alpha_violations = 0;
  for (int seed = 0; seed < seeds; ++seed) {
    const auto s = fixtures::random_scenario(static_cast<std::uint64_t>(seed), 20, 100, 200.0, 120.0, 6);
    auto post = [&](Planner planner) {
      return run_once(s, planner, Attacker::kWorstCase);
    };
    robust += post(Planner::kCentralRobust).row.coverage_post;
    const auto d = post(Planner::kDrm);
    const auto i = post(Planner::kIdrm);
    distributed += d.row.coverage_post;
    improved += i.row.coverage_post;
    greedy += post(Planner::kCentralGreedy).row.coverage_post;
    const int drm_alpha = d.plan.inference.total();
    const int idrm_alpha = i.plan.inference.total();
    if (idrm_alpha > drm_alpha) ++alpha_violations;
  }
  robust /= seeds;
  distributed /= seeds;
  greedy /= seeds;
  improved /= seeds;
  Verdict v;
  v.pass = robust >= 0.9 * distributed && distributed >= greedy && improved >= distributed &&
           alpha_violations == 0;
  v.detail = fmt("mean post-attack coverage: central-robust %.3f, DRM %.3f, central-greedy %.3f, IDRM %.3f",
                 robust, distributed, greedy, improved) +
             "; inferred-count violations " + std::to_string(alpha_violations) + "/30";
  return v;
}

Verdict oracle_exactness() {
  std::mt19937_64 rng(23);
  int mismatches = 0, greedy_below = 0, alpha_one = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = fixtures::small_scenario(rng, 8, 5, 30, 30.0, 3);
    const CoverageObjective f(s);
    const auto chosen = central_greedy(all_robots(f), f).actions();
    const int alpha = fixtures::uniform_int(rng, 0, 3);
    const auto ours = worst_case_attack(f, chosen, alpha);
    const auto ref = oracle::worst_attack(s, chosen, alpha);
    const bool value_ok = ours.residual_value == ref.value;
    const bool set_ok = std::find(ref.minimizers.begin(), ref.minimizers.end(), ours.removed) != ref.minimizers.end();
    if (!value_ok || !set_ok) ++mismatches;
    if (greedy_attack(f, chosen, alpha).residual_value < ours.residual_value) ++greedy_below;
    if (greedy_attack(f, chosen, 1).residual_value != oracle::worst_attack(s, chosen, 1).value) ++alpha_one;
  }
  return {mismatches + greedy_below + alpha_one == 0,
          "100 cases: " + std::to_string(mismatches) + " worst-case mismatches, " +
              std::to_string(greedy_below) + " greedy below worst-case, " + std::to_string(alpha_one) +
              " single-removal mismatches"};
}

Scenario stay_only(const std::vector<Point>& robots, const std::vector<Point>& targets) {
  std::vector<RobotSpec> specs;
  for (auto p : robots) specs.push_back({p, {ActionKind::kStay}});
  std::vector<Target> ts(targets.size());
  for (std::size_t j = 0; j < ts.size(); ++j) {
    ts[j].id = static_cast<TargetId>(j);
    ts[j].position = targets[j];
  }
  return assemble_scenario(specs, ts, 5.0, 0, Geometry{}, 0);
}

Verdict objective_properties() {
  std::mt19937_64 rng(31);
  int monotone = 0, submodular = 0, brute = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = fixtures::random_scenario(rng(), 8, 40, 30.0, 10.0, 0);
    const CoverageObjective f(s);
    // Nested feasible sets and an action x of a robot outside both.
    const RobotId free_robot = fixtures::uniform_int(rng, 0, static_cast<int>(s.robots.size()) - 1);
    std::vector<ActionId> big, small;
    for (const auto& robot : s.robots) {
      const int roll = fixtures::uniform_int(rng, 0, 2);
      if (robot.id == free_robot || roll == 0) continue;
      const auto& ids = robot.action_ids;
      const ActionId a = ids[static_cast<std::size_t>(fixtures::uniform_int(rng, 0, static_cast<int>(ids.size()) - 1))];
      big.push_back(a);
      if (roll == 2) small.push_back(a);
    }
    const auto& own = s.robots[static_cast<std::size_t>(free_robot)].action_ids;
    const ActionId x = own[static_cast<std::size_t>(fixtures::uniform_int(rng, 0, static_cast<int>(own.size()) - 1))];
    if (f.evaluate(small) > f.evaluate(big) + kValueTolerance) ++monotone;
    if (f.marginal_gain(small, x) + kValueTolerance < f.marginal_gain(big, x)) ++submodular;
    if (f.evaluate(big) != oracle::covered(s, big)) ++brute;
  }
  int curvature_mismatch = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = fixtures::small_scenario(rng, 4, 3, 10, 20.0);
    if (std::abs(curvature_exact(CoverageObjective(s)).value - oracle::curvature(s)) > 1e-12) ++curvature_mismatch;
  }
  const double additive = curvature_exact(CoverageObjective(stay_only({{0, 0}, {50, 50}}, {{0, 0}, {50, 50}, {50.5, 50}}))).value;
  const double duplicate = curvature_exact(CoverageObjective(stay_only({{0, 0}, {0, 0}}, {{0.5, 0.5}}))).value;
  const bool ok = monotone + submodular + brute + curvature_mismatch == 0 && additive == 0.0 && duplicate == 1.0;
  return {ok, "1000 triples: " + std::to_string(monotone) + " monotonicity, " + std::to_string(submodular) +
                  " submodularity, " + std::to_string(brute) + " brute-force violations; curvature " +
                  std::to_string(curvature_mismatch) + "/60 mismatches, additive " + fmt("%g", additive) +
                  ", duplicate " + fmt("%g", duplicate)};
}

Verdict episode_engine() {
  auto s = fixtures::random_scenario(4, 10, 50, 40.0, 5.0, 4);
  s.geometry = Geometry::from_track(6.0, 3.0);
  s = relocate_robots(s, s.robot_positions());
  EpisodeConfig config;
  config.rounds = 50;
  config.seed = 99;
  config.target_speed = 0.3;
  const auto first = run_episode(s, config);
  const auto second = run_episode(s, config);
  const bool reproducible = episode_to_jsonl(first) == episode_to_jsonl(second);
  double min_eig = 1e300, max_asym = 0.0;
  int replay_mismatch = 0;
  for (const auto& rec : first.records) {
    min_eig = std::min(min_eig, rec.min_covariance_eigenvalue);
    max_asym = std::max(max_asym, rec.max_covariance_asymmetry);
    const auto world = relocate_robots(s, rec.robot_positions);
    if (oracle::covered(world, kept_actions(rec.assignment, rec.removed), rec.target_positions) != rec.covered) {
      ++replay_mismatch;
    }
  }
  const bool psd = min_eig >= -kPsdTolerance && max_asym <= kPsdTolerance;
  return {reproducible && psd && replay_mismatch == 0 && first.records.size() == 50,
          std::string("50 rounds, ") + (reproducible ? "bit-identical rerun" : "rerun DIFFERS") +
              fmt(", min covariance eigenvalue %.3g, max asymmetry %.3g", min_eig, max_asym) + ", " +
              std::to_string(replay_mismatch) + " replay mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"approximation bounds", bound_certification},
      {"message accounting", message_accounting},
      {"clique partition", partition_correctness},
      {"degenerate equivalences", degenerate_equivalences},
      {"distributed speed-up", speedup},
      {"coverage ordering", coverage_ordering},
      {"attack oracle exactness", oracle_exactness},
      {"objective properties", objective_properties},
      {"episode engine", episode_engine},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("criterion %zu (%s): %s - %s\n", i + 1, criteria[i].first, v.pass ? "PASS" : "FAIL",
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
