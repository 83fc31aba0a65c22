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

#include "swarmguard_cli/bounds.hpp"

#include <random>
#include <sstream>

#include "swarmguard/attacks.hpp"
#include "swarmguard/distributed.hpp"
#include "swarmguard/errors.hpp"
#include "swarmguard_cli/sweep.hpp"

namespace swarmguard::cli {

namespace {

constexpr double kSide = 8.0;

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const double u = unit_uniform(rng());
  return lo + std::min(hi - lo, static_cast<int>(u * (hi - lo + 1)));
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + unit_uniform(rng()) * (hi - lo);
}

BoundCheck judge(const CoverageObjective& objective, const Assignment& assignment, int alpha,
                 double optimum, double bound, std::uint64_t cap) {
  BoundCheck check;
  check.value = worst_case_attack(objective, assignment, alpha, cap).residual_value;
  check.ratio = optimum > 0.0 ? check.value / optimum : 1.0;
  check.bound = bound;
  check.holds = check.ratio >= bound - kValueTolerance;
  return check;
}

}  // namespace

Scenario make_bound_instance(std::uint64_t seed, const BoundParams& params) {
  if (params.max_robots < 1 || params.max_actions < 1 || params.max_actions > 5 ||
      params.max_alpha < 0 || params.max_targets < 1) {
    throw InvalidParameter("bound instance limits out of range");
  }
  std::mt19937_64 rng(seed);
  const int n = uniform_int(rng, std::min(2, params.max_robots), params.max_robots);
  std::vector<RobotSpec> robots(static_cast<std::size_t>(n));
  for (auto& robot : robots) {
    robot.position = {uniform_real(rng, 0.0, kSide), uniform_real(rng, 0.0, kSide)};
    std::vector<ActionKind> kinds(kAllActionKinds.begin(), kAllActionKinds.end());
    for (int i = static_cast<int>(kinds.size()) - 1; i > 0; --i) {
      std::swap(kinds[static_cast<std::size_t>(i)],
                kinds[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
    }
    kinds.resize(static_cast<std::size_t>(uniform_int(rng, 1, params.max_actions)));
    robot.kinds = kinds;
  }
  std::vector<Target> targets(
      static_cast<std::size_t>(uniform_int(rng, (params.max_targets + 1) / 2, params.max_targets)));
  for (std::size_t t = 0; t < targets.size(); ++t) {
    targets[t].id = static_cast<TargetId>(t);
    targets[t].position = {uniform_real(rng, 0.0, kSide), uniform_real(rng, 0.0, kSide)};
  }
  const double comm_range = uniform_real(rng, 2.0, 12.0);
  const int alpha = uniform_int(rng, 0, std::min(params.max_alpha, n - 1));
  return assemble_scenario(robots, std::move(targets), comm_range, alpha, Geometry{}, seed);
}

BoundReport check_bounds(const Scenario& scenario, std::uint64_t cap) {
  const CoverageObjective objective(scenario);
  const int alpha = scenario.attack_budget;
  BoundReport report;
  report.seed = scenario.seed;
  report.robots = static_cast<int>(scenario.robots.size());
  report.actions = static_cast<int>(scenario.actions.size());
  report.alpha = alpha;
  report.curvature = curvature_exact(objective, cap).value;
  report.optimum = optimal_value(objective, alpha, cap).value;
  const double half = (1.0 - report.curvature) / 2.0;
  report.drm = judge(objective, drm(scenario, objective).assignment, alpha, report.optimum,
                     half, cap);
  report.idrm = judge(objective, idrm(scenario, objective).assignment, alpha, report.optimum,
                      half, cap);
  report.myopic = judge(objective, myopic(all_robots(objective), objective), alpha,
                        report.optimum, 1.0 - report.curvature, cap);
  return report;
}

std::vector<BoundReport> verify_bounds(const BoundParams& params) {
  if (params.instances < 0) throw InvalidParameter("instance count must be >= 0");
  std::mt19937_64 seeds(params.seed);
  std::vector<BoundReport> out;
  out.reserve(static_cast<std::size_t>(params.instances));
  for (int i = 0; i < params.instances; ++i) {
    const auto scenario = make_bound_instance(seeds(), params);
    auto report = check_bounds(scenario, params.enumeration_cap);
    report.index = i;
    out.push_back(report);
  }
  return out;
}

std::string bound_report_header() {
  return "instance,seed,robots,actions,alpha,curvature,optimum,drm_ratio,drm_bound,"
         "idrm_ratio,idrm_bound,myopic_ratio,myopic_bound,holds";
}

std::string to_csv(const BoundReport& r) {
  std::ostringstream out;
  out << r.index << ',' << r.seed << ',' << r.robots << ',' << r.actions << ',' << r.alpha
      << ',' << format_number(r.curvature) << ',' << format_number(r.optimum) << ','
      << format_number(r.drm.ratio) << ',' << format_number(r.drm.bound) << ','
      << format_number(r.idrm.ratio) << ',' << format_number(r.idrm.bound) << ','
      << format_number(r.myopic.ratio) << ',' << format_number(r.myopic.bound) << ','
      << (r.holds() ? "yes" : "no");
  return out.str();
}

}  // namespace swarmguard::cli
