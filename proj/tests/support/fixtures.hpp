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

#ifndef SWARMGUARD_TESTS_FIXTURES_HPP_
#define SWARMGUARD_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "swarmguard/commgraph.hpp"
#include "swarmguard/scenario.hpp"
#include "swarmguard/scenario_io.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(SWARMGUARD_TEST_DATA_DIR) + "/" + name;
}

// Two robots, four targets; robot 1's backward sweep covers everything.
inline swarmguard::Scenario two_robot() { return swarmguard::load_scenario(data_path("two_robot.json")); }

// Fifteen robots whose unit-disk graph partitions into five cliques.
inline swarmguard::Scenario fifteen_robot() { return swarmguard::load_scenario(data_path("fifteen_robot.json")); }

// Six robots: a triangle {0,1,2} glued at robot 2 to the 4-clique {2,3,4,5}.
inline swarmguard::CommGraph glued_graph() {
  const std::vector<std::pair<swarmguard::RobotId, swarmguard::RobotId>> edges = {
      {0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  return swarmguard::CommGraph::from_edges(6, edges);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Small random instance with random primitive subsets per robot.
inline swarmguard::Scenario small_scenario(std::mt19937_64& rng, int max_robots, int max_actions,
                                           int max_targets, double side = 24.0,
                                           int max_alpha = 2) {
  using namespace swarmguard;
  const int n = uniform_int(rng, 1, max_robots);
  std::vector<RobotSpec> robots(static_cast<std::size_t>(n));
  for (auto& r : robots) {
    r.position = {uniform(rng, 0, side), uniform(rng, 0, side)};
    std::vector<ActionKind> kinds(kAllActionKinds.begin(), kAllActionKinds.end());
    std::shuffle(kinds.begin(), kinds.end(), rng);
    kinds.resize(static_cast<std::size_t>(uniform_int(rng, 1, max_actions)));
    r.kinds = kinds;
  }
  std::vector<Target> targets(static_cast<std::size_t>(uniform_int(rng, 0, max_targets)));
  for (std::size_t t = 0; t < targets.size(); ++t) {
    targets[t].id = static_cast<TargetId>(t);
    targets[t].position = {uniform(rng, 0, side), uniform(rng, 0, side)};
  }
  const int alpha = uniform_int(rng, 0, std::min(max_alpha, n));
  return assemble_scenario(robots, std::move(targets), uniform(rng, 4.0, 30.0), alpha,
                           Geometry{}, 0);
}

// Random scenario with all five primitives per robot.
inline swarmguard::Scenario random_scenario(std::uint64_t seed, int robots, int targets,
                                            double side, double range, int alpha) {
  swarmguard::GenerateParams p;
  p.seed = seed;
  p.n_robots = robots;
  p.n_targets = targets;
  p.area = {0.0, side, 0.0, side};
  p.comm_range = range;
  p.attack_budget = alpha;
  return swarmguard::generate_scenario(p);
}

}  // namespace fixtures

#endif  // SWARMGUARD_TESTS_FIXTURES_HPP_
