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

#ifndef SWARMGUARD_COMMGRAPH_HPP_
#define SWARMGUARD_COMMGRAPH_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swarmguard/scenario.hpp"

namespace swarmguard {

// Undirected communication graph over robots 0..n-1. Neighbor lists are
// sorted and never contain the robot itself.
class CommGraph {
 public:
  CommGraph() = default;
  explicit CommGraph(std::size_t n) : neighbors_(n) {}

  static CommGraph from_edges(std::size_t n,
                              std::span<const std::pair<RobotId, RobotId>> edges);

  std::size_t size() const { return neighbors_.size(); }
  const std::vector<RobotId>& neighbors(RobotId robot) const;
  std::size_t degree(RobotId robot) const { return neighbors(robot).size(); }
  bool adjacent(RobotId a, RobotId b) const;
  std::size_t num_edges() const;

  friend bool operator==(const CommGraph&, const CommGraph&) = default;

 private:
  std::vector<std::vector<RobotId>> neighbors_;
};

// (i, j) is an edge iff ||p_i - p_j|| <= comm_range.
CommGraph build_graph(std::span<const Point> positions, double comm_range);

struct CliquePartition {
  // Each clique sorted; cliques ordered by their smallest robot id.
  std::vector<std::vector<RobotId>> cliques;
  // clique_of[robot] indexes `cliques`.
  std::vector<int> clique_of;

  std::size_t size() const { return cliques.size(); }
  std::size_t max_clique_size() const;
  friend bool operator==(const CliquePartition&, const CliquePartition&) = default;
};

// Every robot in exactly one clique in which all pairs are adjacent.
bool is_valid_clique_partition(const CommGraph& graph,
                               const CliquePartition& partition);

struct DcpResult {
  CliquePartition partition;
  // Directed sends per robot over the three rounds: 3 * degree.
  std::vector<int> messages_per_robot;
  // The clique each robot proposed after the intersection round.
  std::vector<std::vector<RobotId>> proposals;
  // Measured local computation per robot (proposal and reconciliation).
  std::vector<double> robot_time_s;
  int rounds = 3;
};

// Distributed clique partition, simulated as three synchronous rounds:
//   1. neighbor discovery;
//   2. exchange of closed neighborhoods N+; robot i proposes
//      N+_i ∩ N+_j for the neighbor j with the largest overlap (smallest j
//      on ties), or {i} when isolated;
//   3. exchange of proposals; the final cliques are the classes of robots
//      that proposed the identical set.
// Every member of a class lies in the shared proposal, which is contained
// in each member's closed neighborhood, so each class is a clique.
DcpResult dcp_partition(const CommGraph& graph);

// Robots at hop distance 1..k from `robot`, sorted. Throws LookupError for
// an unknown robot.
std::vector<RobotId> k_hop_neighbors(const CommGraph& graph, RobotId robot,
                                     int k);

// {"cliques": [[ids...], ...]} with one line per clique.
std::string partition_to_json(const CliquePartition& partition);

}  // namespace swarmguard

#endif  // SWARMGUARD_COMMGRAPH_HPP_
