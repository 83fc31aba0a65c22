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

#include "swarmguard/commgraph.hpp"

#include <algorithm>
#include <cmath>
#include <chrono>
#include <sstream>

#include "swarmguard/errors.hpp"

namespace swarmguard {

CommGraph CommGraph::from_edges(std::size_t n,
                                std::span<const std::pair<RobotId, RobotId>> edges) {
  CommGraph g(n);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
        static_cast<std::size_t>(b) >= n || a == b) {
      throw InvalidParameter("invalid edge (" + std::to_string(a) + ", " +
                             std::to_string(b) + ")");
    }
    g.neighbors_[a].push_back(b);
    g.neighbors_[b].push_back(a);
  }
  for (auto& list : g.neighbors_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

const std::vector<RobotId>& CommGraph::neighbors(RobotId robot) const {
  if (robot < 0 || static_cast<std::size_t>(robot) >= neighbors_.size()) {
    throw LookupError("unknown robot " + std::to_string(robot));
  }
  return neighbors_[robot];
}

bool CommGraph::adjacent(RobotId a, RobotId b) const {
  const auto& list = neighbors(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::size_t CommGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& list : neighbors_) twice += list.size();
  return twice / 2;
}

CommGraph build_graph(std::span<const Point> positions, double comm_range) {
  if (!(comm_range > 0.0)) throw InvalidParameter("comm_range must be positive");
  const std::size_t n = positions.size();
  std::vector<std::pair<RobotId, RobotId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::hypot(positions[i].x - positions[j].x,
                                  positions[i].y - positions[j].y);
      if (d <= comm_range) {
        edges.emplace_back(static_cast<RobotId>(i), static_cast<RobotId>(j));
      }
    }
  }
  return CommGraph::from_edges(n, edges);
}

std::size_t CliquePartition::max_clique_size() const {
  std::size_t best = 0;
  for (const auto& c : cliques) best = std::max(best, c.size());
  return best;
}

bool is_valid_clique_partition(const CommGraph& graph,
                               const CliquePartition& partition) {
  const std::size_t n = graph.size();
  if (partition.clique_of.size() != n) return false;
  std::vector<int> seen(n, 0);
  for (std::size_t k = 0; k < partition.cliques.size(); ++k) {
    const auto& clique = partition.cliques[k];
    if (clique.empty()) return false;
    for (std::size_t a = 0; a < clique.size(); ++a) {
      const RobotId r = clique[a];
      if (r < 0 || static_cast<std::size_t>(r) >= n) return false;
      if (++seen[r] != 1) return false;
      if (partition.clique_of[r] != static_cast<int>(k)) return false;
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        if (!graph.adjacent(r, clique[b])) return false;
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

DcpResult dcp_partition(const CommGraph& graph) {
  const std::size_t n = graph.size();
  DcpResult out;
  out.messages_per_robot.assign(n, 0);

  // Round 1: neighbor discovery. Every robot hears from each neighbor.
  std::vector<std::vector<RobotId>> closed(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& nbrs = graph.neighbors(static_cast<RobotId>(i));
    closed[i] = nbrs;
    closed[i].insert(std::lower_bound(closed[i].begin(), closed[i].end(),
                                      static_cast<RobotId>(i)),
                     static_cast<RobotId>(i));
    out.messages_per_robot[i] += static_cast<int>(nbrs.size());
  }

  // Round 2: share N+ and propose the largest pairwise intersection.
  using Clock = std::chrono::steady_clock;
  out.proposals.resize(n);
  out.robot_time_s.assign(n, 0.0);
  std::vector<RobotId> common;
  for (std::size_t i = 0; i < n; ++i) {
    const auto start = Clock::now();
    const auto& nbrs = graph.neighbors(static_cast<RobotId>(i));
    out.messages_per_robot[i] += static_cast<int>(nbrs.size());
    std::vector<RobotId> best;
    for (RobotId j : nbrs) {  // ascending, so ties keep the smallest j
      common.clear();
      std::set_intersection(closed[i].begin(), closed[i].end(), closed[j].begin(),
                            closed[j].end(), std::back_inserter(common));
      if (common.size() > best.size()) best = common;
    }
    if (nbrs.empty()) best = {static_cast<RobotId>(i)};
    out.proposals[i] = std::move(best);
    out.robot_time_s[i] += std::chrono::duration<double>(Clock::now() - start).count();
  }

  // Round 3: share proposals. Robots proposing the same set are pairwise
  // adjacent, so each robot finds its clique among its neighbors.
  for (std::size_t i = 0; i < n; ++i) {
    const auto start = Clock::now();
    const auto& nbrs = graph.neighbors(static_cast<RobotId>(i));
    out.messages_per_robot[i] += static_cast<int>(nbrs.size());
    std::vector<RobotId> members{static_cast<RobotId>(i)};
    for (RobotId j : nbrs) {
      if (out.proposals[j] == out.proposals[i]) members.push_back(j);
    }
    std::sort(members.begin(), members.end());
    out.robot_time_s[i] += std::chrono::duration<double>(Clock::now() - start).count();
    if (members.front() == static_cast<RobotId>(i)) {
      out.partition.cliques.push_back(std::move(members));
    }
  }
  // Cliques were emitted by their smallest member, so they are ordered.
  out.partition.clique_of.assign(n, -1);
  for (std::size_t k = 0; k < out.partition.cliques.size(); ++k) {
    for (RobotId r : out.partition.cliques[k]) out.partition.clique_of[r] = static_cast<int>(k);
  }
  return out;
}

std::vector<RobotId> k_hop_neighbors(const CommGraph& graph, RobotId robot, int k) {
  graph.neighbors(robot);  // validates the id
  std::vector<int> dist(graph.size(), -1);
  dist[robot] = 0;
  std::vector<RobotId> frontier{robot};
  std::vector<RobotId> out;
  for (int hop = 1; hop <= k && !frontier.empty(); ++hop) {
    std::vector<RobotId> next;
    for (RobotId u : frontier) {
      for (RobotId v : graph.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = hop;
          next.push_back(v);
          out.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string partition_to_json(const CliquePartition& partition) {
  std::ostringstream os;
  os << "{\"cliques\": [";
  for (std::size_t k = 0; k < partition.cliques.size(); ++k) {
    os << (k ? ",\n  " : "\n  ") << '[';
    for (std::size_t i = 0; i < partition.cliques[k].size(); ++i) {
      os << (i ? ", " : "") << partition.cliques[k][i];
    }
    os << ']';
  }
  os << (partition.cliques.empty() ? "]}\n" : "\n]}\n");
  return os.str();
}

}  // namespace swarmguard
