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

#include "swarmguard/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "swarmguard/errors.hpp"

namespace swarmguard {

std::string_view to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::kForward:
      return "forward";
    case ActionKind::kBackward:
      return "backward";
    case ActionKind::kLeft:
      return "left";
    case ActionKind::kRight:
      return "right";
    case ActionKind::kStay:
      return "stay";
  }
  return "stay";
}

std::optional<ActionKind> parse_action_kind(std::string_view name) {
  for (ActionKind kind : kAllActionKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

Point motion_direction(ActionKind kind) {
  switch (kind) {
    case ActionKind::kForward:
      return {1.0, 0.0};
    case ActionKind::kBackward:
      return {-1.0, 0.0};
    case ActionKind::kLeft:
      return {0.0, 1.0};
    case ActionKind::kRight:
      return {0.0, -1.0};
    case ActionKind::kStay:
      return {0.0, 0.0};
  }
  return {0.0, 0.0};
}

Rect action_region(Point p, ActionKind kind, const Geometry& geometry) {
  const double half = geometry.fov_width / 2.0;
  const double len = geometry.track_length;
  switch (kind) {
    case ActionKind::kForward:
      return {p.x, p.x + len, p.y - half, p.y + half};
    case ActionKind::kBackward:
      return {p.x - len, p.x, p.y - half, p.y + half};
    case ActionKind::kLeft:
      return {p.x - half, p.x + half, p.y, p.y + len};
    case ActionKind::kRight:
      return {p.x - half, p.x + half, p.y - len, p.y};
    case ActionKind::kStay:
      return {p.x - half, p.x + half, p.y - half, p.y + half};
  }
  return {};
}

std::vector<Point> Scenario::robot_positions() const {
  std::vector<Point> out;
  out.reserve(robots.size());
  for (const Robot& r : robots) out.push_back(r.position);
  return out;
}

std::vector<Point> Scenario::target_positions() const {
  std::vector<Point> out;
  out.reserve(targets.size());
  for (const Target& t : targets) out.push_back(t.position);
  return out;
}

std::vector<ActionKind> Scenario::kinds_of(RobotId robot) const {
  if (robot < 0 || static_cast<std::size_t>(robot) >= robots.size()) {
    throw LookupError("unknown robot " + std::to_string(robot));
  }
  std::vector<ActionKind> kinds;
  for (ActionId a : robots[robot].action_ids) kinds.push_back(actions[a].kind);
  return kinds;
}

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace

void validate_scenario(const Scenario& s) {
  require(std::isfinite(s.comm_range) && s.comm_range > 0.0,
          "comm_range must be positive");
  require(s.attack_budget >= 0, "attack_budget must be >= 0");
  require(static_cast<std::size_t>(s.attack_budget) <= s.robots.size(),
          "attack_budget must not exceed the number of robots");
  const Geometry& g = s.geometry;
  require(g.track_length > 0.0 && g.fov_width > 0.0 && g.flight_distance >= 0.0,
          "geometry lengths must be positive");
  require(std::abs(g.track_length - (g.flight_distance + g.fov_width)) <=
              1e-9 * std::max(1.0, g.track_length),
          "geometry must satisfy l_t = l_f + l_o");

  std::vector<int> seen(s.actions.size(), 0);
  for (std::size_t i = 0; i < s.robots.size(); ++i) {
    const Robot& r = s.robots[i];
    require(r.id == static_cast<RobotId>(i), "robot ids must be 0..n-1 in order");
    require(finite(r.position), "robot position must be finite");
    require(!r.action_ids.empty(), "robot " + std::to_string(i) + " has no actions");
    for (ActionId a : r.action_ids) {
      require(a >= 0 && static_cast<std::size_t>(a) < s.actions.size(),
              "robot " + std::to_string(i) + " references unknown action");
      require(s.actions[a].owner == r.id, "action owner mismatch");
      ++seen[a];
    }
  }
  for (std::size_t a = 0; a < s.actions.size(); ++a) {
    require(s.actions[a].id == static_cast<ActionId>(a), "action ids must be 0..m-1");
    require(seen[a] == 1, "action " + std::to_string(a) + " must have exactly one owner");
  }
  for (std::size_t j = 0; j < s.targets.size(); ++j) {
    require(s.targets[j].id == static_cast<TargetId>(j), "target ids must be 0..m-1 in order");
    require(finite(s.targets[j].position) && finite(s.targets[j].velocity),
            "target state must be finite");
  }
}

Scenario assemble_scenario(const std::vector<RobotSpec>& robots,
                           std::vector<Target> targets, double comm_range,
                           int attack_budget, const Geometry& geometry,
                           std::uint64_t seed) {
  Scenario s;
  s.comm_range = comm_range;
  s.attack_budget = attack_budget;
  s.geometry = geometry;
  s.seed = seed;
  s.targets = std::move(targets);
  for (std::size_t i = 0; i < robots.size(); ++i) {
    Robot r;
    r.id = static_cast<RobotId>(i);
    r.position = robots[i].position;
    for (ActionKind kind : robots[i].kinds) {
      Action a;
      a.id = static_cast<ActionId>(s.actions.size());
      a.owner = r.id;
      a.kind = kind;
      a.region = action_region(r.position, kind, geometry);
      r.action_ids.push_back(a.id);
      s.actions.push_back(a);
    }
    s.robots.push_back(std::move(r));
  }
  validate_scenario(s);
  return s;
}

Scenario relocate_robots(const Scenario& scenario,
                         const std::vector<Point>& positions) {
  if (positions.size() != scenario.robots.size()) {
    throw InvalidParameter("relocate_robots: position count mismatch");
  }
  Scenario s = scenario;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    s.robots[i].position = positions[i];
    for (ActionId a : s.robots[i].action_ids) {
      s.actions[a].region = action_region(positions[i], s.actions[a].kind, s.geometry);
    }
  }
  return s;
}

double unit_uniform(std::uint64_t raw) {
  return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

Scenario generate_scenario(const GenerateParams& p) {
  require(p.n_robots >= 1, "n_robots must be >= 1");
  require(p.n_targets >= 0, "n_targets must be >= 0");
  require(p.area.x_max > p.area.x_min && p.area.y_max > p.area.y_min,
          "area must be non-degenerate");
  require(p.comm_range > 0.0, "comm_range must be positive");
  require(p.geometry.track_length > 0.0 && p.geometry.fov_width > 0.0 &&
              p.geometry.flight_distance >= 0.0,
          "geometry must be positive");
  require(!p.kinds.empty(), "kinds must be non-empty");

  std::mt19937_64 rng(p.seed);
  auto draw = [&](double lo, double hi) { return lo + unit_uniform(rng()) * (hi - lo); };
  const auto n = static_cast<std::size_t>(p.n_robots);
  const auto m = static_cast<std::size_t>(p.n_targets);

  std::vector<RobotSpec> robots(n);
  for (auto& r : robots) r.position.x = draw(p.area.x_min, p.area.x_max);
  for (auto& r : robots) r.position.y = draw(p.area.y_min, p.area.y_max);
  for (auto& r : robots) r.kinds = p.kinds;

  std::vector<Target> targets(m);
  for (std::size_t j = 0; j < m; ++j) targets[j].id = static_cast<TargetId>(j);
  for (auto& t : targets) t.position.x = draw(p.area.x_min, p.area.x_max);
  for (auto& t : targets) t.position.y = draw(p.area.y_min, p.area.y_max);

  return assemble_scenario(robots, std::move(targets), p.comm_range,
                           p.attack_budget, p.geometry, p.seed);
}

}  // namespace swarmguard
