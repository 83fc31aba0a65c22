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

// World model: robots with motion-primitive actions, targets, and the
// deterministic scenario generator.

#ifndef SWARMGUARD_SCENARIO_HPP_
#define SWARMGUARD_SCENARIO_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace swarmguard {

using RobotId = int;
using ActionId = int;
using TargetId = int;

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Closed axis-aligned rectangle; boundary points are inside.
struct Rect {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  bool contains(Point p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Motion primitives. Forward/backward run along +x/-x, left/right along
// +y/-y.
enum class ActionKind { kForward, kBackward, kLeft, kRight, kStay };

inline constexpr std::array<ActionKind, 5> kAllActionKinds = {
    ActionKind::kForward, ActionKind::kBackward, ActionKind::kLeft,
    ActionKind::kRight, ActionKind::kStay};

std::string_view to_string(ActionKind kind);
std::optional<ActionKind> parse_action_kind(std::string_view name);

// Unit vector of the motion axis; zero for stay.
Point motion_direction(ActionKind kind);

// Camera footprint geometry shared by all robots. A moving primitive
// sweeps a `track_length` x `fov_width` rectangle, where
// track_length = flight_distance + fov_width; stay is a fov_width square.
struct Geometry {
  double track_length = 10.0;  // l_t
  double fov_width = 3.0;      // l_o
  double flight_distance = 7.0;  // l_f

  static Geometry from_track(double track_length, double fov_width) {
    return {track_length, fov_width, track_length - fov_width};
  }
  friend bool operator==(const Geometry&, const Geometry&) = default;
};

// Footprint of `kind` for a robot at `position`. Moving primitives start
// at the robot and extend track_length along the motion axis with the
// width centered on it; stay is a square centered on the robot.
Rect action_region(Point position, ActionKind kind, const Geometry& geometry);

struct Action {
  ActionId id = 0;
  RobotId owner = 0;
  ActionKind kind = ActionKind::kStay;
  Rect region;
  friend bool operator==(const Action&, const Action&) = default;
};

struct Robot {
  RobotId id = 0;
  Point position;
  std::vector<ActionId> action_ids;
  friend bool operator==(const Robot&, const Robot&) = default;
};

struct Target {
  TargetId id = 0;
  Point position;
  Point velocity;
  friend bool operator==(const Target&, const Target&) = default;
};

// Robots are indexed by id (robots[i].id == i) and actions by id. Actions
// are derived from robot positions, kinds and geometry, never stored
// independently.
struct Scenario {
  std::vector<Robot> robots;
  std::vector<Action> actions;
  std::vector<Target> targets;
  double comm_range = 1.0;
  int attack_budget = 0;
  Geometry geometry;
  std::uint64_t seed = 0;

  std::size_t num_robots() const { return robots.size(); }
  std::vector<Point> robot_positions() const;
  std::vector<Point> target_positions() const;
  std::vector<ActionKind> kinds_of(RobotId robot) const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct RobotSpec {
  Point position;
  std::vector<ActionKind> kinds{kAllActionKinds.begin(), kAllActionKinds.end()};
};

// Builds a scenario and derives its actions. Action ids are assigned
// robot by robot in the listed kind order. Throws InvalidParameter when
// the result fails validate_scenario.
Scenario assemble_scenario(const std::vector<RobotSpec>& robots,
                           std::vector<Target> targets, double comm_range,
                           int attack_budget, const Geometry& geometry,
                           std::uint64_t seed);

// Same scenario with robots moved to `positions` (actions re-derived).
Scenario relocate_robots(const Scenario& scenario,
                         const std::vector<Point>& positions);

// Throws InvalidParameter naming the first violated invariant.
void validate_scenario(const Scenario& scenario);

struct Area {
  double x_min = 0.0;
  double x_max = 200.0;
  double y_min = 0.0;
  double y_max = 200.0;
};

struct GenerateParams {
  std::uint64_t seed = 0;
  int n_robots = 10;
  int n_targets = 100;
  Area area;
  double comm_range = 60.0;
  int attack_budget = 0;
  Geometry geometry;
  std::vector<ActionKind> kinds{kAllActionKinds.begin(), kAllActionKinds.end()};
};

// Samples positions i.i.d. uniform over the area from a std::mt19937_64
// seeded with `seed`. Stream order: all robot x, all robot y, all target
// x, all target y. Each draw u = (next() >> 11) * 2^-53 maps to
// lo + u * (hi - lo), so the stream is reproducible across platforms.
Scenario generate_scenario(const GenerateParams& params);

// The portable uniform draw used by generate_scenario.
double unit_uniform(std::uint64_t raw);

}  // namespace swarmguard

#endif  // SWARMGUARD_SCENARIO_HPP_
