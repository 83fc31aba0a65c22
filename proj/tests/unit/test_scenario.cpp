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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "swarmguard/errors.hpp"
#include "swarmguard/scenario.hpp"
#include "swarmguard/scenario_io.hpp"

using namespace swarmguard;

TEST(Geometry, RegionsMatchFootprintOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Point p{fixtures::uniform(rng, -50, 50), fixtures::uniform(rng, -50, 50)};
    const auto s = assemble_scenario({{p, {kAllActionKinds.begin(), kAllActionKinds.end()}}}, {},
                                     5.0, 0, Geometry{}, 0);
    for (const auto& a : s.actions) {
      const auto box = oracle::footprint(s, a.id);
      EXPECT_DOUBLE_EQ(a.region.x_min, box.x0);
      EXPECT_DOUBLE_EQ(a.region.x_max, box.x1);
      EXPECT_DOUBLE_EQ(a.region.y_min, box.y0);
      EXPECT_DOUBLE_EQ(a.region.y_max, box.y1);
    }
  }
}

TEST(Geometry, StayIsSquareAndMovesAreTrackLong) {
  const Geometry g = Geometry::from_track(6.0, 3.0);
  EXPECT_DOUBLE_EQ(g.flight_distance, 3.0);
  const Rect stay = action_region({1, 1}, ActionKind::kStay, g);
  EXPECT_DOUBLE_EQ(stay.width(), 3.0);
  EXPECT_DOUBLE_EQ(stay.height(), 3.0);
  const Rect left = action_region({1, 1}, ActionKind::kLeft, g);
  EXPECT_DOUBLE_EQ(left.height(), 6.0);
  EXPECT_DOUBLE_EQ(left.width(), 3.0);
  EXPECT_TRUE(left.contains({1, 7}));  // closed boundary
  EXPECT_FALSE(left.contains({1, 7.0001}));
}

TEST(Geometry, KindNamesRoundTrip) {
  for (auto kind : kAllActionKinds) {
    EXPECT_EQ(parse_action_kind(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_action_kind("up").has_value());
  EXPECT_EQ(motion_direction(ActionKind::kStay), (Point{0, 0}));
  EXPECT_EQ(motion_direction(ActionKind::kRight), (Point{0, -1}));
}

TEST(Scenario, ActionIdsAreSequentialPerRobot) {
  const auto s = fixtures::two_robot();
  ASSERT_EQ(s.actions.size(), 7u);
  EXPECT_EQ(s.robots[0].action_ids, (std::vector<ActionId>{0, 1, 2}));
  EXPECT_EQ(s.robots[1].action_ids, (std::vector<ActionId>{3, 4, 5, 6}));
  EXPECT_EQ(s.actions[4].kind, ActionKind::kBackward);
  EXPECT_EQ(s.actions[4].region, (Rect{4, 14, -1.5, 1.5}));
}

TEST(Scenario, ValidationRejectsBadInputs) {
  const std::vector<RobotSpec> one = {RobotSpec{}};
  EXPECT_THROW(assemble_scenario(one, {}, 0.0, 0, Geometry{}, 0), InvalidParameter);
  EXPECT_THROW(assemble_scenario(one, {}, 5.0, -1, Geometry{}, 0), InvalidParameter);
  EXPECT_THROW(assemble_scenario(one, {}, 5.0, 2, Geometry{}, 0), InvalidParameter);
  EXPECT_THROW(assemble_scenario(one, {}, 5.0, 0, Geometry{10, 3, 5}, 0), InvalidParameter);
  EXPECT_THROW(assemble_scenario({RobotSpec{{0, 0}, {}}}, {}, 5.0, 0, Geometry{}, 0),
               InvalidParameter);
  std::vector<Target> bad_ids(1);
  bad_ids[0].id = 3;
  EXPECT_THROW(assemble_scenario(one, bad_ids, 5.0, 0, Geometry{}, 0), InvalidParameter);
}

TEST(Scenario, GeneratorReplaysPortableStream) {
  const auto s = fixtures::random_scenario(42, 17, 33, 200.0, 60.0, 4);
  const auto replay = oracle::replay_positions(42, 17, 33, 0, 200, 0, 200);
  for (std::size_t i = 0; i < s.robots.size(); ++i) {
    EXPECT_EQ(s.robots[i].position, replay.robots[i]);
  }
  for (std::size_t j = 0; j < s.targets.size(); ++j) {
    EXPECT_EQ(s.targets[j].position, replay.targets[j]);
  }
  EXPECT_EQ(s, fixtures::random_scenario(42, 17, 33, 200.0, 60.0, 4));
  EXPECT_NE(s, fixtures::random_scenario(43, 17, 33, 200.0, 60.0, 4));
}

TEST(Scenario, UnitUniformIsHalfOpen) {
  EXPECT_EQ(unit_uniform(0), 0.0);
  EXPECT_LT(unit_uniform(~std::uint64_t{0}), 1.0);
}

TEST(Scenario, RelocateRederivesRegions) {
  const auto s = fixtures::two_robot();
  const auto moved = relocate_robots(s, {{1, 1}, {2, 2}});
  EXPECT_EQ(moved.actions[0].region, action_region({1, 1}, ActionKind::kForward, s.geometry));
  EXPECT_THROW(relocate_robots(s, {{1, 1}}), InvalidParameter);
}

TEST(ScenarioIo, RoundTripIsExact) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = fixtures::random_scenario(seed, 9, 20, 100.0, 30.0, 3);
    EXPECT_EQ(scenario_from_json(scenario_to_json(s)), s);
    EXPECT_EQ(scenario_to_json(scenario_from_json(scenario_to_json(s))), scenario_to_json(s));
  }
  const auto f2 = fixtures::two_robot();
  EXPECT_EQ(scenario_from_json(scenario_to_json(f2)), f2);
}

TEST(ScenarioIo, ErrorsNameTheField) {
  auto text = scenario_to_json(fixtures::two_robot());
  const auto bad_alpha = std::string(text).replace(text.find("\"attack_budget\": 1"), 18,
                                                   "\"attack_budget\": -1");
  try {
    scenario_from_json(bad_alpha);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "$.attack_budget");
  }
  const auto bad_version = std::string(text).replace(text.find("\"schema_version\": 1"), 19,
                                                     "\"schema_version\": 2");
  EXPECT_THROW(scenario_from_json(bad_version), VersionError);
  EXPECT_THROW(scenario_from_json("{not json"), ParseError);
  EXPECT_THROW(scenario_from_json("{}"), ParseError);
}
