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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "swarmguard/errors.hpp"
#include "swarmguard/scenario_io.hpp"
#include "swarmguard_cli/cli.hpp"
#include "swarmguard_cli/sweep.hpp"

namespace fs = std::filesystem;
using swarmguard::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& line, char sep = ',') {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("swarmguard_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    unsetenv("SWARMGUARD_JOBS");
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenIsDeterministic) {
  const std::vector<std::string> base = {"gen", "--seed", "7", "--robots", "20", "--targets",
                                         "100", "--rc", "120", "--alpha", "6", "--out"};
  auto a = base;
  a.push_back(path("a.json"));
  auto b = base;
  b.push_back(path("b.json"));
  ASSERT_EQ(call(a).code, 0);
  ASSERT_EQ(call(b).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  const auto s = swarmguard::load_scenario(path("a.json"));
  EXPECT_EQ(s.robots.size(), 20u);
  EXPECT_EQ(s.targets.size(), 100u);
  EXPECT_EQ(s.attack_budget, 6);
  EXPECT_EQ(s, fixtures::random_scenario(7, 20, 100, 200.0, 120.0, 6));
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(call({"gen", "--targets", "3", "--rc", "5"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"fly"}).code, 2);
  EXPECT_EQ(call({"run", "--planner", "fastest", "--robots", "3", "--rc", "5"}).code, 2);
  EXPECT_EQ(call({"run", "--planner", "drm"}).code, 2);  // no scenario source
  EXPECT_EQ(call({"run", "--planner", "drm", "--robots", "3", "--rc", "5", "--alpha", "9"}).code, 2);
  EXPECT_EQ(call({"gen", "--robots", "3", "--rc", "5", "--out", path("missing/dir/x.json")}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(Cli, RunPrintsOneRow) {
  ASSERT_EQ(call({"gen", "--seed", "3", "--robots", "15", "--targets", "200", "--rc", "40",
                  "--alpha", "4", "--area", "60", "--out", path("s.json")})
                .code,
            0);
  const auto r = call({"run", "--planner", "drm", "--attacker", "greedy", "--scenario",
                       path("s.json"), "--json", path("r.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1u);
  const auto cells = split(rows[0]);
  ASSERT_EQ(cells.size(), 13u);
  EXPECT_EQ(cells[0], "drm");
  EXPECT_EQ(cells[7], "4");
  EXPECT_GE(std::stod(cells[11]), std::stod(cells[12]));
  EXPECT_TRUE(fs::exists(path("r.json")));
  const auto with_header = call({"run", "--planner", "myopic", "--scenario", path("s.json"), "--header"});
  EXPECT_EQ(lines(with_header.out)[0], swarmguard::results_csv_header());
}

TEST_F(Cli, HugeRangeDrmMatchesCentralRobust) {
  ASSERT_EQ(call({"gen", "--seed", "5", "--robots", "12", "--targets", "150", "--rc", "20",
                  "--alpha", "3", "--area", "60", "--out", path("s.json")})
                .code,
            0);
  const auto d = split(call({"run", "--planner", "drm", "--scenario", path("s.json"),
                             "--rc-override", "1e6"})
                           .out);
  const auto c = split(call({"run", "--planner", "central-robust", "--scenario", path("s.json")}).out);
  ASSERT_EQ(d.size(), 13u);
  ASSERT_EQ(c.size(), 13u);
  EXPECT_EQ(d[5], "1");
  EXPECT_EQ(d[11], c[11]);
  EXPECT_EQ(d[12], c[12]);
}

TEST_F(Cli, IdrmRowMatchesDrmOnIsolatedCliques) {
  // Three far-apart tight groups: no edges between cliques.
  std::vector<swarmguard::RobotSpec> robots;
  std::vector<swarmguard::Target> targets;
  for (int g = 0; g < 3; ++g) {
    for (int i = 0; i < 3; ++i) robots.push_back({{500.0 * g + i, 0.5 * i}});
    for (int t = 0; t < 6; ++t) {
      swarmguard::Target target;
      target.id = static_cast<int>(targets.size());
      target.position = {500.0 * g + t, 1.0 + 0.3 * t};
      targets.push_back(target);
    }
  }
  swarmguard::save_scenario(
      swarmguard::assemble_scenario(robots, targets, 5.0, 2, swarmguard::Geometry{}, 0),
      path("iso.json"));
  const auto d = split(call({"run", "--planner", "drm", "--scenario", path("iso.json")}).out);
  const auto i = split(call({"run", "--planner", "idrm", "--scenario", path("iso.json")}).out);
  ASSERT_EQ(d.size(), 13u);
  for (int col : {1, 2, 3, 4, 5, 6, 11, 12}) EXPECT_EQ(d[static_cast<std::size_t>(col)], i[static_cast<std::size_t>(col)]) << col;
}

TEST_F(Cli, CapacityExitsThree) {
  const auto r = call({"run", "--planner", "drm", "--robots", "30", "--targets", "50", "--rc", "40",
                       "--alpha", "10", "--cap", "1000"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("1000"), std::string::npos);
}

TEST_F(Cli, JobsEnvironmentDefault) {
  setenv("SWARMGUARD_JOBS", "two", 1);
  EXPECT_EQ(call({"run", "--planner", "drm", "--robots", "5", "--rc", "50"}).code, 2);
  setenv("SWARMGUARD_JOBS", "2", 1);
  EXPECT_EQ(call({"run", "--planner", "drm", "--robots", "5", "--rc", "50"}).code, 0);
  unsetenv("SWARMGUARD_JOBS");
}

TEST_F(Cli, SweepWritesRowsAndSummary) {
  std::ofstream(path("sweep.json")) << R"({
    "seeds": {"first": 0, "count": 3},
    "n_robots": [8, 12],
    "r_c": [30, 60],
    "alpha": ["N/4", "N/2"],
    "planners": ["drm", "central-robust", "idrm"],
    "attacker": "greedy",
    "n_targets": 80,
    "area": [80, 80]
  })";
  const auto r = call({"mc", "--config", path("sweep.json"), "--out", path("out.csv"), "--jobs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(slurp(path("out.csv")));
  ASSERT_EQ(rows.size(), 1u + 3u * 2u * 2u * 2u * 3u);
  EXPECT_EQ(rows[0], swarmguard::results_csv_header());

  // Recompute per-setting means and compare with the summary file.
  std::map<std::string, std::pair<double, int>> post;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = split(rows[i]);
    const std::string key = c[0] + "," + c[2] + "," + c[3] + "," + c[4];
    post[key].first += std::stod(c[12]);
    post[key].second += 1;
  }
  const auto summary = lines(slurp(path("out.csv.summary.csv")));
  ASSERT_EQ(summary.size(), 1u + post.size());
  for (std::size_t i = 1; i < summary.size(); ++i) {
    const auto c = split(summary[i]);
    const std::string key = c[0] + "," + c[1] + "," + c[2] + "," + c[3];
    ASSERT_TRUE(post.count(key)) << key;
    EXPECT_EQ(std::stoi(c[4]), post[key].second);
    EXPECT_NEAR(std::stod(c[7]), post[key].first / post[key].second, 1e-9);
  }
  EXPECT_NE(r.out.find("mean_coverage_post"), std::string::npos);

  // Row order and content do not depend on the worker count (timing aside).
  ASSERT_EQ(call({"mc", "--config", path("sweep.json"), "--out", path("serial.csv"), "--jobs", "1"}).code, 0);
  const auto serial = lines(slurp(path("serial.csv")));
  ASSERT_EQ(serial.size(), rows.size());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto a = split(rows[i]);
    auto b = split(serial[i]);
    a[10] = b[10] = "";
    EXPECT_EQ(a, b);
  }
}

TEST_F(Cli, SweepFailuresAndConfigErrors) {
  std::ofstream(path("empty.json")) << R"({"seeds": [1], "n_robots": [5], "r_c": [10], "alpha": [1], "planners": []})";
  EXPECT_EQ(call({"mc", "--config", path("empty.json"), "--out", path("x.csv")}).code, 2);
  std::ofstream(path("bad_alpha.json")) << R"({"seeds": [1], "n_robots": [5], "r_c": [10], "alpha": [9], "planners": ["drm"]})";
  EXPECT_EQ(call({"mc", "--config", path("bad_alpha.json"), "--out", path("x.csv")}).code, 2);
  std::ofstream(path("ok.json")) << R"({"seeds": [1, 2], "n_robots": [30], "r_c": [500], "alpha": ["N/2"], "planners": ["drm", "myopic"], "attacker": "worst-case", "enumeration_cap": 1000})";
  EXPECT_EQ(call({"mc", "--config", path("ok.json"), "--out", path("missing/x.csv")}).code, 2);
  const auto r = call({"mc", "--config", path("ok.json"), "--out", path("fail.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(slurp(path("fail.csv")));
  ASSERT_EQ(rows.size(), 5u);
  const auto failed = split(rows[1]);
  ASSERT_EQ(failed.size(), 13u);
  EXPECT_EQ(failed[0], "drm");
  EXPECT_EQ(failed[4], "15");
  EXPECT_EQ(failed[5], "");
  EXPECT_NE(r.err.find("failed"), std::string::npos);
  // Flags alone define a sweep too.
  const auto flags = call({"mc", "--seeds", "2", "--robots", "6,9", "--rc", "30", "--alpha", "N/2",
                           "--planners", "drm,myopic", "--targets", "40", "--out", path("flags.csv")});
  ASSERT_EQ(flags.code, 0) << flags.err;
  EXPECT_EQ(lines(slurp(path("flags.csv"))).size(), 1u + 2u * 2u * 2u);
}

TEST_F(Cli, AlphaRules) {
  using swarmguard::cli::parse_alpha_rule;
  EXPECT_EQ(parse_alpha_rule("N/4").apply(20), 5);
  EXPECT_EQ(parse_alpha_rule("N/2").apply(15), 7);
  EXPECT_EQ(parse_alpha_rule("3N/4").apply(30), 22);
  EXPECT_EQ(parse_alpha_rule("6").apply(100), 6);
  EXPECT_EQ(parse_alpha_rule("3N/4").label(), "3N/4");
  EXPECT_THROW(parse_alpha_rule("N/0"), swarmguard::InvalidParameter);
  EXPECT_THROW(parse_alpha_rule("5N/4"), swarmguard::InvalidParameter);
  EXPECT_THROW(parse_alpha_rule("-1"), swarmguard::InvalidParameter);
  EXPECT_THROW(parse_alpha_rule("half"), swarmguard::InvalidParameter);
}

TEST_F(Cli, VerifyBoundsReports) {
  const auto r = call({"verify-bounds", "--instances", "25", "--seed", "4", "--report", path("b.csv")});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 27u);
  EXPECT_EQ(out.back(), "instances: 25, violations: 0");
  EXPECT_EQ(lines(slurp(path("b.csv"))).size(), 26u);
  EXPECT_EQ(call({"verify-bounds", "--instances", "3", "--cap", "2"}).code, 3);
}

TEST_F(Cli, EpisodeWritesJsonLines) {
  std::ofstream(path("ep.json")) << R"({"rounds": 4, "attacker": "greedy", "target_speed": 0.2})";
  const auto r = call({"episode", "--robots", "6", "--targets", "30", "--rc", "10", "--alpha", "2",
                       "--area", "30", "--config", path("ep.json"), "--out", path("log.jsonl")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(slurp(path("log.jsonl"))).size(), 5u);
  const auto again = call({"episode", "--robots", "6", "--targets", "30", "--rc", "10", "--alpha", "2",
                           "--area", "30", "--config", path("ep.json")});
  EXPECT_EQ(again.out, slurp(path("log.jsonl")));
  std::ofstream(path("bad.json")) << R"({"round": 4})";
  EXPECT_EQ(call({"episode", "--robots", "6", "--rc", "10", "--config", path("bad.json")}).code, 2);
}
