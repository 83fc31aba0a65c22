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

#include "swarmguard/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "swarmguard/errors.hpp"

namespace swarmguard {
namespace {

using nlohmann::json;

json point_json(Point p) { return json::array({p.x, p.y}); }

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + "." + key, "missing");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(path, "expected a number");
  return v.get<double>();
}

long long integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  return v.get<long long>();
}

Point point(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw ParseError(path, "expected [x, y]");
  return {number(v[0], path + "[0]"), number(v[1], path + "[1]")};
}

bool all_kinds(const std::vector<ActionKind>& kinds) {
  return kinds == std::vector<ActionKind>(kAllActionKinds.begin(), kAllActionKinds.end());
}

}  // namespace

std::string scenario_to_json(const Scenario& s) {
  json root;
  root["schema_version"] = kScenarioSchemaVersion;
  root["seed"] = s.seed;
  root["comm_range"] = s.comm_range;
  root["attack_budget"] = s.attack_budget;
  root["geometry"] = {{"l_t", s.geometry.track_length},
                      {"l_o", s.geometry.fov_width},
                      {"l_f", s.geometry.flight_distance}};
  json robots = json::array();
  for (const Robot& r : s.robots) {
    json jr = {{"id", r.id}, {"position", point_json(r.position)}};
    const auto kinds = s.kinds_of(r.id);
    if (!all_kinds(kinds)) {
      json jk = json::array();
      for (ActionKind k : kinds) jk.push_back(std::string(to_string(k)));
      jr["kinds"] = jk;
    }
    robots.push_back(std::move(jr));
  }
  root["robots"] = std::move(robots);
  json targets = json::array();
  for (const Target& t : s.targets) {
    targets.push_back({{"id", t.id},
                       {"position", point_json(t.position)},
                       {"velocity", point_json(t.velocity)}});
  }
  root["targets"] = std::move(targets);
  return root.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("<document>", e.what());
  }
  const long long version = integer(field(root, "schema_version", "$"), "$.schema_version");
  if (version != kScenarioSchemaVersion) {
    throw VersionError("unsupported scenario schema_version " + std::to_string(version) +
                       " (expected " + std::to_string(kScenarioSchemaVersion) + ")");
  }
  const json& seed = field(root, "seed", "$");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
    throw ParseError("$.seed", "expected a non-negative integer");
  }
  const double comm_range = number(field(root, "comm_range", "$"), "$.comm_range");
  if (!(comm_range > 0.0)) throw ParseError("$.comm_range", "must be positive");
  const long long alpha = integer(field(root, "attack_budget", "$"), "$.attack_budget");
  if (alpha < 0) throw ParseError("$.attack_budget", "must be >= 0");

  const json& g = field(root, "geometry", "$");
  Geometry geometry{number(field(g, "l_t", "$.geometry"), "$.geometry.l_t"),
                    number(field(g, "l_o", "$.geometry"), "$.geometry.l_o"),
                    number(field(g, "l_f", "$.geometry"), "$.geometry.l_f")};

  const json& jrobots = field(root, "robots", "$");
  if (!jrobots.is_array()) throw ParseError("$.robots", "expected an array");
  std::vector<RobotSpec> robots;
  for (std::size_t i = 0; i < jrobots.size(); ++i) {
    const std::string path = "$.robots[" + std::to_string(i) + "]";
    const json& jr = jrobots[i];
    if (integer(field(jr, "id", path), path + ".id") != static_cast<long long>(i)) {
      throw ParseError(path + ".id", "robot ids must be 0..n-1 in file order");
    }
    RobotSpec spec;
    spec.position = point(field(jr, "position", path), path + ".position");
    if (jr.contains("kinds")) {
      const json& jk = jr["kinds"];
      if (!jk.is_array() || jk.empty()) throw ParseError(path + ".kinds", "expected a non-empty array");
      spec.kinds.clear();
      for (const json& k : jk) {
        auto kind = k.is_string() ? parse_action_kind(k.get<std::string>()) : std::nullopt;
        if (!kind) throw ParseError(path + ".kinds", "unknown action kind");
        spec.kinds.push_back(*kind);
      }
    }
    robots.push_back(std::move(spec));
  }

  const json& jtargets = field(root, "targets", "$");
  if (!jtargets.is_array()) throw ParseError("$.targets", "expected an array");
  std::vector<Target> targets;
  for (std::size_t j = 0; j < jtargets.size(); ++j) {
    const std::string path = "$.targets[" + std::to_string(j) + "]";
    const json& jt = jtargets[j];
    Target t;
    t.id = static_cast<TargetId>(integer(field(jt, "id", path), path + ".id"));
    if (t.id != static_cast<TargetId>(j)) {
      throw ParseError(path + ".id", "target ids must be 0..m-1 in file order");
    }
    t.position = point(field(jt, "position", path), path + ".position");
    t.velocity = point(field(jt, "velocity", path), path + ".velocity");
    targets.push_back(t);
  }

  try {
    return assemble_scenario(robots, std::move(targets), comm_range,
                             static_cast<int>(alpha), geometry,
                             seed.get<std::uint64_t>());
  } catch (const InvalidParameter& e) {
    throw ParseError("$", e.what());
  }
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidParameter("cannot open " + path.string() + " for writing");
  out << scenario_to_json(scenario);
  if (!out) throw InvalidParameter("failed writing " + path.string());
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json(buf.str());
}

}  // namespace swarmguard
