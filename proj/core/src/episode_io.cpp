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

#include "swarmguard/episode_io.hpp"

#include <set>

#include "json.hpp"
#include "swarmguard/errors.hpp"

namespace swarmguard {

namespace {

using nlohmann::json;

json points(const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back({p.x, p.y});
  return out;
}

json config_json(const EpisodeConfig& c) {
  return {{"planner", std::string(to_string(c.planner))},
          {"attacker", std::string(to_string(c.attacker))},
          {"rounds", c.rounds},
          {"seed", c.seed},
          {"dt", c.dt},
          {"accel_sigma", c.accel_sigma},
          {"measurement_sigma", c.measurement_sigma},
          {"initial_position_sigma", c.initial_position_sigma},
          {"initial_velocity_sigma", c.initial_velocity_sigma},
          {"target_speed", c.target_speed},
          {"jobs", c.jobs},
          {"enumeration_cap", c.enumeration_cap}};
}

double number(const json& doc, const std::string& key) {
  if (!doc.at(key).is_number()) throw ParseError("$." + key, "expected a number");
  return doc.at(key).get<double>();
}

std::int64_t integer(const json& doc, const std::string& key) {
  if (!doc.at(key).is_number_integer()) throw ParseError("$." + key, "expected an integer");
  return doc.at(key).get<std::int64_t>();
}

std::string text(const json& doc, const std::string& key) {
  if (!doc.at(key).is_string()) throw ParseError("$." + key, "expected a string");
  return doc.at(key).get<std::string>();
}

}  // namespace

std::string episode_to_jsonl(const EpisodeLog& log) {
  std::string out;
  json header = {{"schema_version", kEpisodeSchemaVersion},
                 {"config", config_json(log.config)},
                 {"attack_budget", log.attack_budget}};
  out += header.dump();
  out += '\n';
  for (const auto& r : log.records) {
    json assignment = json::array();
    for (const auto& [robot, choice] : r.assignment.chosen) {
      assignment.push_back({{"robot", robot},
                            {"action", choice.action},
                            {"provenance", std::string(to_string(choice.provenance))}});
    }
    json rec = {{"round", r.round},
                {"robot_positions", points(r.robot_positions)},
                {"target_positions", points(r.target_positions)},
                {"estimates", points(r.estimates)},
                {"assignment", assignment},
                {"removed", r.removed},
                {"planned_coverage", r.planned_coverage},
                {"covered", r.covered},
                {"cliques", r.cliques},
                {"min_covariance_eigenvalue", r.min_covariance_eigenvalue},
                {"max_covariance_asymmetry", r.max_covariance_asymmetry}};
    out += rec.dump();
    out += '\n';
  }
  return out;
}

EpisodeConfig episode_config_from_json(const std::string& source, EpisodeConfig base) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    throw ParseError("$", e.what());
  }
  if (!doc.is_object()) throw ParseError("$", "expected an object");
  static const std::set<std::string> kKeys = {
      "planner",     "attacker",          "rounds",
      "seed",        "dt",                "accel_sigma",
      "measurement_sigma", "initial_position_sigma", "initial_velocity_sigma",
      "target_speed", "jobs",             "enumeration_cap"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKeys.contains(key)) throw ParseError("$." + key, "unknown key");
  }
  auto non_negative = [&](const std::string& key, double& field) {
    if (!doc.contains(key)) return;
    field = number(doc, key);
    if (!(field >= 0.0)) throw ParseError("$." + key, "must be >= 0");
  };
  if (doc.contains("planner")) {
    const auto p = parse_planner(text(doc, "planner"));
    if (!p) throw ParseError("$.planner", "unknown planner");
    base.planner = *p;
  }
  if (doc.contains("attacker")) {
    const auto a = parse_attacker(text(doc, "attacker"));
    if (!a) throw ParseError("$.attacker", "unknown attacker");
    base.attacker = *a;
  }
  if (doc.contains("rounds")) {
    const auto v = integer(doc, "rounds");
    if (v < 1 || v > 1'000'000) throw ParseError("$.rounds", "must be in [1, 1000000]");
    base.rounds = static_cast<int>(v);
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) {
      throw ParseError("$.seed", "expected a non-negative integer");
    }
    base.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("dt")) {
    base.dt = number(doc, "dt");
    if (!(base.dt > 0.0)) throw ParseError("$.dt", "must be > 0");
  }
  non_negative("accel_sigma", base.accel_sigma);
  non_negative("measurement_sigma", base.measurement_sigma);
  non_negative("initial_position_sigma", base.initial_position_sigma);
  non_negative("initial_velocity_sigma", base.initial_velocity_sigma);
  non_negative("target_speed", base.target_speed);
  if (doc.contains("jobs")) {
    const auto v = integer(doc, "jobs");
    if (v < 0 || v > 4096) throw ParseError("$.jobs", "must be in [0, 4096]");
    base.jobs = static_cast<int>(v);
  }
  if (doc.contains("enumeration_cap")) {
    if (!doc.at("enumeration_cap").is_number_unsigned()) {
      throw ParseError("$.enumeration_cap", "expected a non-negative integer");
    }
    base.enumeration_cap = doc.at("enumeration_cap").get<std::uint64_t>();
  }
  return base;
}

}  // namespace swarmguard
