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

#include "swarmguard_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "swarmguard/episode_io.hpp"
#include "swarmguard/errors.hpp"
#include "swarmguard/planner.hpp"
#include "swarmguard/scenario_io.hpp"
#include "swarmguard/tracking.hpp"
#include "swarmguard_cli/bounds.hpp"
#include "swarmguard_cli/sweep.hpp"

namespace swarmguard::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InvalidParameter("cannot write " + path);
  file << content;
  file.flush();
  if (!file) throw InvalidParameter("cannot write " + path);
}

int default_jobs() {
  const char* env = std::getenv("SWARMGUARD_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 0 || value > 4096) {
    throw InvalidParameter(std::string("SWARMGUARD_JOBS must be an integer in [0, 4096], got '") +
                           env + "'");
  }
  return static_cast<int>(value);
}

// Generation flags shared by gen, run and episode.
struct GenOptions {
  std::uint64_t seed = 0;
  std::optional<int> robots;
  int targets = 100;
  std::optional<double> comm_range;
  int alpha = 0;
  double area = 200.0;
  double track_length = 10.0;
  double fov_width = 3.0;

  void add_to(CLI::App& cmd, bool robots_required) {
    cmd.add_option("--seed", seed, "PRNG seed")->capture_default_str();
    auto* r = cmd.add_option("--robots", robots, "Number of robots")
                  ->check(CLI::Range(1, 100000));
    if (robots_required) r->required();
    cmd.add_option("--targets", targets, "Number of targets")
        ->check(CLI::Range(0, 10000000))
        ->capture_default_str();
    auto* rc = cmd.add_option("--rc", comm_range, "Communication range (m)")
                   ->check(CLI::PositiveNumber);
    if (robots_required) rc->required();
    cmd.add_option("--alpha", alpha, "Attack budget")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd.add_option("--area", area, "Side of the square deployment area (m)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--track-length", track_length, "Footprint length l_t (m)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--fov-width", fov_width, "Footprint width l_o (m)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  Scenario generate() const {
    if (!robots) throw InvalidParameter("--robots is required without --scenario");
    if (!comm_range) throw InvalidParameter("--rc is required without --scenario");
    GenerateParams params;
    params.seed = seed;
    params.n_robots = *robots;
    params.n_targets = targets;
    params.area = {0.0, area, 0.0, area};
    params.comm_range = *comm_range;
    params.attack_budget = alpha;
    params.geometry = Geometry::from_track(track_length, fov_width);
    return generate_scenario(params);
  }
};

std::optional<Planner> planner_or_throw(const std::string& name) {
  const auto p = parse_planner(name);
  if (!p) throw InvalidParameter("unknown planner '" + name + "'");
  return p;
}

Attacker attacker_or_throw(const std::string& name) {
  const auto a = parse_attacker(name);
  if (!a) throw InvalidParameter("unknown attacker '" + name + "'");
  return *a;
}

const std::vector<std::string> kPlannerChoices = {"central-greedy", "central-robust", "drm",
                                                  "idrm", "drm-una", "myopic"};
const std::vector<std::string> kAttackerChoices = {"worst-case", "greedy", "none"};

std::string run_json(const RunOutcome& outcome) {
  using nlohmann::json;
  const auto& r = outcome.row;
  json assignment = json::array();
  for (const auto& [robot, choice] : outcome.plan.assignment.chosen) {
    assignment.push_back({{"robot", robot},
                          {"action", choice.action},
                          {"provenance", std::string(to_string(choice.provenance))}});
  }
  json doc = {{"algo", r.algo},
              {"seed", r.seed},
              {"n", r.n},
              {"r_c", r.r_c},
              {"alpha", r.alpha},
              {"K", r.cliques},
              {"max_clique", r.max_clique},
              {"rounds", r.rounds},
              {"msgs_total", r.msgs_total},
              {"evals_max_clique", r.evals_max_clique},
              {"parallel_time_s", r.parallel_time_s},
              {"coverage_pre", r.coverage_pre},
              {"coverage_post", r.coverage_post},
              {"assignment", assignment},
              {"removed", outcome.attack.removed},
              {"cliques", outcome.plan.partition.cliques},
              {"messages_per_robot", outcome.plan.stats.messages_per_robot},
              {"evals_per_clique", outcome.plan.stats.evals_per_clique},
              {"alpha_per_clique", outcome.plan.inference.alpha_per_clique}};
  return doc.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Attack-robust multi-robot coverage planning", "swarmguard"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "swarmguard 0.1.0");

  int jobs = 1;
  std::string jobs_error;
  try {
    jobs = default_jobs();
  } catch (const InvalidParameter& e) {
    jobs_error = e.what();
  }
  std::uint64_t cap = kDefaultEnumerationCap;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random scenario file");
  GenOptions gen_opts;
  gen_opts.add_to(*gen, true);
  std::string gen_out;
  gen->add_option("-o,--out", gen_out, "Output path (stdout when omitted)");

  // run
  auto* run_cmd = app.add_subcommand("run", "Plan, attack and score one scenario");
  GenOptions run_gen;
  run_gen.add_to(*run_cmd, false);
  std::string run_scenario;
  std::string run_planner;
  std::string run_attacker = "worst-case";
  std::optional<double> rc_override;
  std::optional<int> alpha_override;
  std::string run_json_path;
  bool run_header = false;
  run_cmd->add_option("--scenario", run_scenario, "Scenario file")->check(CLI::ExistingFile);
  run_cmd->add_option("--planner", run_planner, "Planner")
      ->required()
      ->check(CLI::IsMember(kPlannerChoices));
  run_cmd->add_option("--attacker", run_attacker, "Attacker")
      ->check(CLI::IsMember(kAttackerChoices))
      ->capture_default_str();
  run_cmd->add_option("--rc-override", rc_override, "Replace the communication range")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--alpha-override", alpha_override, "Replace the attack budget")
      ->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--json", run_json_path, "Also write a JSON report");
  run_cmd->add_flag("--header", run_header, "Print the CSV header first");
  run_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)")
      ->check(CLI::Range(0, 4096));
  run_cmd->add_option("--cap", cap, "Enumeration cap for exact oracles")->capture_default_str();

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo sweep to CSV");
  std::string mc_config;
  std::uint64_t mc_seed = 0;
  std::optional<std::uint64_t> mc_seeds;
  std::vector<int> mc_robots;
  std::vector<double> mc_rc;
  std::vector<std::string> mc_alpha;
  std::vector<std::string> mc_planners;
  std::optional<std::string> mc_attacker;
  std::optional<int> mc_targets;
  std::string mc_out;
  mc->add_option("--config", mc_config, "Sweep config JSON")->check(CLI::ExistingFile);
  mc->add_option("--seed", mc_seed, "First seed")->capture_default_str();
  mc->add_option("--seeds", mc_seeds, "Number of consecutive seeds")->check(CLI::Range(1, 1000000));
  mc->add_option("--robots", mc_robots, "Team sizes")->delimiter(',');
  mc->add_option("--rc", mc_rc, "Communication ranges")->delimiter(',');
  mc->add_option("--alpha", mc_alpha, "Alpha rules: N/4, N/2, 3N/4 or integers")->delimiter(',');
  mc->add_option("--planners", mc_planners, "Planners")
      ->delimiter(',')
      ->check(CLI::IsMember(kPlannerChoices));
  mc->add_option("--attacker", mc_attacker, "Attacker")->check(CLI::IsMember(kAttackerChoices));
  mc->add_option("--targets", mc_targets, "Targets per scenario")->check(CLI::Range(0, 10000000));
  mc->add_option("-o,--out", mc_out, "Output CSV path");
  mc->add_option("--jobs", jobs, "Concurrent sweep cells (0 = all cores)")
      ->check(CLI::Range(0, 4096));

  // episode
  auto* episode = app.add_subcommand("episode", "Multi-round tracking episode");
  GenOptions ep_gen;
  ep_gen.add_to(*episode, false);
  std::string ep_scenario;
  std::string ep_config;
  std::optional<std::string> ep_planner;
  std::optional<std::string> ep_attacker;
  std::optional<int> ep_rounds;
  std::string ep_out;
  episode->add_option("--scenario", ep_scenario, "Scenario file")->check(CLI::ExistingFile);
  episode->add_option("--config", ep_config, "Episode config JSON")->check(CLI::ExistingFile);
  episode->add_option("--planner", ep_planner, "Planner")->check(CLI::IsMember(kPlannerChoices));
  episode->add_option("--attacker", ep_attacker, "Attacker")
      ->check(CLI::IsMember(kAttackerChoices));
  episode->add_option("--rounds", ep_rounds, "Rounds")->check(CLI::Range(1, 1000000));
  episode->add_option("-o,--out", ep_out, "JSONL log path (stdout when omitted)");
  episode->add_option("--jobs", jobs, "Worker threads for per-clique planning")
      ->check(CLI::Range(0, 4096));

  // verify-bounds
  auto* verify = app.add_subcommand("verify-bounds", "Certify approximation bounds");
  BoundParams bounds;
  std::string verify_report;
  verify->add_option("--instances", bounds.instances, "Random instances")
      ->check(CLI::Range(0, 1000000))
      ->capture_default_str();
  verify->add_option("--seed", bounds.seed, "PRNG seed")->capture_default_str();
  verify->add_option("--max-robots", bounds.max_robots)->check(CLI::Range(1, 8))->capture_default_str();
  verify->add_option("--max-actions", bounds.max_actions)->check(CLI::Range(1, 5))->capture_default_str();
  verify->add_option("--max-alpha", bounds.max_alpha)->check(CLI::Range(0, 8))->capture_default_str();
  verify->add_option("--max-targets", bounds.max_targets)->check(CLI::Range(1, 64))->capture_default_str();
  verify->add_option("--cap", bounds.enumeration_cap)->capture_default_str();
  verify->add_option("--report", verify_report, "Also write the report CSV here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (!jobs_error.empty() && (run_cmd->parsed() || mc->parsed() || episode->parsed())) {
      throw InvalidParameter(jobs_error);
    }
    if (gen->parsed()) {
      const auto text = scenario_to_json(gen_opts.generate());
      if (gen_out.empty()) {
        out << text;
      } else {
        write_file(gen_out, text);
      }
      return kExitOk;
    }

    if (run_cmd->parsed()) {
      Scenario scenario = run_scenario.empty() ? run_gen.generate() : load_scenario(run_scenario);
      if (rc_override) scenario.comm_range = *rc_override;
      if (alpha_override) scenario.attack_budget = *alpha_override;
      validate_scenario(scenario);
      DistributedOptions options;
      options.jobs = jobs;
      options.enumeration_cap = cap;
      const auto outcome = run_once(scenario, *planner_or_throw(run_planner),
                                    attacker_or_throw(run_attacker), options);
      if (run_header) out << results_csv_header() << '\n';
      out << to_csv(outcome.row) << '\n';
      if (!run_json_path.empty()) write_file(run_json_path, run_json(outcome));
      return kExitOk;
    }

    if (mc->parsed()) {
      SweepConfig config;
      if (!mc_config.empty()) {
        config = sweep_config_from_json(read_file(mc_config));
      } else {
        config.seeds = {0};
      }
      if (mc_seeds) {
        config.seeds.clear();
        for (std::uint64_t i = 0; i < *mc_seeds; ++i) config.seeds.push_back(mc_seed + i);
      }
      if (!mc_robots.empty()) config.n_robots = mc_robots;
      if (!mc_rc.empty()) config.comm_ranges = mc_rc;
      if (!mc_alpha.empty()) {
        config.alpha_rules.clear();
        for (const auto& a : mc_alpha) config.alpha_rules.push_back(parse_alpha_rule(a));
      }
      if (!mc_planners.empty()) {
        config.planners.clear();
        for (const auto& p : mc_planners) config.planners.push_back(*planner_or_throw(p));
      }
      if (mc_attacker) config.attacker = attacker_or_throw(*mc_attacker);
      if (mc_targets) config.n_targets = *mc_targets;
      if (!mc_out.empty()) config.output = mc_out;
      if (config.output.empty()) throw InvalidParameter("mc needs --out or an output in --config");
      validate_sweep(config);
      // Fail on an unwritable destination before spending time on the sweep.
      write_file(config.output, results_csv_header() + "\n");

      const auto rows = run_sweep(config, jobs);
      std::string csv = results_csv_header() + "\n";
      int failed = 0;
      for (const auto& row : rows) {
        csv += to_csv(row) + "\n";
        if (!row.ok) {
          ++failed;
          err << "warning: " << row.algo << " seed " << row.seed << " n " << row.n
              << " failed: " << row.error << '\n';
        }
      }
      write_file(config.output, csv);
      const auto summary = summary_csv(summarize(rows));
      write_file(config.output + ".summary.csv", summary);
      out << summary;
      out << "rows: " << rows.size() << ", failed: " << failed << '\n';
      return kExitOk;
    }

    if (episode->parsed()) {
      const Scenario scenario =
          ep_scenario.empty() ? ep_gen.generate() : load_scenario(ep_scenario);
      EpisodeConfig config;
      config.seed = ep_gen.seed;
      if (!ep_config.empty()) config = episode_config_from_json(read_file(ep_config), config);
      if (ep_planner) config.planner = *planner_or_throw(*ep_planner);
      if (ep_attacker) config.attacker = attacker_or_throw(*ep_attacker);
      if (ep_rounds) config.rounds = *ep_rounds;
      if (episode->count("--seed") > 0) config.seed = ep_gen.seed;
      if (episode->count("--jobs") > 0 || ep_config.empty()) config.jobs = jobs;
      const auto log = run_episode(scenario, config);
      const auto text = episode_to_jsonl(log);
      if (ep_out.empty()) {
        out << text;
      } else {
        write_file(ep_out, text);
        out << "rounds: " << log.records.size()
            << ", mean covered: " << format_number(log.mean_covered()) << '\n';
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto reports = verify_bounds(bounds);
      std::string csv = bound_report_header() + "\n";
      int violations = 0;
      for (const auto& r : reports) {
        csv += to_csv(r) + "\n";
        if (!r.holds()) ++violations;
      }
      out << csv;
      out << "instances: " << reports.size() << ", violations: " << violations << '\n';
      if (!verify_report.empty()) write_file(verify_report, csv);
      return violations == 0 ? kExitOk : kExitBoundViolation;
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace swarmguard::cli
