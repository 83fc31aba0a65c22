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

#include "swarmguard_cli/sweep.hpp"

#include <array>
#include <atomic>
#include <charconv>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "swarmguard/errors.hpp"

namespace swarmguard::cli {

using nlohmann::json;

int AlphaRule::apply(int n_robots) const {
  if (fixed) return value;
  return static_cast<int>(static_cast<long long>(numerator) * n_robots / denominator);
}

std::string AlphaRule::label() const {
  if (fixed) return std::to_string(value);
  return (numerator == 1 ? std::string() : std::to_string(numerator)) + "N/" +
         std::to_string(denominator);
}

namespace {

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

}  // namespace

AlphaRule parse_alpha_rule(std::string_view text) {
  AlphaRule rule;
  const auto n_pos = text.find('N');
  if (n_pos == std::string_view::npos) {
    if (!parse_int(text, rule.value) || rule.value < 0) {
      throw InvalidParameter("alpha rule '" + std::string(text) +
                             "': expected N/q, pN/q or a non-negative integer");
    }
    return rule;
  }
  rule.fixed = false;
  const auto num = text.substr(0, n_pos);
  const auto rest = text.substr(n_pos + 1);
  rule.numerator = 1;
  const bool ok = (num.empty() || parse_int(num, rule.numerator)) && rest.size() > 1 &&
                  rest[0] == '/' && parse_int(rest.substr(1), rule.denominator) &&
                  rule.numerator >= 0 && rule.denominator > 0 &&
                  rule.numerator <= rule.denominator;
  if (!ok) {
    throw InvalidParameter("alpha rule '" + std::string(text) +
                           "': expected N/q, pN/q or a non-negative integer");
  }
  return rule;
}

namespace {

const json& member(const json& doc, const char* key) {
  return doc.at(key);
}

template <typename T>
std::vector<T> list_of(const json& doc, const char* key) {
  const auto& v = member(doc, key);
  if (!v.is_array()) throw ParseError(std::string("$.") + key, "expected an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& e = v[i];
    const std::string path = std::string("$.") + key + "[" + std::to_string(i) + "]";
    if constexpr (std::is_same_v<T, double>) {
      if (!e.is_number()) throw ParseError(path, "expected a number");
    } else if constexpr (std::is_same_v<T, std::uint64_t>) {
      if (!e.is_number_unsigned()) throw ParseError(path, "expected a non-negative integer");
    } else {
      if (!e.is_number_integer()) throw ParseError(path, "expected an integer");
    }
    out.push_back(e.get<T>());
  }
  return out;
}

double number_at(const json& doc, const char* key) {
  if (!doc.at(key).is_number()) throw ParseError(std::string("$.") + key, "expected a number");
  return doc.at(key).get<double>();
}

}  // namespace

SweepConfig sweep_config_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("$", e.what());
  }
  if (!doc.is_object()) throw ParseError("$", "expected an object");
  static const std::set<std::string> kKeys = {
      "seeds", "n_robots", "r_c", "alpha", "planners", "attacker", "n_targets",
      "area", "track_length", "fov_width", "enumeration_cap", "output"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKeys.contains(key)) throw ParseError("$." + key, "unknown key");
  }
  for (const char* key : {"seeds", "n_robots", "r_c", "alpha", "planners"}) {
    if (!doc.contains(key)) throw ParseError(std::string("$.") + key, "missing");
  }
  SweepConfig config;
  const auto& seeds = doc.at("seeds");
  if (seeds.is_object()) {
    if (!seeds.contains("first") || !seeds.contains("count") ||
        !seeds.at("first").is_number_unsigned() || !seeds.at("count").is_number_unsigned()) {
      throw ParseError("$.seeds", "expected {\"first\": k, \"count\": n} or a list");
    }
    const auto first = seeds.at("first").get<std::uint64_t>();
    const auto count = seeds.at("count").get<std::uint64_t>();
    for (std::uint64_t i = 0; i < count; ++i) config.seeds.push_back(first + i);
  } else {
    config.seeds = list_of<std::uint64_t>(doc, "seeds");
  }
  config.n_robots = list_of<int>(doc, "n_robots");
  config.comm_ranges = list_of<double>(doc, "r_c");
  const auto& alphas = doc.at("alpha");
  if (!alphas.is_array()) throw ParseError("$.alpha", "expected an array");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const std::string path = "$.alpha[" + std::to_string(i) + "]";
    const auto& a = alphas[i];
    std::string rule;
    if (a.is_number_integer()) {
      rule = std::to_string(a.get<long long>());
    } else if (a.is_string()) {
      rule = a.get<std::string>();
    } else {
      throw ParseError(path, "expected a rule string or an integer");
    }
    try {
      config.alpha_rules.push_back(parse_alpha_rule(rule));
    } catch (const InvalidParameter& e) {
      throw ParseError(path, e.what());
    }
  }
  const auto& planners = doc.at("planners");
  if (!planners.is_array()) throw ParseError("$.planners", "expected an array");
  for (std::size_t i = 0; i < planners.size(); ++i) {
    const std::string path = "$.planners[" + std::to_string(i) + "]";
    if (!planners[i].is_string()) throw ParseError(path, "expected a string");
    const auto p = parse_planner(planners[i].get<std::string>());
    if (!p) throw ParseError(path, "unknown planner");
    config.planners.push_back(*p);
  }
  if (doc.contains("attacker")) {
    if (!doc.at("attacker").is_string()) throw ParseError("$.attacker", "expected a string");
    const auto a = parse_attacker(doc.at("attacker").get<std::string>());
    if (!a) throw ParseError("$.attacker", "unknown attacker");
    config.attacker = *a;
  }
  if (doc.contains("n_targets")) {
    if (!doc.at("n_targets").is_number_integer()) {
      throw ParseError("$.n_targets", "expected an integer");
    }
    config.n_targets = doc.at("n_targets").get<int>();
  }
  if (doc.contains("area")) {
    const auto& area = doc.at("area");
    if (!area.is_array() || area.size() != 2 || !area[0].is_number() ||
        !area[1].is_number()) {
      throw ParseError("$.area", "expected [width, height]");
    }
    config.area = {0.0, area[0].get<double>(), 0.0, area[1].get<double>()};
  }
  double track = config.geometry.track_length;
  double fov = config.geometry.fov_width;
  if (doc.contains("track_length")) track = number_at(doc, "track_length");
  if (doc.contains("fov_width")) fov = number_at(doc, "fov_width");
  config.geometry = Geometry::from_track(track, fov);
  if (doc.contains("enumeration_cap")) {
    if (!doc.at("enumeration_cap").is_number_unsigned()) {
      throw ParseError("$.enumeration_cap", "expected a non-negative integer");
    }
    config.enumeration_cap = doc.at("enumeration_cap").get<std::uint64_t>();
  }
  if (doc.contains("output")) {
    if (!doc.at("output").is_string()) throw ParseError("$.output", "expected a string");
    config.output = doc.at("output").get<std::string>();
  }
  validate_sweep(config);
  return config;
}

void validate_sweep(const SweepConfig& config) {
  if (config.seeds.empty()) throw InvalidParameter("sweep needs at least one seed");
  if (config.planners.empty()) throw InvalidParameter("sweep needs at least one planner");
  if (config.n_robots.empty()) throw InvalidParameter("sweep needs at least one team size");
  if (config.comm_ranges.empty()) throw InvalidParameter("sweep needs at least one range");
  if (config.alpha_rules.empty()) throw InvalidParameter("sweep needs at least one alpha rule");
  if (config.n_targets < 0) throw InvalidParameter("n_targets must be >= 0");
  for (int n : config.n_robots) {
    if (n < 1) throw InvalidParameter("team sizes must be >= 1");
    for (const auto& rule : config.alpha_rules) {
      const int a = rule.apply(n);
      if (a < 0 || a > n) {
        throw InvalidParameter("alpha rule " + rule.label() + " gives " + std::to_string(a) +
                               " for N=" + std::to_string(n) + "; must lie in [0, N]");
      }
    }
  }
  for (double r : config.comm_ranges) {
    if (!(r > 0.0)) throw InvalidParameter("communication ranges must be > 0");
  }
}

std::vector<ResultRow> run_sweep(const SweepConfig& config, int jobs) {
  validate_sweep(config);
  struct Cell {
    std::uint64_t seed;
    int n;
    double r_c;
    int alpha;
    Planner planner;
  };
  std::vector<Cell> cells;
  for (auto seed : config.seeds) {
    for (int n : config.n_robots) {
      for (double r_c : config.comm_ranges) {
        for (const auto& rule : config.alpha_rules) {
          for (auto planner : config.planners) {
            cells.push_back({seed, n, r_c, rule.apply(n), planner});
          }
        }
      }
    }
  }
  std::vector<ResultRow> rows(cells.size());
  auto run_cell = [&](std::size_t i) {
    const auto& cell = cells[i];
    GenerateParams params;
    params.seed = cell.seed;
    params.n_robots = cell.n;
    params.n_targets = config.n_targets;
    params.area = config.area;
    params.comm_range = cell.r_c;
    params.attack_budget = cell.alpha;
    params.geometry = config.geometry;
    DistributedOptions options;
    options.enumeration_cap = config.enumeration_cap;
    try {
      rows[i] = run_once(generate_scenario(params), cell.planner, config.attacker, options).row;
    } catch (const CapacityError& e) {
      auto& row = rows[i];
      row = {};
      row.algo = std::string(to_string(cell.planner));
      row.seed = cell.seed;
      row.n = cell.n;
      row.r_c = cell.r_c;
      row.alpha = cell.alpha;
      row.ok = false;
      row.error = e.what();
    }
  };
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), cells.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells.size(); i = next++) {
        try {
          run_cell(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
  using Key = std::tuple<std::string, int, double, int>;
  std::map<Key, std::size_t> index;
  std::vector<SummaryRow> out;
  for (const auto& row : rows) {
    const Key key{row.algo, row.n, row.r_c, row.alpha};
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, out.size()).first;
      SummaryRow s;
      s.algo = row.algo;
      s.n = row.n;
      s.r_c = row.r_c;
      s.alpha = row.alpha;
      out.push_back(s);
    }
    auto& s = out[it->second];
    if (!row.ok) {
      ++s.failed;
      continue;
    }
    ++s.runs;
    s.mean_coverage_pre += row.coverage_pre;
    s.mean_coverage_post += row.coverage_post;
    s.mean_parallel_time_s += row.parallel_time_s;
    s.mean_msgs_total += static_cast<double>(row.msgs_total);
    s.mean_evals_max_clique += static_cast<double>(row.evals_max_clique);
  }
  for (auto& s : out) {
    if (s.runs == 0) continue;
    const double k = s.runs;
    s.mean_coverage_pre /= k;
    s.mean_coverage_post /= k;
    s.mean_parallel_time_s /= k;
    s.mean_msgs_total /= k;
    s.mean_evals_max_clique /= k;
  }
  return out;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), res.ptr};
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "algo,n,r_c,alpha,runs,failed,mean_coverage_pre,mean_coverage_post,"
         "mean_parallel_time_s,mean_msgs_total,mean_evals_max_clique\n";
  for (const auto& s : rows) {
    out << s.algo << ',' << s.n << ',' << format_number(s.r_c) << ',' << s.alpha << ','
        << s.runs << ',' << s.failed << ',';
    if (s.runs == 0) {
      out << ",,,,\n";
      continue;
    }
    out << format_number(s.mean_coverage_pre) << ',' << format_number(s.mean_coverage_post)
        << ',' << format_number(s.mean_parallel_time_s) << ','
        << format_number(s.mean_msgs_total) << ',' << format_number(s.mean_evals_max_clique)
        << '\n';
  }
  return out.str();
}

}  // namespace swarmguard::cli
