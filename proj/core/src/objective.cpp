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

#include "swarmguard/objective.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <string>

#include "swarmguard/errors.hpp"

namespace swarmguard {

CoverageObjective::CoverageObjective(const Scenario& scenario) {
  const auto targets = scenario.target_positions();
  build(scenario, targets);
}

CoverageObjective::CoverageObjective(const Scenario& scenario,
                                     std::span<const Point> target_positions) {
  build(scenario, target_positions);
}

void CoverageObjective::build(const Scenario& scenario,
                              std::span<const Point> targets) {
  num_targets_ = targets.size();
  words_ = std::max<std::size_t>(1, (num_targets_ + 63) / 64);
  const std::size_t m = scenario.actions.size();
  masks_.assign(m * words_, 0);
  owners_.resize(m);
  singletons_.resize(m);
  for (const Action& a : scenario.actions) {
    owners_[a.id] = a.owner;
    std::uint64_t* words = masks_.data() + static_cast<std::size_t>(a.id) * words_;
    std::size_t count = 0;
    for (std::size_t t = 0; t < num_targets_; ++t) {
      if (a.region.contains(targets[t])) {
        words[t / 64] |= std::uint64_t{1} << (t % 64);
        ++count;
      }
    }
    singletons_[a.id] = static_cast<double>(count);
  }
  robot_actions_.clear();
  for (const Robot& r : scenario.robots) robot_actions_.push_back(r.action_ids);
}

void CoverageObjective::check_action(ActionId action) const {
  if (action < 0 || static_cast<std::size_t>(action) >= owners_.size()) {
    throw LookupError("unknown action " + std::to_string(action));
  }
}

RobotId CoverageObjective::owner(ActionId action) const {
  check_action(action);
  return owners_[action];
}

const std::vector<ActionId>& CoverageObjective::actions_of(RobotId robot) const {
  if (robot < 0 || static_cast<std::size_t>(robot) >= robot_actions_.size()) {
    throw LookupError("unknown robot " + std::to_string(robot));
  }
  return robot_actions_[robot];
}

std::vector<TargetId> CoverageObjective::covered_targets(ActionId action) const {
  check_action(action);
  std::vector<TargetId> out;
  const auto words = mask(action);
  for (std::size_t t = 0; t < num_targets_; ++t) {
    if ((words[t / 64] >> (t % 64)) & 1U) out.push_back(static_cast<TargetId>(t));
  }
  return out;
}

double CoverageObjective::evaluate(std::span<const ActionId> set) const {
  std::vector<RobotId> owners;
  owners.reserve(set.size());
  for (ActionId a : set) owners.push_back(owner(a));
  std::sort(owners.begin(), owners.end());
  if (std::adjacent_find(owners.begin(), owners.end()) != owners.end()) {
    throw FeasibilityError("set holds two actions of robot " +
                           std::to_string(*std::adjacent_find(owners.begin(), owners.end())));
  }
  std::vector<std::uint64_t> acc(words_, 0);
  for (ActionId a : set) {
    const auto words = mask(a);
    for (std::size_t w = 0; w < words_; ++w) acc[w] |= words[w];
  }
  std::size_t count = 0;
  for (std::uint64_t w : acc) count += static_cast<std::size_t>(std::popcount(w));
  return static_cast<double>(count);
}

double CoverageObjective::marginal_gain(std::span<const ActionId> set,
                                        ActionId x) const {
  const RobotId x_owner = owner(x);
  for (ActionId a : set) {
    if (owner(a) == x_owner) {
      throw FeasibilityError("robot " + std::to_string(x_owner) +
                             " already has an action in the set");
    }
  }
  std::vector<ActionId> with(set.begin(), set.end());
  const double base = evaluate(with);
  with.push_back(x);
  return evaluate(with) - base;
}

double CoverageObjective::singleton(ActionId x) const {
  check_action(x);
  return singletons_[x];
}

CoverageObjective::Accumulator::Accumulator(const CoverageObjective& objective)
    : objective_(&objective), mask_(objective.words_, 0) {}

double CoverageObjective::Accumulator::gain(ActionId x) const {
  const auto words = objective_->mask(x);
  std::size_t count = 0;
  for (std::size_t w = 0; w < mask_.size(); ++w) {
    count += static_cast<std::size_t>(std::popcount(words[w] & ~mask_[w]));
  }
  return static_cast<double>(count);
}

void CoverageObjective::Accumulator::add(ActionId x) {
  const auto words = objective_->mask(x);
  covered_ = 0;
  for (std::size_t w = 0; w < mask_.size(); ++w) {
    mask_[w] |= words[w];
    covered_ += static_cast<std::size_t>(std::popcount(mask_[w]));
  }
}

std::uint64_t partial_assignment_count(const CoverageObjective& objective) {
  std::uint64_t total = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t r = 0; r < objective.num_robots(); ++r) {
    const std::uint64_t options = objective.actions_of(static_cast<RobotId>(r)).size() + 1;
    if (total > kMax / options) return kMax;
    total *= options;
  }
  return total;
}

namespace {

// Tracks the minimum of (f(S) - f(S - x)) / f({x}) over inspected (S, x).
class RatioMinimizer {
 public:
  explicit RatioMinimizer(const CoverageObjective& f) : f_(f) {}

  // `choice[r]` is -1 (robot r absent) or an index into its action list.
  void inspect(const std::vector<int>& choice) {
    set_.clear();
    for (std::size_t r = 0; r < choice.size(); ++r) {
      if (choice[r] >= 0) set_.push_back(f_.actions_of(static_cast<RobotId>(r))[choice[r]]);
    }
    if (set_.empty()) return;
    const double full = f_.evaluate(set_);
    for (std::size_t i = 0; i < set_.size(); ++i) {
      const double single = f_.singleton(set_[i]);
      if (single <= 0.0) continue;
      rest_.assign(set_.begin(), set_.end());
      rest_.erase(rest_.begin() + static_cast<std::ptrdiff_t>(i));
      const double ratio = (full - f_.evaluate(rest_)) / single;
      ++ratios_;
      if (ratio < best_ - kValueTolerance) {
        best_ = ratio;
        witness_set_ = set_;
        witness_action_ = set_[i];
      }
    }
  }

  Curvature result(bool estimate) const {
    Curvature c;
    c.estimate = estimate;
    c.ratios = ratios_;
    if (witness_action_) {
      c.value = std::clamp(1.0 - best_, 0.0, 1.0);
      c.witness_set = witness_set_;
      c.witness_action = witness_action_;
    }
    return c;
  }

 private:
  const CoverageObjective& f_;
  double best_ = std::numeric_limits<double>::infinity();
  std::vector<ActionId> set_;
  std::vector<ActionId> rest_;
  std::vector<ActionId> witness_set_;
  std::optional<ActionId> witness_action_;
  std::uint64_t ratios_ = 0;
};

// Visits every feasible partial assignment as a mixed-radix counter.
template <typename Visit>
void for_each_partial_assignment(const CoverageObjective& f, Visit&& visit) {
  const std::size_t n = f.num_robots();
  std::vector<int> choice(n, -1);
  while (true) {
    visit(choice);
    std::size_t r = 0;
    for (; r < n; ++r) {
      const int options = static_cast<int>(f.actions_of(static_cast<RobotId>(r)).size());
      if (++choice[r] < options) break;
      choice[r] = -1;
    }
    if (r == n) return;
  }
}

}  // namespace

Curvature curvature_exact(const CoverageObjective& objective, std::uint64_t cap) {
  const std::uint64_t space = partial_assignment_count(objective);
  if (space > cap) {
    throw CapacityError("curvature_exact: " + std::to_string(space) +
                            " partial assignments; use curvature_sampled",
                        cap);
  }
  RatioMinimizer minimizer(objective);
  for_each_partial_assignment(objective,
                              [&](const std::vector<int>& c) { minimizer.inspect(c); });
  return minimizer.result(false);
}

Curvature curvature_sampled(const CoverageObjective& objective,
                            std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw InvalidParameter("curvature_sampled: n_samples must be >= 1");
  if (n_samples >= partial_assignment_count(objective)) {
    Curvature c = curvature_exact(objective, std::numeric_limits<std::uint64_t>::max());
    c.estimate = true;
    return c;
  }
  RatioMinimizer minimizer(objective);
  std::mt19937_64 rng(seed);
  const std::size_t n = objective.num_robots();
  std::vector<int> choice(n);
  for (std::uint64_t s = 0; s < n_samples; ++s) {
    for (std::size_t r = 0; r < n; ++r) {
      const auto options = objective.actions_of(static_cast<RobotId>(r)).size();
      std::uniform_int_distribution<int> pick(-1, static_cast<int>(options) - 1);
      choice[r] = pick(rng);
    }
    minimizer.inspect(choice);
  }
  return minimizer.result(true);
}

}  // namespace swarmguard
