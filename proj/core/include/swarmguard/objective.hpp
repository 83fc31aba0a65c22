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

// Coverage objective: f(S) is the number of targets inside the union of
// the footprints of the actions in S. It is normalized, monotone and
// submodular.

#ifndef SWARMGUARD_OBJECTIVE_HPP_
#define SWARMGUARD_OBJECTIVE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swarmguard/scenario.hpp"

namespace swarmguard {

// Absolute tolerance used before tie-breaking when comparing objective
// values. Coverage values are integers, so comparisons are exact in
// practice.
inline constexpr double kValueTolerance = 1e-9;

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Counts objective evaluations. One marginal-gain query or one value query
// is one evaluation.
struct EvalTally {
  std::uint64_t evaluations = 0;
};

class CoverageObjective {
 public:
  // Coverage of the scenario's own target positions.
  explicit CoverageObjective(const Scenario& scenario);
  // Coverage of `target_positions` (e.g. filter estimates) by the
  // scenario's actions.
  CoverageObjective(const Scenario& scenario,
                    std::span<const Point> target_positions);

  std::size_t num_actions() const { return owners_.size(); }
  std::size_t num_robots() const { return robot_actions_.size(); }
  std::size_t num_targets() const { return num_targets_; }

  RobotId owner(ActionId action) const;
  const std::vector<ActionId>& actions_of(RobotId robot) const;
  std::vector<TargetId> covered_targets(ActionId action) const;

  // f(S). Throws FeasibilityError if two actions share an owner and
  // LookupError on unknown ids.
  double evaluate(std::span<const ActionId> set) const;
  // f(S + x) - f(S). Throws FeasibilityError if x's owner already has an
  // action in S (this includes x in S).
  double marginal_gain(std::span<const ActionId> set, ActionId x) const;
  // f({x}), precomputed.
  double singleton(ActionId x) const;

  // Incremental evaluation state used by the greedy routines. Holds the
  // covered-target mask of the actions added so far; gain() equals
  // marginal_gain() without re-validating feasibility.
  class Accumulator {
   public:
    explicit Accumulator(const CoverageObjective& objective);
    double value() const { return static_cast<double>(covered_); }
    double gain(ActionId x) const;
    void add(ActionId x);

   private:
    const CoverageObjective* objective_;
    std::vector<std::uint64_t> mask_;
    std::size_t covered_ = 0;
  };

 private:
  void build(const Scenario& scenario, std::span<const Point> targets);
  void check_action(ActionId action) const;
  std::span<const std::uint64_t> mask(ActionId action) const {
    return {masks_.data() + static_cast<std::size_t>(action) * words_, words_};
  }

  std::size_t num_targets_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> masks_;  // num_actions * words_
  std::vector<RobotId> owners_;
  std::vector<std::vector<ActionId>> robot_actions_;
  std::vector<double> singletons_;
};

// Curvature of f over feasible partial assignments (at most one action per
// robot): 1 - min over S and x in S with f({x}) > 0 of
// (f(S) - f(S - x)) / f({x}). Zero when every singleton is worthless.
struct Curvature {
  double value = 0.0;
  std::vector<ActionId> witness_set;
  std::optional<ActionId> witness_action;
  bool estimate = false;
  // Number of (S, x) ratios inspected.
  std::uint64_t ratios = 0;
};

// Number of feasible partial assignments, saturating at UINT64_MAX.
std::uint64_t partial_assignment_count(const CoverageObjective& objective);

// Exhaustive. Throws CapacityError when partial_assignment_count exceeds
// `cap`; use curvature_sampled instead.
Curvature curvature_exact(const CoverageObjective& objective,
                          std::uint64_t cap = kDefaultEnumerationCap);

// Minimizes the same ratio over `n_samples` uniformly drawn partial
// assignments, so the result is a lower bound on the exact curvature.
// Falls back to exhaustive enumeration when n_samples covers the space.
Curvature curvature_sampled(const CoverageObjective& objective,
                            std::uint64_t n_samples, std::uint64_t seed);

}  // namespace swarmguard

#endif  // SWARMGUARD_OBJECTIVE_HPP_
