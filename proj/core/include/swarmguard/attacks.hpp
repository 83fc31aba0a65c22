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

// Adversary models and the exhaustive max-min optimum.

#ifndef SWARMGUARD_ATTACKS_HPP_
#define SWARMGUARD_ATTACKS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "swarmguard/objective.hpp"
#include "swarmguard/robust_core.hpp"

namespace swarmguard {

struct AttackSet {
  std::vector<ActionId> removed;  // sorted
  double residual_value = 0.0;    // f(S - removed)
  friend bool operator==(const AttackSet&, const AttackSet&) = default;
};

// Number of subsets of an n-set with at most k elements, saturating.
std::uint64_t subsets_up_to(std::size_t n, std::size_t k);

// Exact minimizer of f(S - A) over A ⊆ S with |A| <= alpha. Among
// minimizers the largest removal wins, then the lexicographically smallest
// sorted id list; so alpha >= |S| removes everything. Throws CapacityError
// when subsets_up_to(|S|, alpha) exceeds `cap`.
AttackSet worst_case_attack(const CoverageObjective& objective,
                            std::span<const ActionId> set, int alpha,
                            std::uint64_t cap = kDefaultEnumerationCap);
AttackSet worst_case_attack(const CoverageObjective& objective,
                            const Assignment& assignment, int alpha,
                            std::uint64_t cap = kDefaultEnumerationCap);

// min(alpha, |S|) rounds, each removing the action whose removal lowers
// f the most (smallest id on ties).
AttackSet greedy_attack(const CoverageObjective& objective,
                        std::span<const ActionId> set, int alpha);
AttackSet greedy_attack(const CoverageObjective& objective,
                        const Assignment& assignment, int alpha);

struct OptimalValue {
  double value = 0.0;  // f*
  Assignment assignment;  // one maximizer
};

// f* = max over full assignments S of min over |A| <= alpha of f(S - A).
// Throws CapacityError when prod |X_i| * subsets_up_to(n, alpha) exceeds
// `cap`.
OptimalValue optimal_value(const CoverageObjective& objective, int alpha,
                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace swarmguard

#endif  // SWARMGUARD_ATTACKS_HPP_
