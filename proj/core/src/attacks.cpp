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

#include "swarmguard/attacks.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "swarmguard/errors.hpp"

namespace swarmguard {

std::uint64_t subsets_up_to(std::size_t n, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  k = std::min(k, n);
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, i)
  for (std::size_t i = 0; i <= k; ++i) {
    if (total > kMax - binom) return kMax;
    total += binom;
    if (i == k) break;
    // C(n, i+1) = C(n, i) * (n - i) / (i + 1), exact in this order.
    const std::uint64_t num = n - i;
    if (binom > kMax / num) return kMax;
    binom = binom * num / (i + 1);
  }
  return total;
}

namespace {

double residual(const CoverageObjective& f, std::span<const ActionId> set,
                const std::vector<bool>& removed) {
  CoverageObjective::Accumulator acc(f);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!removed[i]) acc.add(set[i]);
  }
  return acc.value();
}

std::vector<ActionId> sorted_set(const CoverageObjective& f, std::span<const ActionId> set) {
  std::vector<ActionId> s(set.begin(), set.end());
  std::sort(s.begin(), s.end());
  f.evaluate(s);  // feasibility and id checks
  return s;
}

}  // namespace

AttackSet worst_case_attack(const CoverageObjective& objective,
                            std::span<const ActionId> set, int alpha,
                            std::uint64_t cap) {
  if (alpha < 0) throw InvalidParameter("attack budget must be >= 0");
  const auto s = sorted_set(objective, set);
  const std::size_t n = s.size();
  const std::size_t budget = std::min<std::size_t>(static_cast<std::size_t>(alpha), n);
  const std::uint64_t count = subsets_up_to(n, budget);
  if (count > cap) {
    throw CapacityError("worst_case_attack: " + std::to_string(count) +
                            " candidate removals; use greedy_attack",
                        cap);
  }

  AttackSet best;
  best.residual_value = std::numeric_limits<double>::infinity();
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> idx;
  // Larger removals first, each size in lexicographic order; only a strict
  // improvement replaces the incumbent.
  for (std::size_t k = budget + 1; k-- > 0;) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::fill(removed.begin(), removed.end(), false);
      for (std::size_t i : idx) removed[i] = true;
      const double value = residual(objective, s, removed);
      if (value < best.residual_value - kValueTolerance) {
        best.residual_value = value;
        best.removed.clear();
        for (std::size_t i : idx) best.removed.push_back(s[i]);
      }
      // Next k-combination of {0..n-1}.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return best;
}

AttackSet worst_case_attack(const CoverageObjective& objective,
                            const Assignment& assignment, int alpha,
                            std::uint64_t cap) {
  return worst_case_attack(objective, assignment.actions(), alpha, cap);
}

AttackSet greedy_attack(const CoverageObjective& objective,
                        std::span<const ActionId> set, int alpha) {
  if (alpha < 0) throw InvalidParameter("attack budget must be >= 0");
  const auto s = sorted_set(objective, set);
  const std::size_t n = s.size();
  std::vector<bool> removed(n, false);
  AttackSet out;
  out.residual_value = residual(objective, s, removed);
  const std::size_t rounds = std::min<std::size_t>(static_cast<std::size_t>(alpha), n);
  for (std::size_t round = 0; round < rounds; ++round) {
    std::size_t pick = n;
    double pick_value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (removed[i]) continue;
      removed[i] = true;
      const double value = residual(objective, s, removed);
      removed[i] = false;
      if (pick == n || value < pick_value - kValueTolerance) {
        pick = i;
        pick_value = value;
      }
    }
    removed[pick] = true;
    out.residual_value = pick_value;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (removed[i]) out.removed.push_back(s[i]);
  }
  return out;
}

AttackSet greedy_attack(const CoverageObjective& objective,
                        const Assignment& assignment, int alpha) {
  return greedy_attack(objective, assignment.actions(), alpha);
}

OptimalValue optimal_value(const CoverageObjective& objective, int alpha,
                           std::uint64_t cap) {
  if (alpha < 0) throw InvalidParameter("attack budget must be >= 0");
  const std::size_t n = objective.num_robots();
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t assignments = 1;
  for (std::size_t r = 0; r < n; ++r) {
    const std::uint64_t options = objective.actions_of(static_cast<RobotId>(r)).size();
    assignments = assignments > kMax / options ? kMax : assignments * options;
  }
  const std::uint64_t attacks = subsets_up_to(n, static_cast<std::size_t>(alpha));
  const std::uint64_t work = assignments > kMax / attacks ? kMax : assignments * attacks;
  if (work > cap) {
    throw CapacityError("optimal_value: " + std::to_string(assignments) +
                            " assignments x " + std::to_string(attacks) + " attacks",
                        cap);
  }

  OptimalValue best;
  best.value = -1.0;
  std::vector<std::size_t> digit(n, 0);
  std::vector<ActionId> set(n);
  while (true) {
    for (std::size_t r = 0; r < n; ++r) {
      set[r] = objective.actions_of(static_cast<RobotId>(r))[digit[r]];
    }
    const double value = worst_case_attack(objective, set, alpha, kMax).residual_value;
    if (value > best.value + kValueTolerance) {
      best.value = value;
      best.assignment = {};
      for (std::size_t r = 0; r < n; ++r) {
        best.assignment.chosen[static_cast<RobotId>(r)] = {set[r], Provenance::kGreedy};
      }
    }
    // Advance the mixed-radix counter, last robot fastest.
    std::size_t r = n;
    while (r > 0) {
      --r;
      if (++digit[r] < objective.actions_of(static_cast<RobotId>(r)).size()) break;
      digit[r] = 0;
      if (r == 0) {
        r = n;  // wrapped around
        break;
      }
    }
    if (n == 0 || (r == n)) break;
  }
  if (best.value < 0.0) best.value = 0.0;
  return best;
}

}  // namespace swarmguard
