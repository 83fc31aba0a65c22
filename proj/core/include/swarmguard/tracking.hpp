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

// Multi-round target tracking: mobile targets under a noisy
// constant-velocity model, per-target Kalman filters, and per-round
// planning, attack and scoring.

#ifndef SWARMGUARD_TRACKING_HPP_
#define SWARMGUARD_TRACKING_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "swarmguard/planner.hpp"
#include "swarmguard/scenario.hpp"

namespace swarmguard {

// Linear-Gaussian model on the state [x, y, vx, vy] with position
// measurements.
struct MotionModel {
  Eigen::Matrix4d transition = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d process_noise = Eigen::Matrix4d::Zero();
  Eigen::Matrix2d measurement_noise = Eigen::Matrix2d::Zero();

  // Constant velocity over `dt` seconds driven by white acceleration noise
  // of standard deviation `accel_sigma` (m/s^2), with isotropic position
  // measurement noise `measurement_sigma` (m).
  static MotionModel constant_velocity(double dt, double accel_sigma,
                                       double measurement_sigma);
};

struct KalmanState {
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  Eigen::Matrix4d covariance = Eigen::Matrix4d::Identity();
};

// Eigenvalues must be >= -kPsdTolerance; asymmetry is measured as the
// largest |A - A^T| entry.
inline constexpr double kPsdTolerance = 1e-9;

double min_eigenvalue(const Eigen::Matrix4d& matrix);
double max_asymmetry(const Eigen::Matrix4d& matrix);

// Throws InvalidState unless the state's covariance and the model's noise
// covariances are symmetric PSD and the transition is finite.
void check_model(const MotionModel& model);
void check_state(const KalmanState& state);

KalmanState kf_predict(const KalmanState& state, const MotionModel& model);
// Joseph-form position update; the returned covariance is symmetrized.
KalmanState kf_update(const KalmanState& state, const MotionModel& model,
                      Point measurement);

// Advances each target by the transition plus a process-noise draw.
std::vector<Target> step_targets(std::span<const Target> targets,
                                 const MotionModel& model,
                                 std::mt19937_64& rng);

struct EpisodeConfig {
  Planner planner = Planner::kDrm;
  Attacker attacker = Attacker::kWorstCase;
  int rounds = 50;
  std::uint64_t seed = 0;
  double dt = 1.0;
  double accel_sigma = 0.05;
  double measurement_sigma = 0.2;
  double initial_position_sigma = 0.5;
  double initial_velocity_sigma = 0.5;
  // When positive, every target starts with this speed along a random
  // heading; otherwise the scenario's velocities are used.
  double target_speed = 0.0;
  int jobs = 1;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct RoundRecord {
  int round = 0;
  std::vector<Point> robot_positions;
  std::vector<Point> target_positions;  // ground truth
  std::vector<Point> estimates;         // filter means used for planning
  Assignment assignment;
  std::vector<ActionId> removed;
  double planned_coverage = 0.0;  // f over estimates, before the attack
  int covered = 0;                // true targets covered after the attack
  int cliques = 0;
  double min_covariance_eigenvalue = 0.0;
  double max_covariance_asymmetry = 0.0;
};

struct EpisodeLog {
  EpisodeConfig config;
  int attack_budget = 0;
  std::vector<RoundRecord> records;

  double mean_covered() const;
};

// Each round: filter update from noisy measurements, plan on the estimate
// means, attack the plan (attacked robots sense nothing but still relay),
// score against true positions, move robots flight_distance along their
// chosen axis, advance targets and predict. Throws InvalidParameter when
// rounds < 1; planner or attacker errors are rethrown with the round index.
EpisodeLog run_episode(const Scenario& scenario, const EpisodeConfig& config);

}  // namespace swarmguard

#endif  // SWARMGUARD_TRACKING_HPP_
