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

#include "swarmguard/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "swarmguard/errors.hpp"

namespace swarmguard {

MotionModel MotionModel::constant_velocity(double dt, double accel_sigma,
                                           double measurement_sigma) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidParameter("dt must be > 0");
  if (!(accel_sigma >= 0.0) || !(measurement_sigma >= 0.0)) {
    throw InvalidParameter("noise standard deviations must be >= 0");
  }
  MotionModel model;
  model.transition(0, 2) = dt;
  model.transition(1, 3) = dt;
  const double q = accel_sigma * accel_sigma;
  const double dt2 = dt * dt;
  const double dt3 = dt2 * dt;
  const double dt4 = dt3 * dt;
  for (int axis = 0; axis < 2; ++axis) {
    const int p = axis;
    const int v = axis + 2;
    model.process_noise(p, p) = q * dt4 / 4.0;
    model.process_noise(p, v) = q * dt3 / 2.0;
    model.process_noise(v, p) = q * dt3 / 2.0;
    model.process_noise(v, v) = q * dt2;
  }
  model.measurement_noise = Eigen::Matrix2d::Identity() * measurement_sigma * measurement_sigma;
  return model;
}

double min_eigenvalue(const Eigen::Matrix4d& matrix) {
  const Eigen::Matrix4d sym = 0.5 * (matrix + matrix.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double max_asymmetry(const Eigen::Matrix4d& matrix) {
  return (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
}

namespace {

template <typename Matrix>
void require_psd(const Matrix& matrix, const std::string& name) {
  if (!matrix.allFinite()) throw InvalidState(name + " has non-finite entries");
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if (asym > kPsdTolerance * scale) throw InvalidState(name + " is not symmetric");
  const Matrix sym = 0.5 * (matrix + matrix.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kPsdTolerance * scale) {
    throw InvalidState(name + " is not positive semidefinite");
  }
}

Eigen::Matrix4d symmetrized(const Eigen::Matrix4d& m) { return 0.5 * (m + m.transpose()); }

// Portable standard normal draw (Box-Muller on the scenario's uniform map).
double standard_normal(std::mt19937_64& rng) {
  double u1 = 0.0;
  do {
    u1 = unit_uniform(rng());
  } while (u1 <= 0.0);
  const double u2 = unit_uniform(rng());
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Square-root factor L with L L^T = cov for a symmetric PSD covariance.
template <typename Matrix>
Matrix noise_factor(const Matrix& cov) {
  const Matrix sym = 0.5 * (cov + cov.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  auto values = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * values.asDiagonal();
}

}  // namespace

void check_model(const MotionModel& model) {
  if (!model.transition.allFinite()) throw InvalidState("transition has non-finite entries");
  require_psd(model.process_noise, "process noise covariance");
  require_psd(model.measurement_noise, "measurement noise covariance");
}

void check_state(const KalmanState& state) {
  if (!state.mean.allFinite()) throw InvalidState("state mean has non-finite entries");
  require_psd(state.covariance, "state covariance");
}

KalmanState kf_predict(const KalmanState& state, const MotionModel& model) {
  check_state(state);
  check_model(model);
  KalmanState out;
  out.mean = model.transition * state.mean;
  out.covariance = symmetrized(model.transition * state.covariance *
                                   model.transition.transpose() +
                               model.process_noise);
  return out;
}

KalmanState kf_update(const KalmanState& state, const MotionModel& model, Point measurement) {
  check_state(state);
  check_model(model);
  Eigen::Matrix<double, 2, 4> h = Eigen::Matrix<double, 2, 4>::Zero();
  h(0, 0) = 1.0;
  h(1, 1) = 1.0;
  const Eigen::Vector2d z(measurement.x, measurement.y);
  const Eigen::Matrix2d innovation_cov =
      h * state.covariance * h.transpose() + model.measurement_noise;
  const Eigen::Matrix<double, 4, 2> gain =
      innovation_cov.ldlt().solve(h * state.covariance).transpose();
  if (!gain.allFinite()) throw InvalidState("singular innovation covariance");
  const Eigen::Matrix4d i_kh = Eigen::Matrix4d::Identity() - gain * h;
  KalmanState out;
  out.mean = state.mean + gain * (z - h * state.mean);
  out.covariance = symmetrized(i_kh * state.covariance * i_kh.transpose() +
                               gain * model.measurement_noise * gain.transpose());
  return out;
}

std::vector<Target> step_targets(std::span<const Target> targets, const MotionModel& model,
                                 std::mt19937_64& rng) {
  check_model(model);
  const Eigen::Matrix4d factor = noise_factor(model.process_noise);
  std::vector<Target> out(targets.begin(), targets.end());
  for (auto& target : out) {
    Eigen::Vector4d state(target.position.x, target.position.y, target.velocity.x,
                          target.velocity.y);
    Eigen::Vector4d draw;
    for (int i = 0; i < 4; ++i) draw(i) = standard_normal(rng);
    state = model.transition * state + factor * draw;
    target.position = {state(0), state(1)};
    target.velocity = {state(2), state(3)};
  }
  return out;
}

double EpisodeLog::mean_covered() const {
  if (records.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : records) sum += r.covered;
  return sum / static_cast<double>(records.size());
}

EpisodeLog run_episode(const Scenario& scenario, const EpisodeConfig& config) {
  if (config.rounds < 1) throw InvalidParameter("rounds must be >= 1");
  if (config.initial_position_sigma < 0.0 || config.initial_velocity_sigma < 0.0 ||
      config.target_speed < 0.0) {
    throw InvalidParameter("initial sigmas and target speed must be >= 0");
  }
  validate_scenario(scenario);
  const auto model =
      MotionModel::constant_velocity(config.dt, config.accel_sigma, config.measurement_sigma);
  const Eigen::Matrix2d meas_factor = noise_factor(model.measurement_noise);
  std::mt19937_64 rng(config.seed);

  std::vector<Target> truth = scenario.targets;
  if (config.target_speed > 0.0) {
    for (auto& t : truth) {
      const double heading = 2.0 * std::numbers::pi * unit_uniform(rng());
      t.velocity = {config.target_speed * std::cos(heading),
                    config.target_speed * std::sin(heading)};
    }
  }
  std::vector<KalmanState> filters(truth.size());
  std::vector<Point> robots = scenario.robot_positions();

  DistributedOptions options;
  options.jobs = config.jobs;
  options.enumeration_cap = config.enumeration_cap;

  EpisodeLog log;
  log.config = config;
  log.attack_budget = scenario.attack_budget;
  for (int round = 0; round < config.rounds; ++round) {
    const std::string context = "round " + std::to_string(round) + ": ";
    RoundRecord record;
    record.round = round;

    std::vector<Point> estimates(truth.size());
    for (std::size_t t = 0; t < truth.size(); ++t) {
      const Eigen::Vector2d noise =
          meas_factor * Eigen::Vector2d(standard_normal(rng), standard_normal(rng));
      const Point z{truth[t].position.x + noise(0), truth[t].position.y + noise(1)};
      if (round == 0) {
        filters[t].mean << z.x, z.y, 0.0, 0.0;
        filters[t].covariance = Eigen::Vector4d(
            config.initial_position_sigma * config.initial_position_sigma,
            config.initial_position_sigma * config.initial_position_sigma,
            config.initial_velocity_sigma * config.initial_velocity_sigma,
            config.initial_velocity_sigma * config.initial_velocity_sigma)
                                    .asDiagonal();
      } else {
        filters[t] = kf_update(filters[t], model, z);
      }
      estimates[t] = {filters[t].mean(0), filters[t].mean(1)};
    }

    Scenario world = relocate_robots(scenario, robots);
    world.targets = truth;
    const CoverageObjective planning(world, estimates);
    const CoverageObjective scoring(world);

    DistributedResult planned;
    AttackSet attack;
    try {
      planned = plan(config.planner, world, planning, options);
      attack = apply_attacker(config.attacker, scoring, planned.assignment,
                              scenario.attack_budget, config.enumeration_cap);
    } catch (const CapacityError& e) {
      throw e.in_context(context);
    } catch (const InvalidParameter& e) {
      throw InvalidParameter(context + e.what());
    }

    record.robot_positions = robots;
    record.target_positions.reserve(truth.size());
    for (const auto& t : truth) record.target_positions.push_back(t.position);
    record.estimates = estimates;
    record.planned_coverage = planning.evaluate(planned.assignment.actions());
    record.assignment = planned.assignment;
    record.removed = attack.removed;
    record.covered = static_cast<int>(std::lround(attack.residual_value));
    record.cliques = static_cast<int>(planned.partition.size());
    record.min_covariance_eigenvalue = std::numeric_limits<double>::infinity();
    for (const auto& f : filters) {
      record.min_covariance_eigenvalue =
          std::min(record.min_covariance_eigenvalue, min_eigenvalue(f.covariance));
      record.max_covariance_asymmetry =
          std::max(record.max_covariance_asymmetry, max_asymmetry(f.covariance));
    }
    if (filters.empty()) record.min_covariance_eigenvalue = 0.0;
    log.records.push_back(std::move(record));

    for (const auto& [robot, choice] : planned.assignment.chosen) {
      const Point dir = motion_direction(world.actions[static_cast<std::size_t>(choice.action)].kind);
      auto& p = robots[static_cast<std::size_t>(robot)];
      p.x += dir.x * scenario.geometry.flight_distance;
      p.y += dir.y * scenario.geometry.flight_distance;
    }
    truth = step_targets(truth, model, rng);
    for (auto& f : filters) f = kf_predict(f, model);
  }
  return log;
}

}  // namespace swarmguard
