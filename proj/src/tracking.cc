// Copyright 2026 The se2form Authors
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

#include "se2form/tracking.h"

#include <cmath>
#include <numbers>

#include "se2form/error.h"
#include "se2form/log.h"

namespace se2form {
namespace {

const Eigen::Vector2d kE1(1.0, 0.0);
const Eigen::Vector2d kE2(0.0, 1.0);

// Margin around pi for flagging an initial heading error at the antipode.
constexpr double kAntipodeMargin = 1.0e-9;

}  // namespace

TargetSignal TargetSignal::FromTwist(const Pose& pose, double v, double omega,
                                     double v_rate) {
  TargetSignal t;
  t.pose = pose;
  t.world_velocity = v * (pose.rotation * kE1);
  t.feedforward_heading = pose.rotation;
  t.feedforward_speed = v;
  t.feedforward_speed_rate = v_rate;
  t.feedforward_omega = omega;
  return t;
}

double LyapunovValue(const Eigen::Vector2d& position_error,
                     double heading_error) {
  // 2 (1 - cos x) written as 4 sin^2(x/2) to keep precision near zero.
  const double s = std::sin(0.5 * heading_error);
  return 0.5 * position_error.squaredNorm() + 4.0 * s * s;
}

Eigen::Vector2d VirtualControl(const Eigen::Vector2d& p_self,
                               const Eigen::Vector2d& p_target,
                               const Rotation& target_heading, double v_target,
                               const TrackingGains& gains, Saturation sat) {
  return -gains.k1 * Sat(sat, Eigen::Vector2d(p_self - p_target)) +
         v_target * (target_heading * kE1);
}

double SpeedFromVirtual(const Eigen::Vector2d& u, double epsilon) {
  const double norm = u.norm();
  if (norm <= epsilon) {
    throw DegenerateDirectionError("virtual control norm " +
                                   std::to_string(norm) +
                                   " has no usable direction");
  }
  return norm;
}

Rotation IntermediateAttitude(const Eigen::Vector2d& u, double epsilon) {
  if (u.norm() <= epsilon) {
    throw DegenerateDirectionError(
        "virtual control has no usable direction for the attitude");
  }
  return Rotation::FromAngle(std::atan2(u.y(), u.x()));
}

Eigen::Vector2d VirtualControlRate(
    const Eigen::Vector2d& position_error, const Eigen::Vector2d& v_self_world,
    const Eigen::Vector2d& v_target_world, const Rotation& target_heading,
    double v_target, double dv_target, double omega_target,
    const TrackingGains& gains, Saturation sat) {
  const Eigen::Vector2d error_rate = v_self_world - v_target_world;
  return -gains.k1 * (SatJacobian(sat, position_error) * error_rate) +
         dv_target * (target_heading * kE1) +
         v_target * omega_target * (target_heading * kE2);
}

double IntermediateRate(const Eigen::Vector2d& u, const Eigen::Vector2d& u_dot,
                        double epsilon) {
  const double norm_sq = u.squaredNorm();
  if (norm_sq <= epsilon * epsilon) {
    throw DegenerateDirectionError(
        "virtual control has no usable direction for the attitude rate");
  }
  return (u.x() * u_dot.y() - u.y() * u_dot.x()) / norm_sq;
}

double HeadingControl(const Rotation& self, const Rotation& intermediate,
                      double varpi, const TrackingGains& gains, Saturation sat) {
  const double theta = WrapAngle(self.angle() - intermediate.angle());
  return -gains.k2 * Sat(sat, 2.0 * std::sin(theta)) + varpi;
}

TrackingController::TrackingController(const TrackingGains& gains,
                                       Saturation sat, DegenerateMode mode,
                                       double direction_epsilon)
    : gains_(gains), sat_(sat), mode_(mode), epsilon_(direction_epsilon) {}

ControlCommand TrackingController::Compute(const VehicleState& self,
                                           const TargetSignal& target) {
  const Eigen::Vector2d p_err = self.pose.position - target.pose.position;
  const Eigen::Vector2d u =
      VirtualControl(self.pose.position, target.pose.position,
                     target.feedforward_heading, target.feedforward_speed,
                     gains_, sat_);

  double v;
  Rotation attitude;
  double varpi;
  if (u.norm() <= epsilon_) {
    if (mode_ == DegenerateMode::kStrict || !hold_.has_value()) {
      throw DegenerateDirectionError(
          "virtual control degenerated and no held direction is available");
    }
    attitude = hold_->attitude;
    v = hold_->v;
    varpi = 0.0;
  } else {
    v = u.norm();
    attitude = IntermediateAttitude(u, epsilon_);
    const Eigen::Vector2d v_self_world = v * (self.pose.rotation * kE1);
    const Eigen::Vector2d u_dot = VirtualControlRate(
        p_err, v_self_world, target.world_velocity, target.feedforward_heading,
        target.feedforward_speed, target.feedforward_speed_rate,
        target.feedforward_omega, gains_, sat_);
    varpi = IntermediateRate(u, u_dot, epsilon_);
    hold_ = Hold{attitude, v};
  }

  const double theta_err = WrapAngle(self.pose.rotation.angle() - attitude.angle());
  if (first_compute_) {
    first_compute_ = false;
    if (std::numbers::pi - std::abs(theta_err) < kAntipodeMargin) {
      initial_attitude_excluded_ = true;
      LogWarn(
          "initial relative attitude sits at the excluded antipode "
          "(heading error pi); convergence is not guaranteed from here");
    }
  }

  ControlCommand cmd;
  cmd.v = v;
  cmd.omega = HeadingControl(self.pose.rotation, attitude, varpi, gains_, sat_);
  cmd.error.position = p_err;
  cmd.error.heading = theta_err;
  cmd.error.lyapunov = LyapunovValue(p_err, theta_err);
  cmd.error.perturbation =
      v * (self.pose.rotation * kE1 - attitude * kE1);
  return cmd;
}

}  // namespace se2form
