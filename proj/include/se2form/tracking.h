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

#pragma once

#include <optional>

#include <Eigen/Core>

#include "se2form/saturation.h"
#include "se2form/se2.h"
#include "se2form/vehicle.h"

namespace se2form {

// Norm threshold below which the virtual control vector has no usable
// direction.
inline constexpr double kDirectionEpsilon = 1.0e-9;

struct TrackingGains {
  double k1 = 0.0;  // position feedback
  double k2 = 0.0;  // heading feedback
};

// Everything the controller needs to know about the body it tracks. For a
// physical leader all fields derive from its pose and inputs (FromTwist);
// a formation edge may point the feedforward fields at a different body
// than the position target (see network.h).
struct TargetSignal {
  Pose pose;                                             // position target
  Eigen::Vector2d world_velocity = Eigen::Vector2d::Zero();  // d/dt of pose.position
  Rotation feedforward_heading;
  double feedforward_speed = 0.0;
  double feedforward_speed_rate = 0.0;
  double feedforward_omega = 0.0;

  static TargetSignal FromTwist(const Pose& pose, double v, double omega,
                                double v_rate);
};

// Per-step tracking diagnostics.
struct TrackingError {
  Eigen::Vector2d position = Eigen::Vector2d::Zero();  // p_self - p_target
  double heading = 0.0;  // self heading relative to the intermediate attitude
  double lyapunov = 0.0;
  // Residual between the realized and ideal velocity directions:
  // v (R_self - R_intermediate) e1. Its norm is bounded by
  // v * 2|sin(heading/2)|.
  Eigen::Vector2d perturbation = Eigen::Vector2d::Zero();
};

struct ControlCommand {
  double v = 0.0;
  double omega = 0.0;
  TrackingError error;
};

// Energy of the error pair: 1/2 |p|^2 + 2 (1 - cos theta). Zero exactly at
// the error-system equilibrium, positive elsewhere.
double LyapunovValue(const Eigen::Vector2d& position_error, double heading_error);

// Virtual position-loop control u = -k1 sigma(p_self - p_target)
// + v_target R_target e1. The commanded forward speed is |u| and the
// commanded heading is the direction of u.
Eigen::Vector2d VirtualControl(const Eigen::Vector2d& p_self,
                               const Eigen::Vector2d& p_target,
                               const Rotation& target_heading, double v_target,
                               const TrackingGains& gains, Saturation sat);

// |u|; throws DegenerateDirectionError at or below epsilon.
double SpeedFromVirtual(const Eigen::Vector2d& u,
                        double epsilon = kDirectionEpsilon);

// Attitude whose first column is u/|u|; throws DegenerateDirectionError at
// or below epsilon.
Rotation IntermediateAttitude(const Eigen::Vector2d& u,
                              double epsilon = kDirectionEpsilon);

// Time derivative of VirtualControl along the flow:
// du = -k1 D_sigma(p_err) (v_self_world - v_target_world)
//      + dv_target R_target e1 + v_target omega_target R_target e2.
Eigen::Vector2d VirtualControlRate(
    const Eigen::Vector2d& position_error, const Eigen::Vector2d& v_self_world,
    const Eigen::Vector2d& v_target_world, const Rotation& target_heading,
    double v_target, double dv_target, double omega_target,
    const TrackingGains& gains, Saturation sat);

// Rotation rate of the intermediate attitude: (u x du) / |u|^2, i.e. the
// second column of the attitude dotted with du/|u|.
double IntermediateRate(const Eigen::Vector2d& u, const Eigen::Vector2d& u_dot,
                        double epsilon = kDirectionEpsilon);

// Heading-loop control: -k2 sigma(2 sin(theta_err)) + varpi, where
// 2 sin(theta_err) is the vee of R_err - R_err' for
// R_err = R_intermediate' R_self.
double HeadingControl(const Rotation& self, const Rotation& intermediate,
                      double varpi, const TrackingGains& gains, Saturation sat);

// What to do when the virtual control loses its direction: reuse the last
// intermediate attitude and commanded speed, or abort.
enum class DegenerateMode { kHold, kStrict };

// Two-stage forward-motion tracking controller. Stage one shapes a virtual
// planar control u whose norm becomes the (always positive) forward speed;
// stage two steers the heading toward the direction of u while feeding
// forward that direction's own rotation rate. Stateful only through the
// degenerate-direction hold latch and a first-step attitude check.
class TrackingController {
 public:
  TrackingController(const TrackingGains& gains, Saturation sat,
                     DegenerateMode mode = DegenerateMode::kHold,
                     double direction_epsilon = kDirectionEpsilon);

  // One control evaluation. Throws DegenerateDirectionError when |u| falls
  // to the direction epsilon in strict mode, or in hold mode before any
  // previous direction exists.
  ControlCommand Compute(const VehicleState& self, const TargetSignal& target);

  // True once a first compute saw an initial relative attitude at the
  // excluded antipode (trace of the relative rotation = -2, i.e. the
  // heading error starts at pi).
  bool initial_attitude_excluded() const { return initial_attitude_excluded_; }

 private:
  TrackingGains gains_;
  Saturation sat_;
  DegenerateMode mode_;
  double epsilon_;
  bool first_compute_ = true;
  bool initial_attitude_excluded_ = false;
  struct Hold {
    Rotation attitude;
    double v;
  };
  std::optional<Hold> hold_;
};

}  // namespace se2form
