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

#include "se2form/vehicle.h"

#include <cmath>
#include <stdexcept>

namespace se2form {

VehicleState Step(const VehicleState& state, double v, double omega, double h) {
  if (!std::isfinite(v) || !std::isfinite(omega) || !std::isfinite(h)) {
    throw std::invalid_argument("Step: non-finite input");
  }
  VehicleState next;
  next.pose = state.pose * ExpTwist(Twist::Unicycle(omega, v), h);
  next.v = v;
  next.omega = omega;
  return next;
}

double LateralVelocity(const Pose& pose, const Eigen::Vector2d& world_velocity) {
  const Eigen::Vector2d body = pose.rotation.inverse() * world_velocity;
  return body.y();
}

}  // namespace se2form
