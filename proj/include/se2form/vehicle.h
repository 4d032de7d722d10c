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

#include <Eigen/Core>

#include "se2form/se2.h"

namespace se2form {

// Unicycle state: pose plus the most recently applied inputs (kept for
// logging and for exporting per-step commanded speeds).
struct VehicleState {
  Pose pose;
  double v = 0.0;
  double omega = 0.0;
};

// Advances the unicycle exactly under zero-order-hold inputs (v, omega)
// for h seconds: pose <- pose * ExpTwist((omega, v, 0), h). The exact group
// step keeps the non-holonomic constraint sharp at machine precision and
// composes exactly across step subdivisions (h > 0). Non-finite inputs
// throw std::invalid_argument.
VehicleState Step(const VehicleState& state, double v, double omega, double h);

// Lateral body-frame component of a world-frame velocity: e2' R' v_world.
// Zero for any velocity a unicycle at this pose can realize.
double LateralVelocity(const Pose& pose, const Eigen::Vector2d& world_velocity);

}  // namespace se2form
