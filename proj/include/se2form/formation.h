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

#include <span>
#include <string_view>

#include "se2form/se2.h"
#include "se2form/signal.h"

namespace se2form {

// Constant body-frame position offset of a follower in its parent's frame
// (x longitudinal, y transverse). The relative heading is not free: it is
// determined by the parent's motion, see HeadingOffset.
struct FormationOffset {
  double x = 0.0;
  double y = 0.0;
};

enum class FormationClass {
  kStrictRigidBody,     // constant v0/omega0: offsets rigid in every frame
  kWeakRigidBody,       // distances constant, relative headings breathe
  kParallel,            // synchronized (or anti-synchronized) headings
  kTranslationalLine,   // straight-line motion, omega0 = 0
};

std::string_view ToString(FormationClass c);

// Relative heading a follower must keep so the offset stays constant while
// both bodies move forward: atan2(omega*x, v - omega*y). Throws
// SingularTaskError when both arguments vanish (excluded task geometry).
double HeadingOffset(const FormationOffset& offset, double v, double omega);

// Analytic time derivative of HeadingOffset given the parent's input rates:
// [(v - omega y) domega x - omega x (dv - domega y)]
//   / [(omega x)^2 + (v - omega y)^2].
double HeadingOffsetRate(const FormationOffset& offset, double v, double omega,
                         double v_rate, double omega_rate);

// Full desired relative configuration: rotation by the heading offset and
// translation by the position offset.
Pose DesiredConfig(const FormationOffset& offset, double heading_offset);

// Body twist a follower needs on its orbit: the adjoint transport of the
// parent's twist through the inverse desired configuration plus the
// heading-offset rate on the angular channel. The lateral component must
// cancel (it does for any HeadingOffset-constructed configuration); a
// residual at or above 1e-9 throws InfeasibleConfigurationError, below it
// the component is forced to exactly zero.
Twist AdjointVelocity(const Pose& config, const Twist& parent_twist,
                      double heading_offset_rate);

// Relative configuration between two siblings' desired configurations,
// both expressed in the common parent frame: parent_config^{-1} child_config.
Pose ComposeOffsets(const Pose& parent_config, const Pose& child_config);

// Where the follower's orbit sits right now: parent pose composed with the
// desired relative configuration.
Pose AdjointOrbitPose(const Pose& parent_pose, const Pose& config);

// Classifies the motion pattern a task set induces under the given leader
// profile, sampling [0, horizon] at the given step:
//   TranslationalLine  if omega0 is identically zero,
//   Parallel           if every edge offset has x = 0 (and some y != 0),
//   StrictRigidBody    if v0/omega0 is constant (relative tolerance 1e-9),
//   WeakRigidBody      otherwise.
// All-zero offsets degenerate to StrictRigidBody with a logged warning.
// Excluded singular tasks throw SingularTaskError; a non-positive sampled
// leader speed throws ValidationError.
FormationClass Classify(std::span<const FormationOffset> offsets,
                        const LeaderProfile& profile, double horizon,
                        double step);

}  // namespace se2form
