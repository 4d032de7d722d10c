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

#include "se2form/formation.h"

#include <cmath>
#include <string>

#include "se2form/error.h"
#include "se2form/log.h"

namespace se2form {
namespace {

constexpr double kSingularTolerance = 1.0e-12;
constexpr double kLateralTolerance = 1.0e-9;
constexpr double kRatioRelTolerance = 1.0e-9;

long SampleCount(double horizon, double step) {
  return static_cast<long>(std::floor(horizon / step + 1.0e-9)) + 1;
}

}  // namespace

std::string_view ToString(FormationClass c) {
  switch (c) {
    case FormationClass::kStrictRigidBody:
      return "StrictRigidBody";
    case FormationClass::kWeakRigidBody:
      return "WeakRigidBody";
    case FormationClass::kParallel:
      return "Parallel";
    case FormationClass::kTranslationalLine:
      return "TranslationalLine";
  }
  return "?";
}

double HeadingOffset(const FormationOffset& offset, double v, double omega) {
  const double a = omega * offset.x;
  const double b = v - omega * offset.y;
  if (std::abs(a) < kSingularTolerance && std::abs(b) < kSingularTolerance) {
    throw SingularTaskError(
        "heading offset undefined: omega*x and v - omega*y both vanish "
        "(x = " + std::to_string(offset.x) + ", y = " + std::to_string(offset.y) +
        ")");
  }
  return std::atan2(a, b);
}

double HeadingOffsetRate(const FormationOffset& offset, double v, double omega,
                         double v_rate, double omega_rate) {
  const double a = omega * offset.x;
  const double b = v - omega * offset.y;
  const double a_rate = omega_rate * offset.x;
  const double b_rate = v_rate - omega_rate * offset.y;
  return (b * a_rate - a * b_rate) / (a * a + b * b);
}

Pose DesiredConfig(const FormationOffset& offset, double heading_offset) {
  Pose config;
  config.rotation = Rotation::FromAngle(heading_offset);
  config.position = Eigen::Vector2d(offset.x, offset.y);
  return config;
}

Twist AdjointVelocity(const Pose& config, const Twist& parent_twist,
                      double heading_offset_rate) {
  Twist t = AdjointTwist(Inverse(config), parent_twist);
  t.omega += heading_offset_rate;
  if (std::abs(t.vy) >= kLateralTolerance) {
    throw InfeasibleConfigurationError(
        "configuration demands lateral body velocity " + std::to_string(t.vy));
  }
  t.vy = 0.0;
  return t;
}

Pose ComposeOffsets(const Pose& parent_config, const Pose& child_config) {
  return Relative(parent_config, child_config);
}

Pose AdjointOrbitPose(const Pose& parent_pose, const Pose& config) {
  return Compose(parent_pose, config);
}

FormationClass Classify(std::span<const FormationOffset> offsets,
                        const LeaderProfile& profile, double horizon,
                        double step) {
  const long samples = SampleCount(horizon, step);

  bool omega_always_zero = true;
  bool omega_some_zero = false;
  bool ratio_constant = true;
  double ratio0 = 0.0;
  bool ratio0_set = false;
  for (long k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) * step;
    const double v = profile.Speed(t);
    const double w = profile.Omega(t);
    if (!(v > 0.0)) {
      throw ValidationError("leader speed must stay positive (t = " +
                            std::to_string(t) + ")");
    }
    for (const FormationOffset& offset : offsets) {
      if (std::abs(w * offset.x) < kSingularTolerance &&
          std::abs(v - w * offset.y) < kSingularTolerance) {
        throw SingularTaskError(
            "excluded task: heading offset undefined at t = " +
            std::to_string(t));
      }
    }
    if (w != 0.0) {
      omega_always_zero = false;
      const double ratio = v / w;
      if (!ratio0_set) {
        ratio0 = ratio;
        ratio0_set = true;
      } else if (std::abs(ratio - ratio0) >
                 kRatioRelTolerance * std::max(1.0, std::abs(ratio0))) {
        ratio_constant = false;
      }
    } else {
      omega_some_zero = true;
    }
  }

  if (omega_always_zero) return FormationClass::kTranslationalLine;
  // omega vanishes somewhere but not everywhere: no constant ratio.
  if (omega_some_zero) ratio_constant = false;

  bool all_x_zero = true;
  bool all_zero = true;
  bool some_y_nonzero = false;
  for (const FormationOffset& offset : offsets) {
    if (offset.x != 0.0) all_x_zero = false;
    if (offset.x != 0.0 || offset.y != 0.0) all_zero = false;
    if (offset.y != 0.0) some_y_nonzero = true;
  }
  if (all_zero) {
    LogWarn("all formation offsets are zero; the task degenerates to plain "
            "trajectory tracking");
    return FormationClass::kStrictRigidBody;
  }
  if (all_x_zero && some_y_nonzero) return FormationClass::kParallel;
  return ratio_constant ? FormationClass::kStrictRigidBody
                        : FormationClass::kWeakRigidBody;
}

}  // namespace se2form
