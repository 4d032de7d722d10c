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

namespace se2form {

// Wraps an angle to the canonical interval (-pi, pi].
double WrapAngle(double radians);

// Planar rotation stored as its canonical angle; the 2x2 matrix is
// materialized on demand. Composition is angle addition followed by a wrap,
// so chains of compositions never drift away from orthonormality.
class Rotation {
 public:
  Rotation() = default;

  static Rotation FromAngle(double radians) { return Rotation(WrapAngle(radians)); }

  double angle() const { return angle_; }
  Eigen::Matrix2d matrix() const;

  Eigen::Vector2d operator*(const Eigen::Vector2d& v) const;
  Rotation operator*(const Rotation& other) const {
    return FromAngle(angle_ + other.angle_);
  }
  Rotation inverse() const { return FromAngle(-angle_); }

 private:
  explicit Rotation(double wrapped) : angle_(wrapped) {}

  double angle_ = 0.0;
};

// Group element of SE(2): rotation plus position.
struct Pose {
  Rotation rotation;
  Eigen::Vector2d position = Eigen::Vector2d::Zero();

  // Homogeneous 3x3 embedding [R p; 0 1].
  Eigen::Matrix3d matrix() const;
};

// Body-frame velocity (omega, vx, vy). Unicycle inputs always carry vy = 0.
struct Twist {
  double omega = 0.0;
  double vx = 0.0;
  double vy = 0.0;

  static Twist Unicycle(double omega, double v) { return Twist{omega, v, 0.0}; }
};

// so(2) generator: omega -> [[0, -omega], [omega, 0]].
Eigen::Matrix2d Hat(double omega);

// Inverse of Hat. The input must be antisymmetric within 1e-9 per entry;
// anything else throws std::invalid_argument.
double Vee(const Eigen::Matrix2d& m);

Pose Compose(const Pose& a, const Pose& b);
inline Pose operator*(const Pose& a, const Pose& b) { return Compose(a, b); }

Pose Inverse(const Pose& g);

// Relative configuration of b expressed in the frame of a: a^{-1} b.
Pose Relative(const Pose& a, const Pose& b);

// Adjoint action of g on a twist: Ad_g xi = (omega, R nu - omega J p)
// with J = Hat(1). Equals the 3x3 conjugation g xi^ g^{-1}.
Twist AdjointTwist(const Pose& g, const Twist& xi);

// Closed-form exponential of a constant twist applied for duration h:
// heading advances by omega*h and the position by V(theta) nu h, where
// V(theta) = (1/theta) [[sin t, -(1-cos t)], [1-cos t, sin t]]. Below
// |theta| = 1e-6 a two-term Taylor expansion of V is used.
Pose ExpTwist(const Twist& xi, double h);

}  // namespace se2form
