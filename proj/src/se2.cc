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

#include "se2form/se2.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace se2form {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAntisymmetryTolerance = 1.0e-9;
constexpr double kSmallAngle = 1.0e-6;

}  // namespace

double WrapAngle(double radians) {
  double wrapped = std::remainder(radians, kTwoPi);
  if (wrapped <= -std::numbers::pi) wrapped += kTwoPi;
  return wrapped;
}

Eigen::Matrix2d Rotation::matrix() const {
  const double c = std::cos(angle_);
  const double s = std::sin(angle_);
  Eigen::Matrix2d m;
  m << c, -s, s, c;
  return m;
}

Eigen::Vector2d Rotation::operator*(const Eigen::Vector2d& v) const {
  const double c = std::cos(angle_);
  const double s = std::sin(angle_);
  return Eigen::Vector2d(c * v.x() - s * v.y(), s * v.x() + c * v.y());
}

Eigen::Matrix3d Pose::matrix() const {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m.topLeftCorner<2, 2>() = rotation.matrix();
  m.topRightCorner<2, 1>() = position;
  return m;
}

Eigen::Matrix2d Hat(double omega) {
  Eigen::Matrix2d m;
  m << 0.0, -omega, omega, 0.0;
  return m;
}

double Vee(const Eigen::Matrix2d& m) {
  if (std::abs(m(0, 0)) > kAntisymmetryTolerance ||
      std::abs(m(1, 1)) > kAntisymmetryTolerance ||
      std::abs(m(0, 1) + m(1, 0)) > kAntisymmetryTolerance) {
    throw std::invalid_argument("Vee: matrix is not antisymmetric");
  }
  return m(1, 0);
}

Pose Compose(const Pose& a, const Pose& b) {
  Pose out;
  out.rotation = a.rotation * b.rotation;
  out.position = a.position + a.rotation * b.position;
  return out;
}

Pose Inverse(const Pose& g) {
  Pose out;
  out.rotation = g.rotation.inverse();
  out.position = -(out.rotation * g.position);
  return out;
}

Pose Relative(const Pose& a, const Pose& b) { return Compose(Inverse(a), b); }

Twist AdjointTwist(const Pose& g, const Twist& xi) {
  const Eigen::Vector2d nu(xi.vx, xi.vy);
  const Eigen::Vector2d jp(-g.position.y(), g.position.x());
  const Eigen::Vector2d v = g.rotation * nu - xi.omega * jp;
  return Twist{xi.omega, v.x(), v.y()};
}

Pose ExpTwist(const Twist& xi, double h) {
  const double theta = xi.omega * h;
  // Diagonal and off-diagonal entries of V(theta).
  double a, b;
  if (std::abs(theta) < kSmallAngle) {
    const double t2 = theta * theta;
    a = 1.0 - t2 / 6.0;
    b = theta * (0.5 - t2 / 24.0);
  } else {
    a = std::sin(theta) / theta;
    // Half-angle form; 1 - cos(theta) cancels catastrophically near zero.
    const double s = std::sin(0.5 * theta);
    b = 2.0 * s * s / theta;
  }
  Pose out;
  out.rotation = Rotation::FromAngle(theta);
  out.position.x() = h * (a * xi.vx - b * xi.vy);
  out.position.y() = h * (b * xi.vx + a * xi.vy);
  return out;
}

}  // namespace se2form
