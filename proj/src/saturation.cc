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

#include "se2form/saturation.h"

#include <cmath>

namespace se2form {

double Sat(Saturation kind, double x) {
  switch (kind) {
    case Saturation::kTanh:
      return std::tanh(x);
    case Saturation::kAlgebraic:
      return x / std::sqrt(1.0 + x * x);
  }
  return x;
}

double SatSlope(Saturation kind, double x) {
  switch (kind) {
    case Saturation::kTanh: {
      const double t = std::tanh(x);
      return 1.0 - t * t;
    }
    case Saturation::kAlgebraic: {
      const double d = 1.0 + x * x;
      return 1.0 / (d * std::sqrt(d));
    }
  }
  return 1.0;
}

Eigen::Vector2d Sat(Saturation kind, const Eigen::Vector2d& x) {
  return Eigen::Vector2d(Sat(kind, x.x()), Sat(kind, x.y()));
}

Eigen::Matrix2d SatJacobian(Saturation kind, const Eigen::Vector2d& x) {
  Eigen::Matrix2d j = Eigen::Matrix2d::Zero();
  j(0, 0) = SatSlope(kind, x.x());
  j(1, 1) = SatSlope(kind, x.y());
  return j;
}

}  // namespace se2form
