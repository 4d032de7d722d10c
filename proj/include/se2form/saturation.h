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

// Odd, strictly increasing saturation with |sigma| < 1, sigma(0) = 0 and
// sigma'(0) = 1. Applied componentwise to vectors.
enum class Saturation {
  kTanh,       // tanh(x), slope sech^2(x)
  kAlgebraic,  // x / sqrt(1 + x^2), slope (1 + x^2)^(-3/2)
};

double Sat(Saturation kind, double x);
double SatSlope(Saturation kind, double x);

Eigen::Vector2d Sat(Saturation kind, const Eigen::Vector2d& x);

// Jacobian of the componentwise saturation; diagonal by construction.
Eigen::Matrix2d SatJacobian(Saturation kind, const Eigen::Vector2d& x);

}  // namespace se2form
