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

#include <vector>

namespace se2form {

// Scalar time signal with an analytic derivative. Three shapes cover the
// reference profiles: constant, piecewise-constant (right-continuous,
// derivative treated as zero everywhere), and sinusoid
// offset + amplitude * sin(angular_frequency * t + phase).
class Signal {
 public:
  Signal() : Signal(Kind::kConstant, 0.0, 0.0, 0.0, 0.0) {}

  static Signal Constant(double value);
  static Signal Sinusoid(double offset, double amplitude,
                         double angular_frequency, double phase);
  // times must be strictly increasing and values must hold one more entry
  // than times; violations throw std::invalid_argument.
  static Signal PiecewiseConstant(std::vector<double> times,
                                  std::vector<double> values);

  double Value(double t) const;
  double Rate(double t) const;

 private:
  enum class Kind { kConstant, kSinusoid, kPiecewise };

  Signal(Kind kind, double offset, double amplitude, double angular_frequency,
         double phase)
      : kind_(kind),
        offset_(offset),
        amplitude_(amplitude),
        angular_frequency_(angular_frequency),
        phase_(phase) {}

  Kind kind_;
  double offset_;
  double amplitude_;
  double angular_frequency_;
  double phase_;
  std::vector<double> times_;
  std::vector<double> values_;
};

// Leader reference (v0(t), omega0(t)) with analytic rates. Setting
// numerical_rates replaces the analytic derivatives with central finite
// differences of width fd_step, for profiles whose rates are not trusted.
struct LeaderProfile {
  Signal v;
  Signal omega;
  bool numerical_rates = false;
  double fd_step = 0.01;

  double Speed(double t) const { return v.Value(t); }
  double Omega(double t) const { return omega.Value(t); }
  double SpeedRate(double t) const;
  double OmegaRate(double t) const;
};

}  // namespace se2form
