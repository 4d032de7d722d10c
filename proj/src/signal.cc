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

#include "se2form/signal.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace se2form {

Signal Signal::Constant(double value) {
  return Signal(Kind::kConstant, value, 0.0, 0.0, 0.0);
}

Signal Signal::Sinusoid(double offset, double amplitude,
                        double angular_frequency, double phase) {
  return Signal(Kind::kSinusoid, offset, amplitude, angular_frequency, phase);
}

Signal Signal::PiecewiseConstant(std::vector<double> times,
                                 std::vector<double> values) {
  if (values.size() != times.size() + 1) {
    throw std::invalid_argument(
        "Signal: piecewise-constant needs one more value than breakpoints");
  }
  if (!std::is_sorted(times.begin(), times.end()) ||
      std::adjacent_find(times.begin(), times.end()) != times.end()) {
    throw std::invalid_argument(
        "Signal: piecewise-constant breakpoints must be strictly increasing");
  }
  Signal s(Kind::kPiecewise, 0.0, 0.0, 0.0, 0.0);
  s.times_ = std::move(times);
  s.values_ = std::move(values);
  return s;
}

double Signal::Value(double t) const {
  switch (kind_) {
    case Kind::kConstant:
      return offset_;
    case Kind::kSinusoid:
      return offset_ + amplitude_ * std::sin(angular_frequency_ * t + phase_);
    case Kind::kPiecewise: {
      const auto it = std::upper_bound(times_.begin(), times_.end(), t);
      return values_[static_cast<size_t>(it - times_.begin())];
    }
  }
  return 0.0;
}

double Signal::Rate(double t) const {
  switch (kind_) {
    case Kind::kConstant:
    case Kind::kPiecewise:
      return 0.0;
    case Kind::kSinusoid:
      return amplitude_ * angular_frequency_ *
             std::cos(angular_frequency_ * t + phase_);
  }
  return 0.0;
}

namespace {

double CentralDifference(const Signal& s, double t, double h) {
  return (s.Value(t + h) - s.Value(t - h)) / (2.0 * h);
}

}  // namespace

double LeaderProfile::SpeedRate(double t) const {
  return numerical_rates ? CentralDifference(v, t, fd_step) : v.Rate(t);
}

double LeaderProfile::OmegaRate(double t) const {
  return numerical_rates ? CentralDifference(omega, t, fd_step) : omega.Rate(t);
}

}  // namespace se2form
