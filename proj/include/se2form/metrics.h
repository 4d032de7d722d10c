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

#include <string>
#include <vector>

#include "se2form/sim.h"

namespace se2form {

// Aggregates of one run. "Steady" statistics are taken over the trailing
// window (a fraction of the horizon, 10% by default).
struct RunSummary {
  std::string scenario;
  std::string formation_class;
  double window_seconds = 0.0;

  std::vector<std::pair<int, int>> pair_index;
  std::vector<double> steady_distance;      // mean over the window, per pair
  std::vector<double> distance_variation;   // max - min over the window, per pair
  double max_distance_variation = 0.0;

  std::vector<double> steady_speed;         // mean commanded v, per vehicle
  double min_v = 0.0;                       // over all vehicles and steps
  double max_abs_omega = 0.0;

  // First time after which every follower keeps |p_err| and |theta_err|
  // below the convergence threshold; -1 when that never happens.
  double convergence_time = -1.0;
  double convergence_threshold = 0.0;

  // Fraction of per-follower steps with non-increasing Lyapunov value.
  double lyapunov_monotone_fraction = 0.0;
};

RunSummary ComputeMetrics(const TrajectoryLog& log, const ScenarioConfig& config,
                          double window_fraction = 0.1,
                          double convergence_threshold = 1.0e-3);

}  // namespace se2form
