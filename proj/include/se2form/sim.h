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

#include <utility>
#include <vector>

#include "se2form/scenario.h"

namespace se2form {

// One vehicle at one instant: pose, the inputs commanded at that instant,
// and tracking diagnostics (zero for the leader).
struct VehicleSample {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
  double omega = 0.0;
  double err_p = 0.0;
  double err_theta = 0.0;
  double lyap = 0.0;
};

// Relative geometry of an ordered vehicle pair (i, j), i < j: distance,
// position of j in i's body frame, and relative heading.
struct PairSample {
  double distance = 0.0;
  double px = 0.0;
  double py = 0.0;
  double theta = 0.0;
};

struct LogFrame {
  double t = 0.0;
  std::vector<VehicleSample> vehicles;
  std::vector<PairSample> pairs;
};

struct TrajectoryLog {
  std::vector<std::pair<int, int>> pair_index;  // all (i, j) with i < j
  std::vector<LogFrame> frames;                 // StepCount + 1 entries
};

// Deterministic fixed-step closed-loop run of a validated scenario. Control
// updates happen root-first at each instant, then all vehicles advance
// exactly under held inputs. A degenerate-direction abort (strict mode)
// rethrows with step and vehicle attached.
TrajectoryLog Run(const ScenarioConfig& config);

}  // namespace se2form
