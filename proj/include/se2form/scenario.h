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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "se2form/network.h"
#include "se2form/signal.h"

namespace se2form {

struct ScenarioGuards {
  // Gain bound guaranteeing a positive virtual control norm at every step:
  // k1 * sqrt(2) must stay below every resolved feedforward speed on the
  // horizon (leader and chained virtual leaders alike).
  bool strict_forward = false;
  // Reuse the last direction and speed when the virtual control
  // degenerates, instead of aborting the run.
  bool hold_on_degenerate = true;
};

// A complete simulation description, deserializable from JSON (see the
// bundled scenarios and the README for the schema). Unknown keys are
// rejected with their field path.
struct ScenarioConfig {
  std::string name;
  double horizon = 200.0;
  double step = 0.01;
  std::uint64_t seed = 0;

  Pose leader_initial;
  LeaderProfile profile;
  std::vector<Pose> follower_initial;  // vehicles 1..n, aligned with tree edges
  DirectedTree tree;

  TrackingGains gains;
  Saturation saturation = Saturation::kTanh;
  FormationClass objective = FormationClass::kStrictRigidBody;
  ScenarioGuards guards;
  FeedforwardSource feedforward = FeedforwardSource::kVirtualLeader;
};

// Parses a scenario from JSON text. Reports every schema violation as a
// ValidationError carrying the offending field path. Does not run
// ValidateScenario.
ScenarioConfig ParseScenario(const std::string& text,
                             const std::string& default_name = "scenario");

// Reads, parses, and validates a scenario file.
ScenarioConfig LoadScenario(const std::filesystem::path& path);

// Semantic validation: positive step and horizon, tree structure, leader
// speed positivity sampled at every integration step, objective consistent
// with the classified motion pattern, chained task feasibility, and the
// strict-forward gain guard when enabled. Throws ValidationError (or a
// subclass) on the first failure.
void ValidateScenario(const ScenarioConfig& config);

// Number of integration steps a run of this scenario performs; the
// trajectory log holds one more frame than this.
long StepCount(const ScenarioConfig& config);

}  // namespace se2form
