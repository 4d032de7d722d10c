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

#include "se2form/sim.h"

#include <string>

#include "se2form/error.h"
#include "se2form/log.h"

namespace se2form {
namespace {

PairSample MakePairSample(const Pose& a, const Pose& b) {
  const Pose rel = Relative(a, b);
  PairSample s;
  s.distance = rel.position.norm();
  s.px = rel.position.x();
  s.py = rel.position.y();
  s.theta = rel.rotation.angle();
  return s;
}

}  // namespace

TrajectoryLog Run(const ScenarioConfig& config) {
  const int n = config.tree.vehicle_count;
  const long steps = StepCount(config);

  std::vector<VehicleState> states(static_cast<size_t>(n));
  states[0].pose = config.leader_initial;
  for (int i = 1; i < n; ++i) {
    states[static_cast<size_t>(i)].pose =
        config.follower_initial[static_cast<size_t>(i - 1)];
  }

  const DegenerateMode mode = config.guards.hold_on_degenerate
                                  ? DegenerateMode::kHold
                                  : DegenerateMode::kStrict;
  std::vector<FollowerController> controllers;
  controllers.reserve(static_cast<size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    controllers.emplace_back(config.tree.edges[static_cast<size_t>(i - 1)].offset,
                             config.gains, config.saturation, mode,
                             config.feedforward);
  }

  const std::vector<int> order = TopologicalOrder(config.tree);

  TrajectoryLog log;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) log.pair_index.emplace_back(i, j);
  }
  log.frames.reserve(static_cast<size_t>(steps + 1));

  std::vector<ParentSignal> signals(static_cast<size_t>(n));
  std::vector<double> cmd_v(static_cast<size_t>(n));
  std::vector<double> cmd_omega(static_cast<size_t>(n));
  std::vector<TrackingError> diagnostics(static_cast<size_t>(n));

  for (long k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * config.step;

    // Control pass at this instant, root-first: each child consumes the
    // parent's same-instant pose and freshly commanded inputs.
    for (int i : order) {
      const size_t idx = static_cast<size_t>(i);
      if (i == 0) {
        cmd_v[0] = config.profile.Speed(t);
        cmd_omega[0] = config.profile.Omega(t);
        signals[0] = ParentSignal{states[0].pose, cmd_v[0], cmd_omega[0],
                                  config.profile.SpeedRate(t),
                                  config.profile.OmegaRate(t)};
        diagnostics[0] = TrackingError{};
        continue;
      }
      const size_t parent =
          static_cast<size_t>(config.tree.edges[idx - 1].parent);
      FollowerOutput out;
      try {
        out = controllers[idx - 1].Compute(states[idx], signals[parent]);
      } catch (const DegenerateDirectionError& e) {
        throw DegenerateDirectionError(
            "vehicle " + std::to_string(i) + " at step " + std::to_string(k) +
            " (t = " + std::to_string(t) + "): " + e.what());
      }
      cmd_v[idx] = out.v;
      cmd_omega[idx] = out.omega;
      signals[idx] =
          ParentSignal{states[idx].pose, out.v, out.omega,
                       out.virtual_leader.v_rate, out.virtual_leader.omega_rate};
      diagnostics[idx] = out.error;
    }

    LogFrame frame;
    frame.t = t;
    frame.vehicles.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      const size_t idx = static_cast<size_t>(i);
      VehicleSample& s = frame.vehicles[idx];
      s.x = states[idx].pose.position.x();
      s.y = states[idx].pose.position.y();
      s.theta = states[idx].pose.rotation.angle();
      s.v = cmd_v[idx];
      s.omega = cmd_omega[idx];
      s.err_p = diagnostics[idx].position.norm();
      s.err_theta = diagnostics[idx].heading;
      s.lyap = diagnostics[idx].lyapunov;
    }
    frame.pairs.reserve(log.pair_index.size());
    for (const auto& [i, j] : log.pair_index) {
      frame.pairs.push_back(MakePairSample(states[static_cast<size_t>(i)].pose,
                                           states[static_cast<size_t>(j)].pose));
    }
    log.frames.push_back(std::move(frame));

    if (k == steps) break;
    for (int i = 0; i < n; ++i) {
      const size_t idx = static_cast<size_t>(i);
      states[idx] = Step(states[idx], cmd_v[idx], cmd_omega[idx], config.step);
    }
  }

  LogDebug("run complete: " + std::to_string(log.frames.size()) + " frames, " +
           std::to_string(n) + " vehicles");
  return log;
}

}  // namespace se2form
