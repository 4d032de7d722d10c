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

#include "se2form/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "se2form/formation.h"

namespace se2form {
namespace {

// Tolerates pure rounding jitter when the value sits at the numerical floor.
constexpr double kMonotoneSlack = 1.0e-15;

}  // namespace

RunSummary ComputeMetrics(const TrajectoryLog& log, const ScenarioConfig& config,
                          double window_fraction, double convergence_threshold) {
  RunSummary summary;
  summary.scenario = config.name;
  summary.formation_class = std::string(ToString(config.objective));
  summary.pair_index = log.pair_index;
  summary.convergence_threshold = convergence_threshold;

  const size_t frames = log.frames.size();
  const size_t vehicles = frames == 0 ? 0 : log.frames[0].vehicles.size();
  if (frames == 0 || vehicles == 0) return summary;

  size_t window_frames = static_cast<size_t>(
      std::ceil(window_fraction * static_cast<double>(frames)));
  window_frames = std::clamp<size_t>(window_frames, 1, frames);
  const size_t window_start = frames - window_frames;
  summary.window_seconds =
      log.frames.back().t - log.frames[window_start].t;

  summary.steady_distance.assign(log.pair_index.size(), 0.0);
  summary.distance_variation.assign(log.pair_index.size(), 0.0);
  for (size_t p = 0; p < log.pair_index.size(); ++p) {
    double sum = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (size_t k = window_start; k < frames; ++k) {
      const double d = log.frames[k].pairs[p].distance;
      sum += d;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    summary.steady_distance[p] = sum / static_cast<double>(window_frames);
    summary.distance_variation[p] = hi - lo;
    summary.max_distance_variation =
        std::max(summary.max_distance_variation, hi - lo);
  }

  summary.steady_speed.assign(vehicles, 0.0);
  summary.min_v = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < vehicles; ++i) {
    double sum = 0.0;
    for (size_t k = window_start; k < frames; ++k) {
      sum += log.frames[k].vehicles[i].v;
    }
    summary.steady_speed[i] = sum / static_cast<double>(window_frames);
  }
  for (const LogFrame& frame : log.frames) {
    for (const VehicleSample& s : frame.vehicles) {
      summary.min_v = std::min(summary.min_v, s.v);
      summary.max_abs_omega = std::max(summary.max_abs_omega, std::abs(s.omega));
    }
  }

  // Convergence: scan backwards for the last frame where some follower is
  // outside the threshold; the run converged right after it.
  long last_violation = -1;
  for (long k = static_cast<long>(frames) - 1; k >= 0; --k) {
    const LogFrame& frame = log.frames[static_cast<size_t>(k)];
    bool inside = true;
    for (size_t i = 1; i < vehicles; ++i) {
      if (frame.vehicles[i].err_p >= convergence_threshold ||
          std::abs(frame.vehicles[i].err_theta) >= convergence_threshold) {
        inside = false;
        break;
      }
    }
    if (!inside) {
      last_violation = k;
      break;
    }
  }
  if (last_violation < 0) {
    summary.convergence_time = 0.0;
  } else if (last_violation + 1 < static_cast<long>(frames)) {
    summary.convergence_time =
        log.frames[static_cast<size_t>(last_violation + 1)].t;
  } else {
    summary.convergence_time = -1.0;
  }

  long monotone = 0;
  long total = 0;
  for (size_t i = 1; i < vehicles; ++i) {
    for (size_t k = 1; k < frames; ++k) {
      const double prev = log.frames[k - 1].vehicles[i].lyap;
      const double curr = log.frames[k].vehicles[i].lyap;
      ++total;
      if (curr <= prev + kMonotoneSlack) ++monotone;
    }
  }
  summary.lyapunov_monotone_fraction =
      total == 0 ? 1.0 : static_cast<double>(monotone) / static_cast<double>(total);

  return summary;
}

}  // namespace se2form
