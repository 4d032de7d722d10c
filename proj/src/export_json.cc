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

#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "se2form/export.h"

namespace se2form {

std::string SummaryJson(const RunSummary& summary) {
  nlohmann::ordered_json j;
  j["scenario"] = summary.scenario;
  j["class"] = summary.formation_class;
  j["window_seconds"] = summary.window_seconds;
  nlohmann::ordered_json distances;
  nlohmann::ordered_json variations;
  for (size_t p = 0; p < summary.pair_index.size(); ++p) {
    const std::string key = "d_" + std::to_string(summary.pair_index[p].first) +
                            "_" + std::to_string(summary.pair_index[p].second);
    distances[key] = summary.steady_distance[p];
    variations[key] = summary.distance_variation[p];
  }
  j["steady_distances"] = distances;
  j["distance_variations"] = variations;
  j["max_distance_variation"] = summary.max_distance_variation;
  j["steady_speeds"] = summary.steady_speed;
  j["min_v"] = summary.min_v;
  j["max_abs_omega"] = summary.max_abs_omega;
  j["convergence_time"] = summary.convergence_time;
  j["convergence_threshold"] = summary.convergence_threshold;
  j["lyapunov_monotone_fraction"] = summary.lyapunov_monotone_fraction;
  return j.dump(2) + "\n";
}

void WriteSummaryFile(const RunSummary& summary,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << SummaryJson(summary);
}

}  // namespace se2form
