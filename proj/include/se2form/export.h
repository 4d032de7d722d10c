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

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "se2form/metrics.h"
#include "se2form/sim.h"

namespace se2form {

// Trajectory CSV: one row per (frame, vehicle); columns
// t,vid,x,y,theta,v,omega,err_p,err_theta,lyap followed by
// d_<i>_<j>,px_<i>_<j>,py_<i>_<j> for every pair. Pair values repeat on
// each row of the same frame. Numbers are printed with %.9g, rows end with
// LF; output is byte-identical across reruns of the same scenario.
void WriteCsv(const TrajectoryLog& log, std::ostream& out);
void WriteCsvFile(const TrajectoryLog& log, const std::filesystem::path& path);

// Run summary as JSON with a stable key order.
std::string SummaryJson(const RunSummary& summary);
void WriteSummaryFile(const RunSummary& summary,
                      const std::filesystem::path& path);

// Five standalone SVG panels: pair distances, headings, commanded linear
// speeds, commanded angular speeds, and the 2D trajectories with formation
// snapshots. Files are named <stem>_distances.svg, _headings.svg,
// _speeds.svg, _omegas.svg, _trajectories.svg inside dir. Returns the
// written paths.
std::vector<std::filesystem::path> WriteSvgPlots(
    const TrajectoryLog& log, const std::filesystem::path& dir,
    const std::string& stem);

}  // namespace se2form
