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

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "se2form/export.h"

namespace se2form {
namespace {

std::string FormatNumber(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

}  // namespace

void WriteCsv(const TrajectoryLog& log, std::ostream& out) {
  out << "t,vid,x,y,theta,v,omega,err_p,err_theta,lyap";
  for (const auto& [i, j] : log.pair_index) {
    const std::string suffix = std::to_string(i) + "_" + std::to_string(j);
    out << ",d_" << suffix << ",px_" << suffix << ",py_" << suffix;
  }
  out << "\n";
  for (const LogFrame& frame : log.frames) {
    std::string pair_cells;
    for (const PairSample& p : frame.pairs) {
      pair_cells += "," + FormatNumber(p.distance) + "," + FormatNumber(p.px) +
                    "," + FormatNumber(p.py);
    }
    for (size_t i = 0; i < frame.vehicles.size(); ++i) {
      const VehicleSample& s = frame.vehicles[i];
      out << FormatNumber(frame.t) << ',' << i << ',' << FormatNumber(s.x)
          << ',' << FormatNumber(s.y) << ',' << FormatNumber(s.theta) << ','
          << FormatNumber(s.v) << ',' << FormatNumber(s.omega) << ','
          << FormatNumber(s.err_p) << ',' << FormatNumber(s.err_theta) << ','
          << FormatNumber(s.lyap) << pair_cells << "\n";
    }
  }
}

void WriteCsvFile(const TrajectoryLog& log, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  WriteCsv(log, out);
}

}  // namespace se2form
