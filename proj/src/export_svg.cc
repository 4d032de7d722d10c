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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "se2form/export.h"

namespace se2form {
namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 44.0;
constexpr double kMarginBottom = 56.0;
constexpr int kTicks = 5;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                "#d62728", "#9467bd", "#8c564b"};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void Add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void PadIfFlat() {
    if (!(hi > lo)) {
      const double pad = std::max(1.0e-6, std::abs(hi) * 0.1);
      lo -= pad;
      hi += pad;
    }
  }
};

std::string Num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

std::string Label(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4g", v);
  return buffer;
}

class SvgWriter {
 public:
  explicit SvgWriter(const std::filesystem::path& path)
      : out_(path, std::ios::binary) {
    if (!out_) {
      throw std::runtime_error("cannot write " + path.string());
    }
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
            "width=\""
         << Num(kWidth) << "\" height=\"" << Num(kHeight) << "\" viewBox=\"0 0 "
         << Num(kWidth) << " " << Num(kHeight) << "\">\n"
         << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }
  ~SvgWriter() { out_ << "</svg>\n"; }

  std::ostream& out() { return out_; }

  void Title(const std::string& text) {
    out_ << "<text x=\"" << Num(kWidth / 2.0)
         << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            "font-size=\"16\">"
         << text << "</text>\n";
  }

  void Frame() {
    out_ << "<rect x=\"" << Num(kMarginLeft) << "\" y=\"" << Num(kMarginTop)
         << "\" width=\"" << Num(kWidth - kMarginLeft - kMarginRight)
         << "\" height=\"" << Num(kHeight - kMarginTop - kMarginBottom)
         << "\" fill=\"none\" stroke=\"#404040\" stroke-width=\"1\"/>\n";
  }

 private:
  std::ofstream out_;
};

double MapX(double v, const Range& r) {
  const double w = kWidth - kMarginLeft - kMarginRight;
  return kMarginLeft + (v - r.lo) / (r.hi - r.lo) * w;
}

double MapY(double v, const Range& r) {
  const double h = kHeight - kMarginTop - kMarginBottom;
  return kHeight - kMarginBottom - (v - r.lo) / (r.hi - r.lo) * h;
}

void DrawAxes(SvgWriter& svg, const Range& xr, const Range& yr,
              const std::string& x_label, const std::string& y_label) {
  svg.Frame();
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = static_cast<double>(i) / kTicks;
    const double xv = xr.lo + fx * (xr.hi - xr.lo);
    const double px = MapX(xv, xr);
    svg.out() << "<line x1=\"" << Num(px) << "\" y1=\""
              << Num(kHeight - kMarginBottom) << "\" x2=\"" << Num(px)
              << "\" y2=\"" << Num(kHeight - kMarginBottom + 5)
              << "\" stroke=\"#404040\"/>\n"
              << "<text x=\"" << Num(px) << "\" y=\""
              << Num(kHeight - kMarginBottom + 20)
              << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                 "font-size=\"11\">"
              << Label(xv) << "</text>\n";
    const double yv = yr.lo + fx * (yr.hi - yr.lo);
    const double py = MapY(yv, yr);
    svg.out() << "<line x1=\"" << Num(kMarginLeft - 5) << "\" y1=\"" << Num(py)
              << "\" x2=\"" << Num(kMarginLeft) << "\" y2=\"" << Num(py)
              << "\" stroke=\"#404040\"/>\n"
              << "<text x=\"" << Num(kMarginLeft - 8) << "\" y=\""
              << Num(py + 4)
              << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
                 "font-size=\"11\">"
              << Label(yv) << "</text>\n";
  }
  svg.out() << "<text x=\"" << Num(kWidth / 2.0) << "\" y=\""
            << Num(kHeight - 12)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"13\">"
            << x_label << "</text>\n"
            << "<text x=\"18\" y=\"" << Num(kHeight / 2.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"13\" transform=\"rotate(-90 18 "
            << Num(kHeight / 2.0) << ")\">" << y_label << "</text>\n";
}

void DrawSeries(SvgWriter& svg, const std::vector<Series>& series,
                const Range& xr, const Range& yr) {
  for (size_t s = 0; s < series.size(); ++s) {
    svg.out() << "<polyline fill=\"none\" stroke=\""
              << kPalette[s % kPaletteSize] << "\" stroke-width=\"1.5\" points=\"";
    for (size_t k = 0; k < series[s].x.size(); ++k) {
      if (k > 0) svg.out() << ' ';
      svg.out() << Num(MapX(series[s].x[k], xr)) << ','
                << Num(MapY(series[s].y[k], yr));
    }
    svg.out() << "\"/>\n";
  }
  // Legend in the top-right corner of the plot area.
  const double lx = kWidth - kMarginRight - 150.0;
  double ly = kMarginTop + 14.0;
  for (size_t s = 0; s < series.size(); ++s) {
    svg.out() << "<line x1=\"" << Num(lx) << "\" y1=\"" << Num(ly - 4)
              << "\" x2=\"" << Num(lx + 22) << "\" y2=\"" << Num(ly - 4)
              << "\" stroke=\"" << kPalette[s % kPaletteSize]
              << "\" stroke-width=\"2\"/>\n"
              << "<text x=\"" << Num(lx + 28) << "\" y=\"" << Num(ly)
              << "\" font-family=\"sans-serif\" font-size=\"12\">"
              << series[s].label << "</text>\n";
    ly += 16.0;
  }
}

void WriteLinePlot(const std::filesystem::path& path, const std::string& title,
                   const std::string& x_label, const std::string& y_label,
                   const std::vector<Series>& series) {
  Range xr, yr;
  for (const Series& s : series) {
    for (double v : s.x) xr.Add(v);
    for (double v : s.y) yr.Add(v);
  }
  xr.PadIfFlat();
  yr.PadIfFlat();

  SvgWriter svg(path);
  svg.Title(title);
  DrawAxes(svg, xr, yr, x_label, y_label);
  DrawSeries(svg, series, xr, yr);
}

void WriteTrajectoryPlot(const std::filesystem::path& path,
                         const TrajectoryLog& log) {
  const size_t vehicles = log.frames.empty() ? 0 : log.frames[0].vehicles.size();
  Range xr, yr;
  for (const LogFrame& frame : log.frames) {
    for (const VehicleSample& s : frame.vehicles) {
      xr.Add(s.x);
      yr.Add(s.y);
    }
  }
  xr.PadIfFlat();
  yr.PadIfFlat();
  // Equal aspect: widen the smaller range around its center.
  {
    const double w = kWidth - kMarginLeft - kMarginRight;
    const double h = kHeight - kMarginTop - kMarginBottom;
    const double scale =
        std::max((xr.hi - xr.lo) / w, (yr.hi - yr.lo) / h) * 1.05;
    const double cx = 0.5 * (xr.lo + xr.hi);
    const double cy = 0.5 * (yr.lo + yr.hi);
    xr.lo = cx - 0.5 * w * scale;
    xr.hi = cx + 0.5 * w * scale;
    yr.lo = cy - 0.5 * h * scale;
    yr.hi = cy + 0.5 * h * scale;
  }

  SvgWriter svg(path);
  svg.Title("trajectories");
  DrawAxes(svg, xr, yr, "x [m]", "y [m]");

  std::vector<Series> paths(vehicles);
  for (size_t i = 0; i < vehicles; ++i) {
    paths[i].label = "vehicle " + std::to_string(i);
    paths[i].x.reserve(log.frames.size());
    paths[i].y.reserve(log.frames.size());
    for (const LogFrame& frame : log.frames) {
      paths[i].x.push_back(frame.vehicles[i].x);
      paths[i].y.push_back(frame.vehicles[i].y);
    }
  }
  DrawSeries(svg, paths, xr, yr);

  // Formation snapshots: the vehicle polygon at five evenly spaced instants.
  if (!log.frames.empty() && vehicles >= 2) {
    const size_t last = log.frames.size() - 1;
    for (int snap = 0; snap <= 4; ++snap) {
      const size_t k = last * static_cast<size_t>(snap) / 4;
      const LogFrame& frame = log.frames[k];
      svg.out() << "<polygon fill=\"none\" stroke=\"#808080\" "
                   "stroke-width=\"1\" stroke-dasharray=\"4 3\" points=\"";
      for (size_t i = 0; i < vehicles; ++i) {
        if (i > 0) svg.out() << ' ';
        svg.out() << Num(MapX(frame.vehicles[i].x, xr)) << ','
                  << Num(MapY(frame.vehicles[i].y, yr));
      }
      svg.out() << "\"/>\n";
      for (size_t i = 0; i < vehicles; ++i) {
        svg.out() << "<circle cx=\"" << Num(MapX(frame.vehicles[i].x, xr))
                  << "\" cy=\"" << Num(MapY(frame.vehicles[i].y, yr))
                  << "\" r=\"2.5\" fill=\"" << kPalette[i % kPaletteSize]
                  << "\"/>\n";
      }
    }
  }
}

}  // namespace

std::vector<std::filesystem::path> WriteSvgPlots(
    const TrajectoryLog& log, const std::filesystem::path& dir,
    const std::string& stem) {
  const size_t vehicles = log.frames.empty() ? 0 : log.frames[0].vehicles.size();

  std::vector<Series> distances(log.pair_index.size());
  for (size_t p = 0; p < log.pair_index.size(); ++p) {
    distances[p].label = "d_" + std::to_string(log.pair_index[p].first) + "_" +
                         std::to_string(log.pair_index[p].second);
    for (const LogFrame& frame : log.frames) {
      distances[p].x.push_back(frame.t);
      distances[p].y.push_back(frame.pairs[p].distance);
    }
  }

  auto per_vehicle = [&](auto pick, const char* prefix) {
    std::vector<Series> series(vehicles);
    for (size_t i = 0; i < vehicles; ++i) {
      series[i].label = std::string(prefix) + " " + std::to_string(i);
      for (const LogFrame& frame : log.frames) {
        series[i].x.push_back(frame.t);
        series[i].y.push_back(pick(frame.vehicles[i]));
      }
    }
    return series;
  };

  std::vector<std::filesystem::path> written;
  written.push_back(dir / (stem + "_distances.svg"));
  WriteLinePlot(written.back(), "pairwise distances", "t [s]", "distance [m]",
                distances);
  written.push_back(dir / (stem + "_headings.svg"));
  WriteLinePlot(written.back(), "headings", "t [s]", "theta [rad]",
                per_vehicle([](const VehicleSample& s) { return s.theta; },
                            "vehicle"));
  written.push_back(dir / (stem + "_speeds.svg"));
  WriteLinePlot(written.back(), "commanded linear speeds", "t [s]", "v [m/s]",
                per_vehicle([](const VehicleSample& s) { return s.v; },
                            "vehicle"));
  written.push_back(dir / (stem + "_omegas.svg"));
  WriteLinePlot(written.back(), "commanded angular speeds", "t [s]",
                "omega [rad/s]",
                per_vehicle([](const VehicleSample& s) { return s.omega; },
                            "vehicle"));
  written.push_back(dir / (stem + "_trajectories.svg"));
  WriteTrajectoryPlot(written.back(), log);
  return written;
}

}  // namespace se2form
