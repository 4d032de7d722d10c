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
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "se2form/error.h"
#include "se2form/export.h"
#include "se2form/formation.h"
#include "se2form/metrics.h"
#include "se2form/scenario.h"
#include "se2form/sim.h"

namespace {

// 0 success, 2 scenario validation or load failure, 3 degenerate-direction
// abort during a run, 1 anything else.
constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDegenerate = 3;

struct SimulateOptions {
  std::string scenario_path;
  std::string out_dir = ".";
  std::string formats = "csv,svg,json";
  double horizon = -1.0;
  double step = -1.0;
  bool strict_forward = false;
  long long seed = -1;
};

se2form::ScenarioConfig ParseFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw se2form::ValidationError("cannot open " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return se2form::ParseScenario(buffer.str(), path.stem().string());
}

std::set<std::string> SplitFormats(const std::string& list) {
  std::set<std::string> formats;
  std::stringstream stream(list);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    if (token != "csv" && token != "svg" && token != "json") {
      throw se2form::ValidationError("unknown format \"" + token +
                                     "\" (expected csv, svg, json)");
    }
    formats.insert(token);
  }
  if (formats.empty()) {
    throw se2form::ValidationError("--format selects nothing");
  }
  return formats;
}

int RunSimulate(const SimulateOptions& options) {
  se2form::ScenarioConfig config = ParseFile(options.scenario_path);
  if (options.horizon > 0.0) config.horizon = options.horizon;
  if (options.step > 0.0) config.step = options.step;
  if (options.strict_forward) config.guards.strict_forward = true;
  if (options.seed >= 0) config.seed = static_cast<std::uint64_t>(options.seed);
  const std::set<std::string> formats = SplitFormats(options.formats);
  se2form::ValidateScenario(config);

  const se2form::TrajectoryLog log = se2form::Run(config);
  const se2form::RunSummary summary = se2form::ComputeMetrics(log, config);

  std::printf("scenario: %s\n", config.name.c_str());
  std::printf("class: %s\n", summary.formation_class.c_str());
  for (size_t p = 0; p < summary.pair_index.size(); ++p) {
    std::printf("steady d_%d_%d: %.6g (variation %.3g)\n",
                summary.pair_index[p].first, summary.pair_index[p].second,
                summary.steady_distance[p], summary.distance_variation[p]);
  }
  std::printf("convergence time: %.6g s\n", summary.convergence_time);

  const std::filesystem::path out(options.out_dir);
  std::filesystem::create_directories(out);
  std::vector<std::filesystem::path> written;
  if (formats.count("csv")) {
    written.push_back(out / (config.name + ".csv"));
    se2form::WriteCsvFile(log, written.back());
  }
  if (formats.count("json")) {
    written.push_back(out / (config.name + "_summary.json"));
    se2form::WriteSummaryFile(summary, written.back());
  }
  if (formats.count("svg")) {
    for (const auto& path : se2form::WriteSvgPlots(log, out, config.name)) {
      written.push_back(path);
    }
  }
  for (const auto& path : written) {
    std::printf("wrote %s\n", path.string().c_str());
  }
  return kExitOk;
}

int RunClassify(const std::string& scenario_path) {
  const se2form::ScenarioConfig config = ParseFile(scenario_path);
  std::vector<se2form::FormationOffset> offsets;
  offsets.reserve(config.tree.edges.size());
  for (const se2form::TreeEdge& edge : config.tree.edges) {
    offsets.push_back(edge.offset);
  }
  const se2form::FormationClass c = se2form::Classify(
      offsets, config.profile, config.horizon, config.step);
  std::printf("%.*s\n", static_cast<int>(se2form::ToString(c).size()),
              se2form::ToString(c).data());
  return kExitOk;
}

int RunCheck(const std::string& scenario_path) {
  const se2form::ScenarioConfig config = ParseFile(scenario_path);
  se2form::ValidateScenario(config);
  std::printf("ok: %s\n", config.name.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forward-motion tracking and mobile formation simulator for "
               "unicycle vehicles"};
  app.require_subcommand(1);

  SimulateOptions options;
  CLI::App* simulate =
      app.add_subcommand("simulate", "run a scenario and write logs");
  simulate->add_option("scenario", options.scenario_path, "scenario JSON file")
      ->required();
  simulate->add_option("--out", options.out_dir, "output directory");
  simulate->add_option("--format", options.formats,
                       "comma separated subset of csv,svg,json");
  simulate->add_option("--horizon", options.horizon,
                       "override the horizon [s]");
  simulate->add_option("--step", options.step, "override the step [s]");
  simulate->add_flag("--strict-forward", options.strict_forward,
                     "enable the strict forward-motion gain guard");
  simulate->add_option("--seed", options.seed, "override the scenario seed");

  std::string classify_path;
  CLI::App* classify = app.add_subcommand(
      "classify", "print the motion pattern a scenario's task set induces");
  classify->add_option("scenario", classify_path, "scenario JSON file")
      ->required();

  std::string check_path;
  CLI::App* check =
      app.add_subcommand("check", "validate a scenario without running it");
  check->add_option("scenario", check_path, "scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (simulate->parsed()) return RunSimulate(options);
    if (classify->parsed()) return RunClassify(classify_path);
    if (check->parsed()) return RunCheck(check_path);
    return kExitOther;
  } catch (const se2form::DegenerateDirectionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDegenerate;
  } catch (const se2form::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const se2form::SingularTaskError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const se2form::InfeasibleConfigurationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitOther;
  }
}
