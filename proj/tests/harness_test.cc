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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "se2form/error.h"
#include "se2form/export.h"
#include "se2form/metrics.h"
#include "se2form/scenario.h"
#include "se2form/sim.h"
#include "support/runners.h"

namespace se2form {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path ScenarioPath(const std::string& name) {
  return fs::path(SE2FORM_SCENARIO_DIR) / name;
}

json BaseScenario() {
  return json::parse(ReadFile(ScenarioPath("paper_sec5.json")));
}

ScenarioConfig ParseJson(const json& j) {
  return ParseScenario(j.dump(), "inline");
}

fs::path TestOutputDir(const std::string& leaf) {
  const fs::path dir = fs::temp_directory_path() / "se2form_tests" / leaf;
  fs::create_directories(dir);
  return dir;
}

ScenarioConfig LeaderOnlyCircle() {
  ScenarioConfig config;
  config.name = "circle";
  config.horizon = 10.0;
  config.step = 0.01;
  config.profile.v = Signal::Constant(0.06);
  config.profile.omega = Signal::Constant(0.05);
  config.tree.vehicle_count = 1;
  config.gains = TrackingGains{0.3, 0.3};
  return config;
}

TEST_CASE("the bundled scenario parses into the reference configuration") {
  const ScenarioConfig config =
      ParseScenario(ReadFile(ScenarioPath("paper_sec5.json")), "fallback");
  CHECK(config.name == "paper_sec5");
  CHECK(config.horizon == 200.0);
  CHECK(config.step == 0.01);
  CHECK(config.seed == 1);
  CHECK(config.gains.k1 == 0.3);
  CHECK(config.gains.k2 == 0.3);
  CHECK(config.saturation == Saturation::kTanh);
  CHECK(config.objective == FormationClass::kStrictRigidBody);
  CHECK(config.feedforward == FeedforwardSource::kVirtualLeader);
  CHECK(config.guards.strict_forward == false);
  CHECK(config.guards.hold_on_degenerate == true);
  CHECK(config.leader_initial.rotation.angle() == 0.0);
  CHECK(config.profile.Speed(13.7) == 0.06);
  CHECK(config.profile.Omega(13.7) == 0.05);
  REQUIRE(config.follower_initial.size() == 2);
  CHECK(config.follower_initial[0].rotation.angle() ==
        doctest::Approx(-0.7853981633974483).epsilon(1e-15));
  CHECK(config.follower_initial[0].position.y() == -0.2);
  CHECK(config.follower_initial[1].position.y() == 0.2);
  REQUIRE(config.tree.edges.size() == 2);
  CHECK(config.tree.vehicle_count == 3);
  CHECK(config.tree.edges[0].parent == 0);
  CHECK(config.tree.edges[0].offset.x == -0.1);
  CHECK(config.tree.edges[1].parent == 1);
  CHECK(config.tree.edges[1].offset.y == 0.2);
  CHECK(StepCount(config) == 20000);
}

TEST_CASE("every bundled scenario loads and validates") {
  for (const char* name :
       {"paper_sec5.json", "weak_rigid.json", "parallel.json", "line.json"}) {
    CHECK_NOTHROW(LoadScenario(ScenarioPath(name)));
  }
}

TEST_CASE("schema violations report the offending field path") {
  json bogus = BaseScenario();
  bogus["bogus"] = 1;
  CHECK_THROWS_WITH_AS(ParseJson(bogus), doctest::Contains("scenario.bogus"),
                       ValidationError);

  json guard_key = BaseScenario();
  guard_key["guards"]["frobnicate"] = true;
  CHECK_THROWS_WITH_AS(ParseJson(guard_key),
                       doctest::Contains("guards.frobnicate"), ValidationError);

  json bad_kind = BaseScenario();
  bad_kind["leader"]["v"]["kind"] = "quadratic";
  CHECK_THROWS_WITH_AS(ParseJson(bad_kind), doctest::Contains("leader.v.kind"),
                       ValidationError);

  json missing_amplitude = BaseScenario();
  missing_amplitude["leader"]["omega"] = {{"kind", "sinusoid"},
                                          {"offset", 0.05},
                                          {"angular_frequency", 0.1}};
  CHECK_THROWS_WITH_AS(ParseJson(missing_amplitude),
                       doctest::Contains("amplitude"), ValidationError);

  json negative_seed = BaseScenario();
  negative_seed["seed"] = -1;
  CHECK_THROWS_WITH_AS(ParseJson(negative_seed),
                       doctest::Contains("scenario.seed"), ValidationError);

  json duplicate_child = BaseScenario();
  duplicate_child["tree"][1]["child"] = 1;
  CHECK_THROWS_WITH_AS(ParseJson(duplicate_child),
                       doctest::Contains("vehicle listed twice"),
                       ValidationError);

  json short_offset = BaseScenario();
  short_offset["tree"][0]["offset"] = {-0.1};
  CHECK_THROWS_WITH_AS(ParseJson(short_offset), doctest::Contains(".offset"),
                       ValidationError);

  json bad_saturation = BaseScenario();
  bad_saturation["saturation"] = "smoothstep";
  CHECK_THROWS_WITH_AS(ParseJson(bad_saturation),
                       doctest::Contains("scenario.saturation"),
                       ValidationError);

  json bad_objective = BaseScenario();
  bad_objective["objective"] = "Rigid";
  CHECK_THROWS_WITH_AS(ParseJson(bad_objective),
                       doctest::Contains("unknown formation class"),
                       ValidationError);

  json bad_feedforward = BaseScenario();
  bad_feedforward["feedforward"] = "psychic";
  CHECK_THROWS_WITH_AS(ParseJson(bad_feedforward),
                       doctest::Contains("scenario.feedforward"),
                       ValidationError);

  CHECK_THROWS_WITH_AS(ParseScenario("{", "inline"),
                       doctest::Contains("invalid JSON"), ValidationError);
}

TEST_CASE("semantic validation rejects inconsistent scenarios") {
  ScenarioConfig zero_step = ParseJson(BaseScenario());
  zero_step.step = 0.0;
  CHECK_THROWS_WITH_AS(ValidateScenario(zero_step),
                       doctest::Contains("scenario.step"), ValidationError);

  ScenarioConfig tiny_horizon = ParseJson(BaseScenario());
  tiny_horizon.horizon = 0.001;
  CHECK_THROWS_WITH_AS(ValidateScenario(tiny_horizon),
                       doctest::Contains("scenario.horizon"), ValidationError);

  ScenarioConfig bad_gain = ParseJson(BaseScenario());
  bad_gain.gains.k1 = 0.0;
  CHECK_THROWS_WITH_AS(ValidateScenario(bad_gain), doctest::Contains("gains"),
                       ValidationError);

  ScenarioConfig missing_vehicle = ParseJson(BaseScenario());
  missing_vehicle.follower_initial.pop_back();
  CHECK_THROWS_WITH_AS(ValidateScenario(missing_vehicle),
                       doctest::Contains("scenario.vehicles"),
                       ValidationError);

  json breathing = BaseScenario();
  breathing["leader"]["omega"] = {{"kind", "sinusoid"},
                                  {"offset", 0.05},
                                  {"amplitude", 0.02},
                                  {"angular_frequency", 0.1},
                                  {"phase", 0.0}};
  CHECK_THROWS_WITH_AS(ValidateScenario(ParseJson(breathing)),
                       doctest::Contains("constant v0/omega0 ratio"),
                       ValidationError);

  json mislabeled = BaseScenario();
  mislabeled["objective"] = "Parallel";
  CHECK_THROWS_WITH_AS(ValidateScenario(ParseJson(mislabeled)),
                       doctest::Contains("classif"), ValidationError);

  json reversing = BaseScenario();
  reversing["leader"]["v"] = {{"kind", "sinusoid"},
                              {"offset", 0.05},
                              {"amplitude", 0.1},
                              {"angular_frequency", 0.2},
                              {"phase", 0.0}};
  CHECK_THROWS_WITH_AS(ValidateScenario(ParseJson(reversing)),
                       doctest::Contains("stay positive"), ValidationError);
}

TEST_CASE("strict-forward guard accepts compliant gains and rejects others") {
  ScenarioConfig compliant = ParseJson(BaseScenario());
  compliant.gains.k1 = 0.035;  // 0.0495 < 0.0552, the smallest orbit speed
  compliant.guards.strict_forward = true;
  CHECK_NOTHROW(ValidateScenario(compliant));

  ScenarioConfig reference_gains = ParseJson(BaseScenario());
  reference_gains.guards.strict_forward = true;
  CHECK_THROWS_WITH_AS(ValidateScenario(reference_gains),
                       doctest::Contains("strict-forward guard requires"),
                       ValidationError);
}

TEST_CASE("anti-synchronized heading offsets fail only under the guard") {
  // Offset (0, 2.0) places the follower beyond the rotation center: the
  // heading offset resolves to pi with a positive orbit speed 0.04.
  json j = BaseScenario();
  j["vehicles"] = json::array({{{"theta", 0.0}, {"x", 0.0}, {"y", 2.0}}});
  j["tree"] = json::array(
      {{{"child", 1}, {"parent", 0}, {"offset", {0.0, 2.0}}}});
  j["objective"] = "Parallel";
  j["gains"] = {{"k1", 0.01}, {"k2", 0.3}};

  CHECK_NOTHROW(ValidateScenario(ParseJson(j)));

  json guarded = j;
  guarded["guards"]["strict_forward"] = true;
  CHECK_THROWS_WITH_AS(ValidateScenario(ParseJson(guarded)),
                       doctest::Contains("anti-synchronized"),
                       ValidationError);
}

TEST_CASE("step count and frame layout follow the horizon") {
  ScenarioConfig config = ParseJson(BaseScenario());
  config.horizon = 2.0;
  CHECK(StepCount(config) == 200);
  const TrajectoryLog log = Run(config);
  REQUIRE(log.frames.size() == 201);
  CHECK(log.pair_index ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  for (size_t k = 0; k < log.frames.size(); ++k) {
    CHECK(log.frames[k].t == static_cast<double>(k) * 0.01);
    CHECK(log.frames[k].vehicles.size() == 3);
    CHECK(log.frames[k].pairs.size() == 3);
  }

  ScenarioConfig coarse = config;
  coarse.horizon = 1.0;
  coarse.step = 0.3;
  CHECK(StepCount(coarse) == 3);
}

TEST_CASE("reruns of the same scenario produce byte-identical CSV") {
  ScenarioConfig config = ParseJson(BaseScenario());
  config.horizon = 5.0;
  std::ostringstream first;
  WriteCsv(Run(config), first);
  std::ostringstream second;
  WriteCsv(Run(config), second);
  CHECK(first.str() == second.str());
  CHECK(first.str().find('\r') == std::string::npos);
}

TEST_CASE("a leader-only scenario traces its circle") {
  const ScenarioConfig config = LeaderOnlyCircle();
  CHECK_NOTHROW(ValidateScenario(config));
  const TrajectoryLog log = Run(config);
  const Eigen::Vector2d center(0.0, 0.06 / 0.05);
  for (const LogFrame& frame : log.frames) {
    const VehicleSample& s = frame.vehicles.at(0);
    const double radius = (Eigen::Vector2d(s.x, s.y) - center).norm();
    CHECK(std::abs(radius - 1.2) < 1e-9);
    CHECK(std::abs(WrapAngle(s.theta - 0.05 * frame.t)) < 1e-9);
    CHECK(s.v == 0.06);
    CHECK(s.omega == 0.05);
    CHECK(s.err_p == 0.0);
    CHECK(s.lyap == 0.0);
  }
}

TEST_CASE("followers started on their orbits register as converged at t = 0") {
  ScenarioConfig config = test::Sec5Config();
  config.horizon = 10.0;
  const std::vector<ResolvedNode> nodes = ResolveTree(config.tree, 0.06, 0.05);
  config.follower_initial[0] =
      AdjointOrbitPose(config.leader_initial, nodes[1].config);
  config.follower_initial[1] =
      AdjointOrbitPose(config.leader_initial, nodes[2].config);
  CHECK_NOTHROW(ValidateScenario(config));

  const TrajectoryLog log = Run(config);
  double max_err = 0.0;
  for (const LogFrame& frame : log.frames) {
    for (const VehicleSample& s : frame.vehicles) {
      max_err = std::max(max_err, s.err_p);
    }
  }
  CHECK(max_err < 1e-6);

  const RunSummary summary = ComputeMetrics(log, config);
  CHECK(summary.convergence_time == 0.0);
  CHECK(summary.max_distance_variation < 1e-9);
}

TEST_CASE("trajectory CSV carries the documented schema") {
  ScenarioConfig config = ParseJson(BaseScenario());
  config.horizon = 1.0;
  const TrajectoryLog log = Run(config);
  std::ostringstream out;
  WriteCsv(log, out);
  const std::string csv = out.str();

  std::istringstream lines(csv);
  std::string header;
  REQUIRE(std::getline(lines, header));
  CHECK(header ==
        "t,vid,x,y,theta,v,omega,err_p,err_theta,lyap,"
        "d_0_1,px_0_1,py_0_1,d_0_2,px_0_2,py_0_2,d_1_2,px_1_2,py_1_2");

  size_t rows = 0;
  std::string line;
  std::string first_row;
  while (std::getline(lines, line)) {
    if (rows == 0) first_row = line;
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 18);
  }
  CHECK(rows == log.frames.size() * 3);
  CHECK(first_row.substr(0, 4) == "0,0,");
  // %.9g keeps short decimals short.
  CHECK(csv.find("\n0.01,0,") != std::string::npos);
}

TEST_CASE("run summaries serialize with a stable key order") {
  ScenarioConfig config = ParseJson(BaseScenario());
  config.horizon = 5.0;
  const TrajectoryLog log = Run(config);
  const RunSummary summary = ComputeMetrics(log, config);
  const std::string text = SummaryJson(summary);

  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  const std::vector<std::string> expected{
      "scenario",           "class",
      "window_seconds",     "steady_distances",
      "distance_variations", "max_distance_variation",
      "steady_speeds",      "min_v",
      "max_abs_omega",      "convergence_time",
      "convergence_threshold", "lyapunov_monotone_fraction"};
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == expected);

  CHECK(j["class"] == "StrictRigidBody");
  CHECK(j["scenario"] == "paper_sec5");
  CHECK(j["min_v"].get<double>() > 0.0);
  CHECK(j["steady_distances"].contains("d_0_1"));
  CHECK(j["steady_speeds"].size() == 3);
  CHECK(SummaryJson(summary) == text);
}

TEST_CASE("SVG export writes five deterministic panels") {
  ScenarioConfig config = ParseJson(BaseScenario());
  config.horizon = 2.0;
  const TrajectoryLog log = Run(config);

  const fs::path dir_a = TestOutputDir("svg_a");
  const fs::path dir_b = TestOutputDir("svg_b");
  const std::vector<fs::path> paths_a = WriteSvgPlots(log, dir_a, "sample");
  const std::vector<fs::path> paths_b = WriteSvgPlots(log, dir_b, "sample");
  REQUIRE(paths_a.size() == 5);
  const std::vector<std::string> suffixes{"_distances", "_headings", "_speeds",
                                          "_omegas", "_trajectories"};
  for (size_t i = 0; i < 5; ++i) {
    CHECK(paths_a[i].filename().string() == "sample" + suffixes[i] + ".svg");
    const std::string body = ReadFile(paths_a[i]);
    CHECK(body.rfind("<svg", 0) == 0);
    CHECK(body.find("</svg>") != std::string::npos);
    CHECK(body == ReadFile(paths_b[i]));
  }
}

TEST_CASE("metrics report non-convergence and Lyapunov decay honestly") {
  ScenarioConfig config = ParseJson(BaseScenario());
  config.horizon = 5.0;
  const RunSummary early = ComputeMetrics(Run(config), config);
  CHECK(early.convergence_time == -1.0);

  config.horizon = 60.0;
  const RunSummary later = ComputeMetrics(Run(config), config);
  CHECK(later.convergence_time > 0.0);
  CHECK(later.convergence_time < 30.0);
  // Brief increases are confined to the heading transient of the first
  // few seconds; everything after dissipates within the slack.
  CHECK(later.lyapunov_monotone_fraction > 0.98);
  CHECK(later.min_v > 0.0);
}

TEST_CASE("a strict-mode degenerate direction aborts with its provenance") {
  ScenarioConfig config;
  config.name = "degenerate";
  config.horizon = 1.0;
  config.step = 0.01;
  config.profile.v = Signal::Constant(0.06);
  config.profile.omega = Signal::Constant(0.05);
  config.tree.vehicle_count = 2;
  config.tree.edges.resize(1);
  config.follower_initial.resize(1);
  config.follower_initial[0].position = Eigen::Vector2d(std::atanh(0.2), 0.0);
  config.gains = TrackingGains{0.3, 0.3};
  config.guards.hold_on_degenerate = false;
  CHECK_NOTHROW(ValidateScenario(config));
  CHECK_THROWS_WITH_AS(Run(config), doctest::Contains("vehicle 1 at step 0"),
                       DegenerateDirectionError);
}

int RunCli(const std::string& args) {
  const std::string command =
      std::string(SE2FORM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

TEST_CASE("CLI exit codes distinguish success, validation, and aborts") {
  const fs::path out = TestOutputDir("cli");
  CHECK(RunCli("check " + ScenarioPath("paper_sec5.json").string()) == 0);
  CHECK(RunCli("classify " + ScenarioPath("weak_rigid.json").string()) == 0);
  CHECK(RunCli("check /nonexistent/scenario.json") == 2);
  CHECK(RunCli("simulate " + ScenarioPath("paper_sec5.json").string() +
               " --horizon 2 --format xml --out " + out.string()) == 2);
  CHECK(RunCli("simulate " + ScenarioPath("paper_sec5.json").string() +
               " --horizon 2 --out " + out.string()) == 0);

  // A scenario that degenerates at the first step in strict mode.
  json degenerate = BaseScenario();
  degenerate["name"] = "degenerate";
  degenerate["horizon"] = 1.0;
  degenerate["vehicles"] =
      json::array({{{"theta", 0.0}, {"x", std::atanh(0.2)}, {"y", 0.0}}});
  degenerate["tree"] =
      json::array({{{"child", 1}, {"parent", 0}, {"offset", {0.0, 0.0}}}});
  degenerate["guards"] = {{"strict_forward", false},
                          {"hold_on_degenerate", false}};
  const fs::path degenerate_path = out / "degenerate.json";
  {
    std::ofstream file(degenerate_path);
    file << degenerate.dump(2) << "\n";
  }
  CHECK(RunCli("simulate " + degenerate_path.string() + " --out " +
               out.string()) == 3);
}

TEST_CASE("the simulate subcommand writes csv, json, and svg artifacts") {
  const fs::path out = TestOutputDir("artifacts");
  REQUIRE(RunCli("simulate " + ScenarioPath("paper_sec5.json").string() +
                 " --horizon 2 --out " + out.string()) == 0);
  CHECK(fs::exists(out / "paper_sec5.csv"));
  CHECK(fs::exists(out / "paper_sec5_summary.json"));
  for (const char* suffix :
       {"_distances", "_headings", "_speeds", "_omegas", "_trajectories"}) {
    CHECK(fs::exists(out / ("paper_sec5" + std::string(suffix) + ".svg")));
  }
  const json summary =
      json::parse(ReadFile(out / "paper_sec5_summary.json"));
  CHECK(summary["class"] == "StrictRigidBody");
}

}  // namespace
}  // namespace se2form
