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

#include "se2form/scenario.h"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <sstream>
#include <string_view>

#include "json.hpp"

#include "se2form/error.h"

namespace se2form {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& path, std::string_view what) {
  throw ValidationError(path + ": " + std::string(what));
}

void ExpectObject(const json& j, const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object");
}

void ExpectKeys(const json& obj, const std::string& path,
                std::initializer_list<std::string_view> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (std::string_view key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) Fail(path + "." + it.key(), "unknown key");
  }
}

const json* Find(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double GetNumber(const json& obj, const std::string& path,
                 const std::string& key) {
  const json* j = Find(obj, key);
  if (j == nullptr) Fail(path + "." + key, "missing required number");
  if (!j->is_number()) Fail(path + "." + key, "expected a number");
  return j->get<double>();
}

double GetNumberOr(const json& obj, const std::string& path,
                   const std::string& key, double fallback) {
  const json* j = Find(obj, key);
  if (j == nullptr) return fallback;
  if (!j->is_number()) Fail(path + "." + key, "expected a number");
  return j->get<double>();
}

int GetInt(const json& obj, const std::string& path, const std::string& key) {
  const json* j = Find(obj, key);
  if (j == nullptr) Fail(path + "." + key, "missing required integer");
  if (!j->is_number_integer()) Fail(path + "." + key, "expected an integer");
  return j->get<int>();
}

bool GetBoolOr(const json& obj, const std::string& path, const std::string& key,
               bool fallback) {
  const json* j = Find(obj, key);
  if (j == nullptr) return fallback;
  if (!j->is_boolean()) Fail(path + "." + key, "expected a boolean");
  return j->get<bool>();
}

std::string GetStringOr(const json& obj, const std::string& path,
                        const std::string& key, const std::string& fallback) {
  const json* j = Find(obj, key);
  if (j == nullptr) return fallback;
  if (!j->is_string()) Fail(path + "." + key, "expected a string");
  return j->get<std::string>();
}

Signal ParseSignal(const json& j, const std::string& path) {
  ExpectObject(j, path);
  const std::string kind = GetStringOr(j, path, "kind", "");
  if (kind == "constant") {
    ExpectKeys(j, path, {"kind", "value"});
    return Signal::Constant(GetNumber(j, path, "value"));
  }
  if (kind == "sinusoid") {
    ExpectKeys(j, path, {"kind", "offset", "amplitude", "angular_frequency",
                         "phase"});
    return Signal::Sinusoid(GetNumber(j, path, "offset"),
                            GetNumber(j, path, "amplitude"),
                            GetNumber(j, path, "angular_frequency"),
                            GetNumberOr(j, path, "phase", 0.0));
  }
  if (kind == "piecewise_constant") {
    ExpectKeys(j, path, {"kind", "times", "values"});
    const json* times = Find(j, "times");
    const json* values = Find(j, "values");
    if (times == nullptr || !times->is_array()) {
      Fail(path + ".times", "expected an array of numbers");
    }
    if (values == nullptr || !values->is_array()) {
      Fail(path + ".values", "expected an array of numbers");
    }
    try {
      return Signal::PiecewiseConstant(times->get<std::vector<double>>(),
                                       values->get<std::vector<double>>());
    } catch (const std::exception& e) {
      Fail(path, e.what());
    }
  }
  Fail(path + ".kind",
       "expected \"constant\", \"sinusoid\", or \"piecewise_constant\"");
}

Pose ParsePose(const json& j, const std::string& path) {
  ExpectObject(j, path);
  ExpectKeys(j, path, {"theta", "x", "y"});
  Pose pose;
  pose.rotation = Rotation::FromAngle(GetNumberOr(j, path, "theta", 0.0));
  pose.position.x() = GetNumberOr(j, path, "x", 0.0);
  pose.position.y() = GetNumberOr(j, path, "y", 0.0);
  return pose;
}

FormationClass ParseObjective(const std::string& name, const std::string& path) {
  if (name == "StrictRigidBody") return FormationClass::kStrictRigidBody;
  if (name == "WeakRigidBody") return FormationClass::kWeakRigidBody;
  if (name == "Parallel") return FormationClass::kParallel;
  if (name == "TranslationalLine") return FormationClass::kTranslationalLine;
  Fail(path, "unknown formation class \"" + name + "\"");
}

}  // namespace

ScenarioConfig ParseScenario(const std::string& text,
                             const std::string& default_name) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  ExpectObject(root, "scenario");
  ExpectKeys(root, "scenario",
             {"name", "horizon", "step", "seed", "leader", "vehicles", "tree",
              "gains", "saturation", "objective", "guards", "feedforward"});

  ScenarioConfig config;
  config.name = GetStringOr(root, "scenario", "name", default_name);
  config.horizon = GetNumber(root, "scenario", "horizon");
  config.step = GetNumber(root, "scenario", "step");
  const double seed = GetNumberOr(root, "scenario", "seed", 0.0);
  if (seed < 0.0 || seed != std::floor(seed)) {
    Fail("scenario.seed", "expected a non-negative integer");
  }
  config.seed = static_cast<std::uint64_t>(seed);

  const json* leader = Find(root, "leader");
  if (leader == nullptr) Fail("scenario.leader", "missing required object");
  ExpectObject(*leader, "leader");
  ExpectKeys(*leader, "leader", {"initial", "v", "omega", "numerical_rates"});
  if (const json* initial = Find(*leader, "initial")) {
    config.leader_initial = ParsePose(*initial, "leader.initial");
  }
  const json* v = Find(*leader, "v");
  if (v == nullptr) Fail("leader.v", "missing required signal object");
  config.profile.v = ParseSignal(*v, "leader.v");
  const json* omega = Find(*leader, "omega");
  if (omega == nullptr) Fail("leader.omega", "missing required signal object");
  config.profile.omega = ParseSignal(*omega, "leader.omega");
  config.profile.numerical_rates =
      GetBoolOr(*leader, "leader", "numerical_rates", false);
  config.profile.fd_step = config.step;

  const json* vehicles = Find(root, "vehicles");
  if (vehicles == nullptr || !vehicles->is_array()) {
    Fail("scenario.vehicles", "expected an array of poses");
  }
  for (size_t i = 0; i < vehicles->size(); ++i) {
    config.follower_initial.push_back(
        ParsePose((*vehicles)[i], "vehicles[" + std::to_string(i) + "]"));
  }

  const json* tree = Find(root, "tree");
  if (tree == nullptr || !tree->is_array()) {
    Fail("scenario.tree", "expected an array of edges");
  }
  config.tree.vehicle_count = static_cast<int>(tree->size()) + 1;
  config.tree.edges.resize(tree->size());
  std::vector<bool> seen(tree->size() + 1, false);
  for (size_t i = 0; i < tree->size(); ++i) {
    const std::string path = "tree[" + std::to_string(i) + "]";
    const json& entry = (*tree)[i];
    ExpectObject(entry, path);
    ExpectKeys(entry, path, {"child", "parent", "offset"});
    const int child = GetInt(entry, path, "child");
    if (child < 1 || child >= config.tree.vehicle_count) {
      Fail(path + ".child", "expected a follower index in [1, " +
                                std::to_string(config.tree.vehicle_count - 1) +
                                "]");
    }
    if (seen[static_cast<size_t>(child)]) {
      Fail(path + ".child", "vehicle listed twice");
    }
    seen[static_cast<size_t>(child)] = true;
    TreeEdge& edge = config.tree.edges[static_cast<size_t>(child - 1)];
    edge.parent = GetInt(entry, path, "parent");
    const json* offset = Find(entry, "offset");
    if (offset == nullptr || !offset->is_array() || offset->size() != 2 ||
        !(*offset)[0].is_number() || !(*offset)[1].is_number()) {
      Fail(path + ".offset", "expected [x, y]");
    }
    edge.offset.x = (*offset)[0].get<double>();
    edge.offset.y = (*offset)[1].get<double>();
  }

  const json* gains = Find(root, "gains");
  if (gains == nullptr) Fail("scenario.gains", "missing required object");
  ExpectObject(*gains, "gains");
  ExpectKeys(*gains, "gains", {"k1", "k2"});
  config.gains.k1 = GetNumber(*gains, "gains", "k1");
  config.gains.k2 = GetNumber(*gains, "gains", "k2");

  const std::string sat = GetStringOr(root, "scenario", "saturation", "tanh");
  if (sat == "tanh") {
    config.saturation = Saturation::kTanh;
  } else if (sat == "algebraic") {
    config.saturation = Saturation::kAlgebraic;
  } else {
    Fail("scenario.saturation", "expected \"tanh\" or \"algebraic\"");
  }

  config.objective = ParseObjective(
      GetStringOr(root, "scenario", "objective", "StrictRigidBody"),
      "scenario.objective");

  if (const json* guards = Find(root, "guards")) {
    ExpectObject(*guards, "guards");
    ExpectKeys(*guards, "guards", {"strict_forward", "hold_on_degenerate"});
    config.guards.strict_forward =
        GetBoolOr(*guards, "guards", "strict_forward", false);
    config.guards.hold_on_degenerate =
        GetBoolOr(*guards, "guards", "hold_on_degenerate", true);
  }

  const std::string ff =
      GetStringOr(root, "scenario", "feedforward", "virtual_leader");
  if (ff == "virtual_leader") {
    config.feedforward = FeedforwardSource::kVirtualLeader;
  } else if (ff == "parent") {
    config.feedforward = FeedforwardSource::kParent;
  } else {
    Fail("scenario.feedforward", "expected \"virtual_leader\" or \"parent\"");
  }

  return config;
}

ScenarioConfig LoadScenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot read scenario file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  ScenarioConfig config = ParseScenario(buffer.str(), path.stem().string());
  ValidateScenario(config);
  return config;
}

long StepCount(const ScenarioConfig& config) {
  return static_cast<long>(std::floor(config.horizon / config.step + 1.0e-9));
}

void ValidateScenario(const ScenarioConfig& config) {
  if (!(config.step > 0.0) || !std::isfinite(config.step)) {
    throw ValidationError("scenario.step: must be positive and finite");
  }
  if (!(config.horizon >= config.step) || !std::isfinite(config.horizon)) {
    throw ValidationError("scenario.horizon: must cover at least one step");
  }
  if (!(config.gains.k1 > 0.0) || !(config.gains.k2 > 0.0)) {
    throw ValidationError("gains: k1 and k2 must be positive");
  }
  if (config.follower_initial.size() != config.tree.edges.size()) {
    throw ValidationError(
        "scenario.vehicles: size must match the number of tree edges");
  }
  ValidateTree(config.tree);

  std::vector<FormationOffset> offsets;
  offsets.reserve(config.tree.edges.size());
  for (const TreeEdge& edge : config.tree.edges) offsets.push_back(edge.offset);

  FormationClass actual;
  try {
    actual = Classify(offsets, config.profile, config.horizon, config.step);
  } catch (const SingularTaskError& e) {
    throw ValidationError(std::string("tree: ") + e.what());
  }
  if (actual != config.objective) {
    if (config.objective == FormationClass::kStrictRigidBody &&
        actual == FormationClass::kWeakRigidBody) {
      throw ValidationError(
          "scenario.objective: StrictRigidBody requires a constant v0/omega0 "
          "ratio, but the leader profile varies it");
    }
    throw ValidationError(
        "scenario.objective: declared " +
        std::string(ToString(config.objective)) +
        " but the offsets and profile classify as " +
        std::string(ToString(actual)));
  }

  // Walk the resolved fleet at every integration step: leader positivity,
  // chained task feasibility, and the data the strict-forward guard needs.
  const long steps = StepCount(config);
  double min_feedforward_speed = std::numeric_limits<double>::infinity();
  bool anti_synchronized = false;
  for (long k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * config.step;
    const double v0 = config.profile.Speed(t);
    const double w0 = config.profile.Omega(t);
    if (!std::isfinite(v0) || !std::isfinite(w0)) {
      throw ValidationError("leader: profile is not finite at t = " +
                            std::to_string(t));
    }
    if (!(v0 > 0.0)) {
      throw ValidationError(
          "leader.v: forward speed must stay positive (t = " +
          std::to_string(t) + ")");
    }
    std::vector<ResolvedNode> nodes;
    try {
      nodes = ResolveTree(config.tree, v0, w0, config.profile.SpeedRate(t),
                          config.profile.OmegaRate(t));
    } catch (const Error& e) {
      throw ValidationError("tree: " + std::string(e.what()) +
                            " (t = " + std::to_string(t) + ")");
    }
    for (const ResolvedNode& node : nodes) {
      min_feedforward_speed = std::min(min_feedforward_speed, node.twist.vx);
    }
    for (size_t e = 0; e < config.tree.edges.size(); ++e) {
      const size_t child = e + 1;
      const size_t parent = static_cast<size_t>(config.tree.edges[e].parent);
      const double rel = WrapAngle(nodes[child].config.rotation.angle() -
                                   nodes[parent].config.rotation.angle());
      if (std::abs(std::abs(rel) - std::numbers::pi) < 1.0e-9) {
        anti_synchronized = true;
      }
    }
  }

  if (config.guards.strict_forward) {
    const double bound = config.gains.k1 * std::numbers::sqrt2;
    if (!(bound < min_feedforward_speed)) {
      throw ValidationError(
          "gains.k1: strict-forward guard requires k1*sqrt(2) < every "
          "feedforward speed on the horizon (" +
          std::to_string(bound) + " >= " + std::to_string(min_feedforward_speed) +
          ")");
    }
    if (anti_synchronized) {
      throw ValidationError(
          "tree: an edge resolves to an anti-synchronized heading offset "
          "(pi), rejected under the strict-forward guard");
    }
  }
}

}  // namespace se2form
