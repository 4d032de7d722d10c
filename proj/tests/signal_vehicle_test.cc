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

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "se2form/signal.h"
#include "se2form/vehicle.h"
#include "support/oracles.h"
#include "support/runners.h"

namespace se2form {
namespace {

TEST_CASE("constant signal holds its value with zero rate") {
  const Signal s = Signal::Constant(0.06);
  CHECK(s.Value(0.0) == 0.06);
  CHECK(s.Value(123.4) == 0.06);
  CHECK(s.Rate(50.0) == 0.0);
}

TEST_CASE("sinusoid signal matches its formula and analytic rate") {
  const Signal s = Signal::Sinusoid(0.05, 0.02, 0.1, 0.3);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const double t = test::Uniform(rng, 0.0, 100.0);
    CHECK(std::abs(s.Value(t) - (0.05 + 0.02 * std::sin(0.1 * t + 0.3))) <
          1e-15);
    CHECK(std::abs(s.Rate(t) - 0.02 * 0.1 * std::cos(0.1 * t + 0.3)) < 1e-15);
    const double fd = test::CentralDifference(
        [&s](double u) { return s.Value(u); }, t, 1e-6);
    CHECK(std::abs(s.Rate(t) - fd) < 1e-6);
  }
}

TEST_CASE("piecewise-constant signal is right-continuous at its knots") {
  const Signal s = Signal::PiecewiseConstant({1.0, 2.0}, {0.1, 0.2, 0.3});
  CHECK(s.Value(0.0) == 0.1);
  CHECK(s.Value(0.999) == 0.1);
  CHECK(s.Value(1.0) == 0.2);
  CHECK(s.Value(1.5) == 0.2);
  CHECK(s.Value(2.0) == 0.3);
  CHECK(s.Value(100.0) == 0.3);
  CHECK(s.Rate(0.5) == 0.0);
  CHECK(s.Rate(1.0) == 0.0);
}

TEST_CASE("piecewise-constant signal rejects malformed knot data") {
  CHECK_THROWS_AS(Signal::PiecewiseConstant({2.0, 1.0}, {0.1, 0.2, 0.3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Signal::PiecewiseConstant({1.0, 1.0}, {0.1, 0.2, 0.3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Signal::PiecewiseConstant({1.0}, {0.1}),
                  std::invalid_argument);
}

TEST_CASE("leader profile rates: analytic by default, finite differences on demand") {
  LeaderProfile profile;
  profile.v = Signal::Sinusoid(0.06, 0.01, 0.2, 0.0);
  profile.omega = Signal::Constant(0.05);
  CHECK(profile.Speed(3.0) == doctest::Approx(0.06 + 0.01 * std::sin(0.6)));
  CHECK(profile.SpeedRate(3.0) ==
        doctest::Approx(0.01 * 0.2 * std::cos(0.6)).epsilon(1e-12));
  CHECK(profile.OmegaRate(7.0) == 0.0);

  profile.numerical_rates = true;
  profile.fd_step = 0.001;
  // Central difference of the sinusoid: error is O(fd_step^2).
  CHECK(std::abs(profile.SpeedRate(3.0) - 0.01 * 0.2 * std::cos(0.6)) < 1e-8);
}

TEST_CASE("step advances exactly along the unicycle arc") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    VehicleState state;
    state.pose.rotation =
        Rotation::FromAngle(test::Uniform(rng, -3.0, 3.0));
    state.pose.position = Eigen::Vector2d(test::Uniform(rng, -5.0, 5.0),
                                          test::Uniform(rng, -5.0, 5.0));
    const double v = test::Uniform(rng, -1.0, 1.0);
    const double omega = test::Uniform(rng, -2.0, 2.0);
    const double h = test::Uniform(rng, 0.001, 0.1);

    const VehicleState next = Step(state, v, omega, h);

    auto rhs = [&](double, const std::array<double, 3>& s) {
      return std::array<double, 3>{v * std::cos(s[2]), v * std::sin(s[2]),
                                   omega};
    };
    const auto ref = test::Rk4<3>(
        rhs,
        {state.pose.position.x(), state.pose.position.y(),
         state.pose.rotation.angle()},
        0.0, h, 1000);
    CHECK(std::abs(next.pose.position.x() - ref[0]) < 1e-12);
    CHECK(std::abs(next.pose.position.y() - ref[1]) < 1e-12);
    CHECK(std::abs(WrapAngle(next.pose.rotation.angle() - ref[2])) < 1e-12);
    CHECK(next.v == v);
    CHECK(next.omega == omega);
  }
}

TEST_CASE("step composes exactly across subdivisions") {
  VehicleState state;
  state.pose.rotation = Rotation::FromAngle(0.4);
  state.pose.position = Eigen::Vector2d(1.0, -2.0);
  const VehicleState whole = Step(state, 0.06, 0.05, 0.02);
  const VehicleState halves = Step(Step(state, 0.06, 0.05, 0.01), 0.06, 0.05, 0.01);
  CHECK((whole.pose.position - halves.pose.position).norm() < 1e-15);
  CHECK(std::abs(WrapAngle(whole.pose.rotation.angle() -
                           halves.pose.rotation.angle())) < 1e-15);
}

TEST_CASE("step rejects non-finite inputs") {
  VehicleState state;
  CHECK_THROWS_AS(Step(state, std::nan(""), 0.0, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(Step(state, 0.1, std::numeric_limits<double>::infinity(), 0.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(Step(state, 0.1, 0.0, std::nan("")), std::invalid_argument);
}

TEST_CASE("lateral velocity extracts the body-frame y component") {
  Pose pose;
  pose.rotation = Rotation::FromAngle(1.5707963267948966);
  // Heading +y: world +x velocity is pure negative lateral.
  CHECK(LateralVelocity(pose, Eigen::Vector2d(1.0, 0.0)) ==
        doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(LateralVelocity(pose, Eigen::Vector2d(0.0, 2.0))) < 1e-15);
}

TEST_CASE("midpoint finite-difference velocity has no lateral component on arcs") {
  // Exact group steps keep the non-holonomic constraint sharp: the central
  // difference of positions, taken in the frame of the middle sample,
  // stays lateral-free to machine precision under constant inputs.
  for (const double omega : {0.0, 0.05, -0.8, 2.0}) {
    const double v = 0.06;
    const double h = 0.01;
    std::vector<VehicleState> states(1);
    states[0].pose.rotation = Rotation::FromAngle(0.3);
    for (int k = 0; k < 200; ++k) {
      states.push_back(Step(states.back(), v, omega, h));
    }
    for (size_t k = 1; k + 1 < states.size(); ++k) {
      const Eigen::Vector2d fd =
          (states[k + 1].pose.position - states[k - 1].pose.position) /
          (2.0 * h);
      CHECK(std::abs(LateralVelocity(states[k].pose, fd)) <
            1e-6 * (1.0 + std::abs(v)));
    }
  }
}

TEST_CASE("midpoint finite-difference lateral stays bounded in closed loop") {
  test::LeaderFollowerOptions options;
  options.horizon = 60.0;
  options.follower_initial.rotation = Rotation::FromAngle(-0.7853981633974483);
  options.follower_initial.position = Eigen::Vector2d(0.0, -0.2);
  std::vector<VehicleState> leader_states;
  std::vector<VehicleState> follower_states;
  test::RunLeaderFollower(options, [&](long, double, const VehicleState& leader,
                                       const VehicleState& follower,
                                       const FollowerOutput&) {
    leader_states.push_back(leader);
    follower_states.push_back(follower);
  });
  for (const auto* track : {&leader_states, &follower_states}) {
    for (size_t k = 1; k + 1 < track->size(); ++k) {
      const Eigen::Vector2d fd = ((*track)[k + 1].pose.position -
                                  (*track)[k - 1].pose.position) /
                                 (2.0 * 0.01);
      CHECK(std::abs(LateralVelocity((*track)[k].pose, fd)) <
            1e-6 * (1.0 + std::abs((*track)[k].v)));
    }
  }
}

}  // namespace
}  // namespace se2form
