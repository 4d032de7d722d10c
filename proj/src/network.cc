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

#include "se2form/network.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "se2form/error.h"

namespace se2form {
namespace {

const Eigen::Vector2d kE1(1.0, 0.0);

// Depth of each vehicle along parent links; detects cycles on the way.
std::vector<int> Depths(const DirectedTree& tree) {
  std::vector<int> depth(static_cast<size_t>(tree.vehicle_count), -1);
  depth[0] = 0;
  for (int i = 1; i < tree.vehicle_count; ++i) {
    int hops = 0;
    int node = i;
    while (node != 0) {
      node = tree.edges[static_cast<size_t>(node - 1)].parent;
      if (++hops > tree.vehicle_count) {
        throw TopologyError("vehicle " + std::to_string(i) +
                            " never reaches the root (cycle in parent links)");
      }
    }
    depth[static_cast<size_t>(i)] = hops;
  }
  return depth;
}

}  // namespace

void ValidateTree(const DirectedTree& tree) {
  if (tree.vehicle_count < 1) {
    throw TopologyError("tree needs at least the root vehicle");
  }
  if (tree.edges.size() != static_cast<size_t>(tree.vehicle_count - 1)) {
    throw TopologyError("tree has " + std::to_string(tree.edges.size()) +
                        " edges for " + std::to_string(tree.vehicle_count) +
                        " vehicles; expected one per non-root vehicle");
  }
  for (int i = 1; i < tree.vehicle_count; ++i) {
    const int parent = tree.edges[static_cast<size_t>(i - 1)].parent;
    if (parent < 0 || parent >= tree.vehicle_count) {
      throw TopologyError("vehicle " + std::to_string(i) +
                          " names out-of-range parent " + std::to_string(parent));
    }
    if (parent == i) {
      throw TopologyError("vehicle " + std::to_string(i) + " is its own parent");
    }
  }
  Depths(tree);  // throws on cycles
}

std::vector<int> TopologicalOrder(const DirectedTree& tree) {
  const std::vector<int> depth = Depths(tree);
  std::vector<int> order(static_cast<size_t>(tree.vehicle_count));
  for (int i = 0; i < tree.vehicle_count; ++i) order[static_cast<size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&depth](int a, int b) {
    return depth[static_cast<size_t>(a)] < depth[static_cast<size_t>(b)];
  });
  return order;
}

std::vector<ResolvedNode> ResolveTree(const DirectedTree& tree, double v0,
                                      double omega0, double v0_rate,
                                      double omega0_rate) {
  std::vector<ResolvedNode> nodes(static_cast<size_t>(tree.vehicle_count));
  nodes[0].config = Pose{};
  nodes[0].twist = Twist::Unicycle(omega0, v0);
  nodes[0].v_rate = v0_rate;
  nodes[0].omega_rate = omega0_rate;
  for (int i : TopologicalOrder(tree)) {
    if (i == 0) continue;
    const TreeEdge& edge = tree.edges[static_cast<size_t>(i - 1)];
    const ResolvedNode& up = nodes[static_cast<size_t>(edge.parent)];
    ParentSignal signal;
    signal.pose = up.config;
    signal.v = up.twist.vx;
    signal.omega = up.twist.omega;
    signal.v_rate = up.v_rate;
    signal.omega_rate = up.omega_rate;
    const VirtualLeaderState vl = VirtualLeader(signal, edge.offset);
    ResolvedNode& node = nodes[static_cast<size_t>(i)];
    node.config = vl.pose;  // parent's root-frame config composed with the edge
    node.twist = vl.twist;
    node.v_rate = vl.v_rate;
    node.omega_rate = vl.omega_rate;
  }
  return nodes;
}

VirtualLeaderState VirtualLeader(const ParentSignal& parent,
                                 const FormationOffset& offset) {
  const double theta = HeadingOffset(offset, parent.v, parent.omega);
  const double theta_rate = HeadingOffsetRate(offset, parent.v, parent.omega,
                                              parent.v_rate, parent.omega_rate);

  VirtualLeaderState vl;
  vl.config = DesiredConfig(offset, theta);
  vl.pose = Compose(parent.pose, vl.config);
  vl.twist = AdjointVelocity(vl.config, Twist::Unicycle(parent.omega, parent.v),
                             theta_rate);

  const double a = parent.omega * offset.x;
  const double b = parent.v - parent.omega * offset.y;
  const double a_rate = parent.omega_rate * offset.x;
  const double b_rate = parent.v_rate - parent.omega_rate * offset.y;
  // v~ = hypot(a, b), so dv~ follows directly.
  vl.v_rate = (a * a_rate + b * b_rate) / std::hypot(a, b);
  // domega~ = parent omega rate + d(theta_rate)/dt, truncating the parent's
  // uncommunicated second-order terms; exact whenever theta_rate = 0.
  const double d = a * a + b * b;
  vl.omega_rate = parent.omega_rate - 2.0 * theta_rate * (a * a_rate + b * b_rate) / d;
  return vl;
}

FollowerController::FollowerController(const FormationOffset& offset,
                                       const TrackingGains& gains,
                                       Saturation sat, DegenerateMode mode,
                                       FeedforwardSource feedforward,
                                       double direction_epsilon)
    : offset_(offset),
      feedforward_(feedforward),
      tracker_(gains, sat, mode, direction_epsilon) {}

FollowerOutput FollowerController::Compute(const VehicleState& self,
                                           const ParentSignal& parent) {
  const VirtualLeaderState vl = VirtualLeader(parent, offset_);

  TargetSignal target;
  target.pose = vl.pose;
  target.world_velocity = vl.twist.vx * (vl.pose.rotation * kE1);
  if (feedforward_ == FeedforwardSource::kVirtualLeader) {
    target.feedforward_heading = vl.pose.rotation;
    target.feedforward_speed = vl.twist.vx;
    target.feedforward_speed_rate = vl.v_rate;
    target.feedforward_omega = vl.twist.omega;
  } else {
    target.feedforward_heading = parent.pose.rotation;
    target.feedforward_speed = parent.v;
    target.feedforward_speed_rate = parent.v_rate;
    target.feedforward_omega = parent.omega;
  }

  const ControlCommand cmd = tracker_.Compute(self, target);
  FollowerOutput out;
  out.v = cmd.v;
  out.omega = cmd.omega;
  out.error = cmd.error;
  out.virtual_leader = vl;
  return out;
}

}  // namespace se2form
