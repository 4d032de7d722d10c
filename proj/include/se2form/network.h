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

#include <vector>

#include "se2form/formation.h"
#include "se2form/tracking.h"

namespace se2form {

// One sensing/communication edge: the vehicle owning this entry keeps the
// given offset relative to its parent.
struct TreeEdge {
  int parent = 0;
  FormationOffset offset;
};

// Directed formation graph rooted at vehicle 0 (the leader). edges[i - 1]
// belongs to vehicle i, which structurally enforces a single parent per
// non-root vehicle; cycles and dangling parents are caught by ValidateTree.
struct DirectedTree {
  int vehicle_count = 0;
  std::vector<TreeEdge> edges;
};

// Structural validation: edge list size, parent indices in range, no
// self-loops, every vehicle reaches the root. Throws TopologyError naming
// the offending vehicle.
void ValidateTree(const DirectedTree& tree);

// Deterministic root-first order (sorted by depth, then index). Requires a
// validated tree.
std::vector<int> TopologicalOrder(const DirectedTree& tree);

// Root-frame resolution of one vehicle's desired state on the orbit.
struct ResolvedNode {
  Pose config;         // desired configuration relative to the root
  Twist twist;         // orbit body twist (omega, vx, 0)
  double v_rate = 0.0;
  double omega_rate = 0.0;
};

// Chains DesiredConfig / AdjointVelocity down the tree for leader inputs
// (v0, omega0) and their rates. Entry 0 carries the identity config and the
// leader twist. Throws SingularTaskError / InfeasibleConfigurationError
// from the per-edge construction.
std::vector<ResolvedNode> ResolveTree(const DirectedTree& tree, double v0,
                                      double omega0, double v0_rate = 0.0,
                                      double omega0_rate = 0.0);

// Everything a vehicle communicates over an edge to its children: its pose,
// its commanded inputs, and the analytic rates of those inputs chained from
// the root profile.
struct ParentSignal {
  Pose pose;
  double v = 0.0;
  double omega = 0.0;
  double v_rate = 0.0;
  double omega_rate = 0.0;
};

// The moving reference a follower actually tracks: its parent's pose
// composed with the desired configuration, carried along by the adjoint
// transport of the parent's inputs.
struct VirtualLeaderState {
  Pose config;         // desired configuration for this edge, at this instant
  Pose pose;           // parent pose * config
  Twist twist;         // (omega~, v~, 0)
  double v_rate = 0.0;      // d v~ / dt
  double omega_rate = 0.0;  // d omega~ / dt (second-order profile terms of
                            // the parent are not communicated and truncate)
};

VirtualLeaderState VirtualLeader(const ParentSignal& parent,
                                 const FormationOffset& offset);

// Which body supplies the feedforward term of the follower's virtual
// control. kVirtualLeader closes the loop on the virtual leader's own twist
// and converges to the exact offset; kParent feeds the parent's raw heading
// and speed through verbatim, which leaves a steady bias whenever the two
// twists differ (kept for comparison runs).
enum class FeedforwardSource { kVirtualLeader, kParent };

struct FollowerOutput {
  double v = 0.0;
  double omega = 0.0;
  TrackingError error;            // relative to the virtual leader
  VirtualLeaderState virtual_leader;
};

// Per-edge formation controller. Deliberately consumes nothing beyond the
// vehicle's own state and its parent's communicated signal, so the control
// law stays implementable with purely local information.
class FollowerController {
 public:
  FollowerController(const FormationOffset& offset, const TrackingGains& gains,
                     Saturation sat,
                     DegenerateMode mode = DegenerateMode::kHold,
                     FeedforwardSource feedforward = FeedforwardSource::kVirtualLeader,
                     double direction_epsilon = kDirectionEpsilon);

  FollowerOutput Compute(const VehicleState& self, const ParentSignal& parent);

  const TrackingController& tracker() const { return tracker_; }

 private:
  FormationOffset offset_;
  FeedforwardSource feedforward_;
  TrackingController tracker_;
};

}  // namespace se2form
