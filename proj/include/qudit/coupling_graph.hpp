// Copyright 2026 The Qudit Compiler Authors
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

#include "qudit/gates.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qudit {

using Level = std::size_t;
using LogicalState = std::size_t;
using Edge = std::pair<Level, Level>;

/**
 * Energy coupling graph of a single qudit.
 *
 * Nodes are physical energy levels and edges the drivable two-level
 * transitions. Logical states (computational ones first, ancillas after
 * them) sit on an injective subset of the levels; the remaining levels are
 * usable for routing only.
 *
 * Every level also carries the phase its content has picked up relative to
 * the logical frame: a free phase plus a pi sign flip left behind by
 * reordering pulses. The physical amplitude on level L equals
 * exp(i * (phaseOffset(L) + pi * signFlipped(L))) times the logical
 * amplitude of the state stored there.
 *
 * Instances are immutable snapshots. The edge structure is shared between
 * copies; "mutators" return a new graph.
 */
class EnergyCouplingGraph {
public:
  /// @param logicalToPhysical level of each logical state, by logical index
  /// @param ancillas logical indices flagged ancillary
  /// @param names optional display names ("0", "1", ..., "a0", ...)
  EnergyCouplingGraph(std::size_t numLevels, const std::vector<Edge>& edges,
                      std::vector<Level> logicalToPhysical,
                      const std::set<LogicalState>& ancillas = {},
                      std::vector<std::string> names = {});

  /// Fully connected levels 0..n-1 with identity placement.
  static EnergyCouplingGraph complete(std::size_t n);
  /// Chain 0-1-...-(n-1) with identity placement.
  static EnergyCouplingGraph path(std::size_t n);

  [[nodiscard]] std::size_t numLevels() const { return topo_->numLevels; }
  [[nodiscard]] std::size_t numLogical() const { return placement_.size(); }
  [[nodiscard]] std::size_t numComputational() const;
  [[nodiscard]] const std::vector<Edge>& edges() const { return topo_->edges; }
  [[nodiscard]] bool adjacent(Level a, Level b) const;
  [[nodiscard]] const std::vector<Level>& neighbours(Level l) const {
    return topo_->adjacency.at(l);
  }

  [[nodiscard]] Level levelOf(LogicalState s) const;
  [[nodiscard]] std::optional<LogicalState> stateAt(Level l) const;
  [[nodiscard]] const std::vector<Level>& placement() const {
    return placement_;
  }
  [[nodiscard]] const std::string& name(LogicalState s) const {
    return labels_->names.at(s);
  }
  [[nodiscard]] bool isAncilla(LogicalState s) const;
  [[nodiscard]] std::set<LogicalState> ancillas() const;
  /// Logical indices that are not ancillas, in logical order.
  [[nodiscard]] std::vector<LogicalState> computationalStates() const;

  [[nodiscard]] double phaseOffset(Level l) const { return phase_.at(l); }
  [[nodiscard]] bool signFlipped(Level l) const { return flip_.at(l) != 0; }
  /// Total accumulated phase of a level, wrapped to (-pi, pi].
  [[nodiscard]] double nodePhase(Level l) const;

  /// Hops between two levels; nullopt when disconnected.
  [[nodiscard]] std::optional<std::size_t> levelDistance(Level a,
                                                         Level b) const;
  /// Lexicographically smallest shortest level sequence from -> to.
  [[nodiscard]] std::vector<Level> shortestPath(Level from, Level to) const;

  /// Graph after a reordering pulse (|theta| == pi) on the gate's levels:
  /// contents swap and their phases follow, shifted by the pulse phases.
  [[nodiscard]] EnergyCouplingGraph afterPulse(const RotationGate& pulse) const;
  /// Graph after a virtual phase e^{i phi} on logical state s.
  [[nodiscard]] EnergyCouplingGraph afterLogicalPhase(LogicalState s,
                                                      double phi) const;
  [[nodiscard]] EnergyCouplingGraph withAncillaToggled(LogicalState s) const;
  [[nodiscard]] EnergyCouplingGraph withNodePhases(std::vector<double> phases)
      const;
  /// Same edges and labels, different placement; phases reset to zero.
  [[nodiscard]] EnergyCouplingGraph withPlacement(std::vector<Level> placement)
      const;

  /// Same placement and phases (phase-aware comparison is up to 2 pi).
  [[nodiscard]] bool sameFrame(const EnergyCouplingGraph& other,
                               double tol = 1e-12) const;

private:
  struct Topology {
    std::size_t numLevels = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Level>> adjacency;
    std::vector<std::vector<std::size_t>> dist;
  };
  struct Labels {
    std::vector<std::string> names;
  };

  EnergyCouplingGraph() = default;
  void rebuildOccupancy();
  void checkInvariants() const;

  std::shared_ptr<const Topology> topo_;
  std::shared_ptr<const Labels> labels_;
  std::vector<Level> placement_;
  std::vector<char> ancilla_;
  std::vector<int> occupant_;
  std::vector<double> phase_;
  std::vector<char> flip_;
};

/// Shortest-path hop count between the levels of two logical states.
/// Throws InvalidInput for unmapped states and DisconnectedGraph.
std::size_t distance(const EnergyCouplingGraph& g, LogicalState i,
                     LogicalState j);

struct RoutingPlan {
  std::vector<RotationGate> pulses;
  EnergyCouplingGraph resultingGraph;
};

/// Reordering pulses that walk state j along a shortest path until it is
/// adjacent to state i. State i never moves. Plan length is distance - 1.
RoutingPlan planRouting(const EnergyCouplingGraph& g, LogicalState i,
                        LogicalState j);

EnergyCouplingGraph markAncilla(const EnergyCouplingGraph& g, LogicalState s);
std::set<LogicalState> listAncillas(const EnergyCouplingGraph& g);

// ---------------------------------------------------------------------------
// Routed sequences and graph rules

/// Physical reordering pulse (|theta| == pi) on two adjacent levels.
struct ReorderOp {
  RotationGate pulse;
};

/// Logical rotation written on the ordered pair (from, to): the 2x2 block
/// acts on rows (from, to) in that order. from > to is allowed.
struct LogicalRotationOp {
  LogicalState from = 0;
  LogicalState to = 1;
  double theta = 0.0;
  double phi = 0.0;
};

/// Virtual phase e^{i phi} on a logical state.
struct LogicalPhaseOp {
  LogicalState state = 0;
  double phi = 0.0;
};

using RoutedOp = std::variant<ReorderOp, LogicalRotationOp, LogicalPhaseOp>;
using RoutedSequence = std::vector<RoutedOp>;

struct LoweredSequence {
  GateSequence gates;
  EnergyCouplingGraph finalGraph;
};

/**
 * Lower a routed sequence to physical gates on g.
 *
 * Rules, applied to each logical rotation at the current placement:
 *  - levels are ordered low -> high; a reversed pair negates phi;
 *  - theta flips sign when exactly one of the two levels carries a pi flip
 *    deposited by earlier reordering pulses;
 *  - phi gains phaseOffset(high) - phaseOffset(low).
 * Pulses are emitted unchanged and update placement and phases. Logical
 * phases are absorbed into the node phases. The two levels of a logical
 * rotation must be adjacent.
 */
LoweredSequence applyGraphRules(const RoutedSequence& s,
                                const EnergyCouplingGraph& g);

} // namespace qudit
