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

#include "qudit/coupling_graph.hpp"

#include "qudit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace qudit {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// Split a phase shift into an integer number of half turns and a remainder in
// [-pi/2, pi/2].
std::pair<long, double> splitHalfTurns(double delta) {
  const double k = std::round(delta / kPi);
  return {static_cast<long>(k), delta - k * kPi};
}

} // namespace

EnergyCouplingGraph::EnergyCouplingGraph(std::size_t numLevels,
                                         const std::vector<Edge>& edges,
                                         std::vector<Level> logicalToPhysical,
                                         const std::set<LogicalState>& ancillas,
                                         std::vector<std::string> names) {
  if (numLevels < 2) {
    throw InvalidInput("coupling graph needs at least two levels");
  }
  auto topo = std::make_shared<Topology>();
  topo->numLevels = numLevels;
  topo->adjacency.resize(numLevels);
  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (a >= numLevels || b >= numLevels) {
      throw InvalidInput("edge (" + std::to_string(a) + "," +
                         std::to_string(b) + ") references a missing level");
    }
    if (a == b) {
      throw InvalidInput("self-loop on level " + std::to_string(a));
    }
    const Edge e{std::min(a, b), std::max(a, b)};
    if (seen.insert(e).second) {
      topo->edges.push_back(e);
      topo->adjacency[e.first].push_back(e.second);
      topo->adjacency[e.second].push_back(e.first);
    }
  }
  std::sort(topo->edges.begin(), topo->edges.end());
  for (auto& adj : topo->adjacency) {
    std::sort(adj.begin(), adj.end());
  }
  topo->dist.assign(numLevels, std::vector<std::size_t>(numLevels, kUnreachable));
  for (Level src = 0; src < numLevels; ++src) {
    auto& d = topo->dist[src];
    d[src] = 0;
    std::deque<Level> queue{src};
    while (!queue.empty()) {
      const Level u = queue.front();
      queue.pop_front();
      for (const Level v : topo->adjacency[u]) {
        if (d[v] == kUnreachable) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  topo_ = std::move(topo);

  auto labels = std::make_shared<Labels>();
  if (names.empty()) {
    std::size_t numeric = 0;
    std::size_t anc = 0;
    for (LogicalState s = 0; s < logicalToPhysical.size(); ++s) {
      labels->names.push_back(ancillas.contains(s)
                                  ? "a" + std::to_string(anc++)
                                  : std::to_string(numeric++));
    }
  } else {
    if (names.size() != logicalToPhysical.size()) {
      throw InvalidInput("one name per logical state required");
    }
    labels->names = std::move(names);
  }
  labels_ = std::move(labels);

  placement_ = std::move(logicalToPhysical);
  ancilla_.assign(placement_.size(), 0);
  for (const auto s : ancillas) {
    if (s >= placement_.size()) {
      throw InvalidInput("ancilla flag on unmapped state " + std::to_string(s));
    }
    ancilla_[s] = 1;
  }
  phase_.assign(numLevels, 0.0);
  flip_.assign(numLevels, 0);
  rebuildOccupancy();
  checkInvariants();
}

EnergyCouplingGraph EnergyCouplingGraph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Level a = 0; a < n; ++a) {
    for (Level b = a + 1; b < n; ++b) {
      edges.emplace_back(a, b);
    }
  }
  std::vector<Level> placement(n);
  for (Level l = 0; l < n; ++l) {
    placement[l] = l;
  }
  return EnergyCouplingGraph(n, edges, placement);
}

EnergyCouplingGraph EnergyCouplingGraph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Level a = 0; a + 1 < n; ++a) {
    edges.emplace_back(a, a + 1);
  }
  std::vector<Level> placement(n);
  for (Level l = 0; l < n; ++l) {
    placement[l] = l;
  }
  return EnergyCouplingGraph(n, edges, placement);
}

void EnergyCouplingGraph::rebuildOccupancy() {
  occupant_.assign(topo_->numLevels, -1);
  for (LogicalState s = 0; s < placement_.size(); ++s) {
    const Level l = placement_[s];
    if (l >= topo_->numLevels) {
      throw InvalidInput("logical state " + std::to_string(s) +
                         " mapped to missing level " + std::to_string(l));
    }
    if (occupant_[l] != -1) {
      throw InvalidInput("placement is not injective at level " +
                         std::to_string(l));
    }
    occupant_[l] = static_cast<int>(s);
  }
}

void EnergyCouplingGraph::checkInvariants() const {
  if (placement_.size() < 2) {
    throw InvalidInput("at least two logical states must be mapped");
  }
  const Level root = placement_.front();
  for (const Level l : placement_) {
    if (topo_->dist[root][l] == kUnreachable) {
      throw DisconnectedGraph("mapped levels " + std::to_string(root) +
                              " and " + std::to_string(l) +
                              " are not connected");
    }
  }
}

std::size_t EnergyCouplingGraph::numComputational() const {
  return static_cast<std::size_t>(
      std::count(ancilla_.begin(), ancilla_.end(), 0));
}

bool EnergyCouplingGraph::adjacent(Level a, Level b) const {
  return a < numLevels() && b < numLevels() && topo_->dist[a][b] == 1;
}

Level EnergyCouplingGraph::levelOf(LogicalState s) const {
  if (s >= placement_.size()) {
    throw InvalidInput("logical state " + std::to_string(s) + " is not mapped");
  }
  return placement_[s];
}

std::optional<LogicalState> EnergyCouplingGraph::stateAt(Level l) const {
  if (l >= occupant_.size() || occupant_[l] < 0) {
    return std::nullopt;
  }
  return static_cast<LogicalState>(occupant_[l]);
}

bool EnergyCouplingGraph::isAncilla(LogicalState s) const {
  if (s >= ancilla_.size()) {
    throw InvalidInput("logical state " + std::to_string(s) + " is not mapped");
  }
  return ancilla_[s] != 0;
}

std::set<LogicalState> EnergyCouplingGraph::ancillas() const {
  std::set<LogicalState> out;
  for (LogicalState s = 0; s < ancilla_.size(); ++s) {
    if (ancilla_[s] != 0) {
      out.insert(s);
    }
  }
  return out;
}

std::vector<LogicalState> EnergyCouplingGraph::computationalStates() const {
  std::vector<LogicalState> out;
  for (LogicalState s = 0; s < ancilla_.size(); ++s) {
    if (ancilla_[s] == 0) {
      out.push_back(s);
    }
  }
  return out;
}

double EnergyCouplingGraph::nodePhase(Level l) const {
  return wrapAngle(phase_.at(l) + (flip_.at(l) != 0 ? kPi : 0.0));
}

std::optional<std::size_t> EnergyCouplingGraph::levelDistance(Level a,
                                                              Level b) const {
  if (a >= numLevels() || b >= numLevels()) {
    throw InvalidInput("level out of range");
  }
  const auto d = topo_->dist[a][b];
  if (d == kUnreachable) {
    return std::nullopt;
  }
  return d;
}

std::vector<Level> EnergyCouplingGraph::shortestPath(Level from,
                                                     Level to) const {
  if (!levelDistance(from, to)) {
    throw DisconnectedGraph("levels " + std::to_string(from) + " and " +
                            std::to_string(to) + " are not connected");
  }
  std::vector<Level> path{from};
  Level cur = from;
  while (cur != to) {
    const auto remaining = topo_->dist[cur][to];
    // Neighbours are sorted, so the first hit gives the lexicographic minimum.
    for (const Level next : topo_->adjacency[cur]) {
      if (topo_->dist[next][to] + 1 == remaining) {
        cur = next;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

EnergyCouplingGraph
EnergyCouplingGraph::afterPulse(const RotationGate& pulse) const {
  validate(pulse, numLevels());
  if (std::abs(std::abs(pulse.theta) - kPi) > 1e-12) {
    throw InvalidInput("reordering pulses must have |theta| = pi");
  }
  if (!adjacent(pulse.levelLow, pulse.levelHigh)) {
    throw InvalidInput("reordering pulse on uncoupled levels " +
                       std::to_string(pulse.levelLow) + "," +
                       std::to_string(pulse.levelHigh));
  }
  const RotationGate p = canonical(pulse);
  const Level a = p.levelLow;
  const Level b = p.levelHigh;
  EnergyCouplingGraph out = *this;
  // |a> -> -i e^{i phi} |b>,  |b> -> -i e^{-i phi} |a>
  const auto [kb, rb] = splitHalfTurns(p.phi - kPi / 2.0);
  const auto [ka, ra] = splitHalfTurns(-p.phi - kPi / 2.0);
  out.phase_[b] = wrapAngle(phase_[a] + rb);
  out.flip_[b] = static_cast<char>(flip_[a] ^ static_cast<char>(kb & 1));
  out.phase_[a] = wrapAngle(phase_[b] + ra);
  out.flip_[a] = static_cast<char>(flip_[b] ^ static_cast<char>(ka & 1));
  std::swap(out.occupant_[a], out.occupant_[b]);
  if (out.occupant_[a] >= 0) {
    out.placement_[static_cast<std::size_t>(out.occupant_[a])] = a;
  }
  if (out.occupant_[b] >= 0) {
    out.placement_[static_cast<std::size_t>(out.occupant_[b])] = b;
  }
  return out;
}

EnergyCouplingGraph EnergyCouplingGraph::afterLogicalPhase(LogicalState s,
                                                           double phi) const {
  EnergyCouplingGraph out = *this;
  const Level l = levelOf(s);
  // The physical amplitude is untouched, so the frame absorbs the phase.
  out.phase_[l] = wrapAngle(phase_[l] - phi);
  return out;
}

EnergyCouplingGraph
EnergyCouplingGraph::withAncillaToggled(LogicalState s) const {
  if (s >= ancilla_.size()) {
    throw InvalidInput("logical state " + std::to_string(s) + " is not mapped");
  }
  EnergyCouplingGraph out = *this;
  out.ancilla_[s] ^= 1;
  return out;
}

EnergyCouplingGraph
EnergyCouplingGraph::withNodePhases(std::vector<double> phases) const {
  if (phases.size() != numLevels()) {
    throw InvalidInput("one node phase per level required");
  }
  EnergyCouplingGraph out = *this;
  for (auto& p : phases) {
    if (!std::isfinite(p)) {
      throw InvalidInput("non-finite node phase");
    }
    p = wrapAngle(p);
  }
  out.phase_ = std::move(phases);
  out.flip_.assign(numLevels(), 0);
  return out;
}

EnergyCouplingGraph
EnergyCouplingGraph::withPlacement(std::vector<Level> placement) const {
  if (placement.size() != placement_.size()) {
    throw InvalidInput("placement must cover every logical state");
  }
  EnergyCouplingGraph out = *this;
  out.placement_ = std::move(placement);
  out.phase_.assign(numLevels(), 0.0);
  out.flip_.assign(numLevels(), 0);
  out.rebuildOccupancy();
  out.checkInvariants();
  return out;
}

bool EnergyCouplingGraph::sameFrame(const EnergyCouplingGraph& other,
                                    double tol) const {
  if (placement_ != other.placement_ || numLevels() != other.numLevels()) {
    return false;
  }
  for (const Level l : placement_) {
    if (std::abs(wrapAngle(nodePhase(l) - other.nodePhase(l))) > tol) {
      return false;
    }
  }
  return true;
}

std::size_t distance(const EnergyCouplingGraph& g, LogicalState i,
                     LogicalState j) {
  const auto d = g.levelDistance(g.levelOf(i), g.levelOf(j));
  if (!d) {
    throw DisconnectedGraph("logical states " + std::to_string(i) + " and " +
                            std::to_string(j) + " are not connected");
  }
  return *d;
}

RoutingPlan planRouting(const EnergyCouplingGraph& g, LogicalState i,
                        LogicalState j) {
  if (i == j) {
    throw InvalidInput("cannot route a state onto itself");
  }
  const auto path = g.shortestPath(g.levelOf(j), g.levelOf(i));
  RoutingPlan plan{{}, g};
  // Stop one hop short of i: j ends on path[size - 2].
  for (std::size_t k = 0; k + 2 < path.size(); ++k) {
    const auto pulse = reorderingPulse(path[k], path[k + 1]);
    plan.pulses.push_back(pulse);
    plan.resultingGraph = plan.resultingGraph.afterPulse(pulse);
  }
  return plan;
}

EnergyCouplingGraph markAncilla(const EnergyCouplingGraph& g, LogicalState s) {
  return g.withAncillaToggled(s);
}

std::set<LogicalState> listAncillas(const EnergyCouplingGraph& g) {
  return g.ancillas();
}

LoweredSequence applyGraphRules(const RoutedSequence& s,
                                const EnergyCouplingGraph& g) {
  LoweredSequence out{{}, g};
  auto& graph = out.finalGraph;
  for (const auto& op : s) {
    if (const auto* r = std::get_if<ReorderOp>(&op)) {
      graph = graph.afterPulse(r->pulse);
      out.gates.emplace_back(r->pulse);
    } else if (const auto* z = std::get_if<LogicalPhaseOp>(&op)) {
      graph = graph.afterLogicalPhase(z->state, z->phi);
    } else {
      const auto& rot = std::get<LogicalRotationOp>(op);
      const Level a = graph.levelOf(rot.from);
      const Level b = graph.levelOf(rot.to);
      if (!graph.adjacent(a, b)) {
        throw InvalidInput("logical rotation on states " +
                           std::to_string(rot.from) + "," +
                           std::to_string(rot.to) +
                           " whose levels are not coupled; route first");
      }
      double theta = rot.theta;
      if (graph.signFlipped(a) != graph.signFlipped(b)) {
        theta = -theta;
      }
      const double phi =
          wrapAngle(rot.phi + graph.phaseOffset(b) - graph.phaseOffset(a));
      if (a < b) {
        out.gates.emplace_back(RotationGate{a, b, theta, phi});
      } else {
        out.gates.emplace_back(RotationGate{b, a, theta, wrapAngle(-phi)});
      }
    }
  }
  return out;
}

} // namespace qudit
