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

#include "qudit/decomposition.hpp"

#include "qudit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qudit {

namespace {

ComplexMatrix embed(const ComplexMatrix& u,
                    const std::vector<LogicalState>& computational,
                    std::size_t total) {
  ComplexMatrix::Storage s = ComplexMatrix::Storage::Identity(
      static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
  for (std::size_t r = 0; r < computational.size(); ++r) {
    for (std::size_t c = 0; c < computational.size(); ++c) {
      s(static_cast<Eigen::Index>(computational[r]),
        static_cast<Eigen::Index>(computational[c])) = u(r, c);
    }
  }
  return ComplexMatrix(std::move(s));
}

} // namespace

ComplexMatrix extendToGraph(const ComplexMatrix& u,
                            const EnergyCouplingGraph& g) {
  if (u.dim() == g.numLogical()) {
    return u;
  }
  if (u.dim() == g.numComputational()) {
    return embed(u, g.computationalStates(), g.numLogical());
  }
  throw InvalidInput("unitary dimension " + std::to_string(u.dim()) +
                     " matches neither the " +
                     std::to_string(g.numComputational()) +
                     " computational states nor all " +
                     std::to_string(g.numLogical()) + " mapped states");
}

Decomposition assembleDecomposition(const std::vector<EliminationStep>& steps,
                                    const ComplexMatrix& remaining,
                                    const EnergyCouplingGraph& g) {
  if (remaining.dim() != g.numLogical()) {
    throw InvalidInput("remaining matrix does not match the logical space");
  }
  RoutedSequence routed;
  Decomposition out;
  for (const auto& step : steps) {
    for (const auto& p : step.routing) {
      routed.emplace_back(ReorderOp{p});
    }
    routed.emplace_back(step.rotation);
    for (const auto& p : step.unrouting) {
      routed.emplace_back(ReorderOp{p});
    }
    out.totalCost += step.cost.total;
    out.routingPulses += step.routing.size() + step.unrouting.size();
  }
  out.logicalRotations = steps.size();
  out.steps = steps;

  // The search path W satisfies W E_in = E_out * (R_n ... R_1) and
  // R_n ... R_1 U = D, so U = E_in^dagger W^dagger E_out D.
  const auto lowered = applyGraphRules(routed, g);
  const auto& last = lowered.finalGraph;
  const std::size_t levels = g.numLevels();

  GateSequence executed;
  executed.reserve(lowered.gates.size() + g.numLogical());
  for (auto it = lowered.gates.rbegin(); it != lowered.gates.rend(); ++it) {
    executed.emplace_back(canonical(inverse(std::get<RotationGate>(*it))));
  }
  // Clear any phases the caller's graph carried so the output frame is plain.
  for (LogicalState s = 0; s < g.numLogical(); ++s) {
    const Level l = g.levelOf(s);
    if (const double chi = g.nodePhase(l); chi != 0.0) {
      executed.emplace_back(VirtualZGate{l, -chi});
    }
  }
  DiagonalPhases leading = DiagonalPhases::zero(levels);
  for (LogicalState s = 0; s < g.numLogical(); ++s) {
    const Level l = last.levelOf(s);
    leading.phases[l] = wrapAngle(std::arg(remaining(s, s)) + last.nodePhase(l));
  }
  auto swept = sweepPhases(executed, leading);

  out.sequence = std::move(swept.rotations);
  out.residual = DiagonalPhases::zero(g.numLogical());
  for (LogicalState s = 0; s < g.numLogical(); ++s) {
    out.residual.phases[s] = wrapAngle(swept.theta.phases[last.levelOf(s)]);
  }
  out.inputPlacement = last.placement();
  out.outputPlacement = g.placement();
  out.numLevels = levels;
  out.computationalStates = g.computationalStates();
  return out;
}

ComplexMatrix logicalView(const ComplexMatrix& physical,
                          const std::vector<Level>& inputPlacement,
                          const std::vector<Level>& outputPlacement) {
  if (inputPlacement.size() != outputPlacement.size()) {
    throw InvalidInput("placements differ in size");
  }
  const auto n = inputPlacement.size();
  ComplexMatrix::Storage s(static_cast<Eigen::Index>(n),
                           static_cast<Eigen::Index>(n));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      if (outputPlacement[m] >= physical.dim() ||
          inputPlacement[k] >= physical.dim()) {
        throw InvalidInput("placement references a missing level");
      }
      s(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) =
          physical(outputPlacement[m], inputPlacement[k]);
    }
  }
  return ComplexMatrix(std::move(s));
}

ComplexMatrix reconstruct(const Decomposition& d) {
  const auto physical = sequenceMatrix(d.sequence, d.numLevels);
  const auto view = logicalView(physical, d.inputPlacement, d.outputPlacement);
  return multiply(view, d.residual.matrix());
}

bool verifyReconstruction(const Decomposition& d, const ComplexMatrix& u,
                          double tol) {
  const std::size_t total = d.residual.dim();
  ComplexMatrix target = u;
  if (u.dim() != total) {
    if (u.dim() != d.computationalStates.size()) {
      return false;
    }
    target = embed(u, d.computationalStates, total);
  }
  try {
    return equalUpToGlobalPhase(reconstruct(d), target, tol);
  } catch (const InvalidInput&) {
    return false;
  }
}

} // namespace qudit
