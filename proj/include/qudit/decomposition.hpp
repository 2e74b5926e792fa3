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

#include "qudit/coupling_graph.hpp"
#include "qudit/cost_model.hpp"
#include "qudit/gates.hpp"
#include "qudit/linalg.hpp"
#include "qudit/phase_propagation.hpp"

#include <cstddef>
#include <vector>

namespace qudit {

/// One elimination step: reordering pulses, then the logical rotation that
/// was applied to the remaining matrix, then (QR only) the pulses that undo
/// the routing.
struct EliminationStep {
  std::vector<RotationGate> routing;
  LogicalRotationOp rotation;
  std::vector<RotationGate> unrouting;
  CostBreakdown cost;
};

/**
 * A compiled unitary, U = V_k ... V_1 * Theta.
 *
 * `sequence` is physical and in application order. It expects the logical
 * states on `inputPlacement` and leaves them on `outputPlacement` (the
 * placement of the graph that was compiled against). `residual` is the
 * virtual diagonal Theta over logical states; it is applied first and never
 * executed.
 */
struct Decomposition {
  GateSequence sequence;
  DiagonalPhases residual;
  double totalCost = 0.0;
  std::vector<Level> inputPlacement;
  std::vector<Level> outputPlacement;
  std::size_t numLevels = 0;
  /// Logical indices of the non-ancilla states, used to embed smaller inputs.
  std::vector<LogicalState> computationalStates;
  std::size_t logicalRotations = 0;
  std::size_t routingPulses = 0;
  /// Elimination steps in search order, for diagnostics.
  std::vector<EliminationStep> steps;

  [[nodiscard]] std::vector<Complex> residualDiagonal() const {
    return residual.entries();
  }
};

/**
 * Embed u into the logical space of g: u acts either on all mapped states,
 * or on the computational ones with identity on the ancillas. Throws
 * InvalidInput for any other dimension.
 */
ComplexMatrix extendToGraph(const ComplexMatrix& u,
                            const EnergyCouplingGraph& g);

/// Build the physical decomposition from elimination steps taken on g that
/// left `remaining` diagonal.
Decomposition assembleDecomposition(const std::vector<EliminationStep>& steps,
                                    const ComplexMatrix& remaining,
                                    const EnergyCouplingGraph& g);

/// W[out(m), in(k)] for the physical matrix W.
ComplexMatrix logicalView(const ComplexMatrix& physical,
                          const std::vector<Level>& inputPlacement,
                          const std::vector<Level>& outputPlacement);

/// logicalView(sequenceMatrix(seq)) * diag(Theta): the unitary the
/// decomposition implements on logical states.
ComplexMatrix reconstruct(const Decomposition& d);

/// reconstruct(d) equals u (extended to d's logical space) up to global
/// phase, max-norm tol. False on any shape mismatch.
bool verifyReconstruction(const Decomposition& d, const ComplexMatrix& u,
                          double tol);

} // namespace qudit
