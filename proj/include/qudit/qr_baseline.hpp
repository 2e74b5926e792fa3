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
#include "qudit/decomposition.hpp"
#include "qudit/linalg.hpp"

namespace qudit {

using QrResult = Decomposition;

/// Entries below this modulus count as already eliminated.
inline constexpr double kQrZeroTol = 1e-12;

/**
 * Fixed-sequence Givens (QR) decomposition.
 *
 * Columns are processed left to right; within a column the sub-diagonal
 * entries are annihilated bottom-up with rotations on the logically adjacent
 * pair (r-1, r). When the levels of a pair are not coupled, reordering pulses
 * bring r next to r-1 before the rotation and are undone right after it, so
 * the placement is the same after every step.
 *
 * Throws InvalidInput for non-unitary input or a dimension the graph cannot
 * host, DisconnectedGraph when routing is impossible.
 */
QrResult qrDecompose(const ComplexMatrix& u, const EnergyCouplingGraph& g,
                     const CostParams& p);

/// qrDecompose(u, g, p).totalCost.
double qrCostBound(const ComplexMatrix& u, const EnergyCouplingGraph& g,
                   const CostParams& p);

} // namespace qudit
