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
#include "qudit/linalg.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qudit {

/// diag(e^{i phases[0]}, ..., e^{i phases[d-1]}).
struct DiagonalPhases {
  std::vector<double> phases;

  static DiagonalPhases zero(std::size_t dim);
  /// Phases of the (unit-modulus) diagonal of m.
  static DiagonalPhases fromDiagonal(const ComplexMatrix& m);

  [[nodiscard]] std::size_t dim() const { return phases.size(); }
  [[nodiscard]] ComplexMatrix matrix() const;
  [[nodiscard]] std::vector<Complex> entries() const;
  /// Same diagonal up to a global phase, with phases[pivot] == 0.
  [[nodiscard]] DiagonalPhases canonical(std::size_t pivot = 0) const;
  /// Entrywise product (phases add).
  [[nodiscard]] DiagonalPhases times(const DiagonalPhases& other) const;
};

/// M * R_{i,j}(theta, alpha) == R_{i,j}(theta, alpha - phi_i + phi_j) * M.
std::pair<RotationGate, DiagonalPhases> commuteThrough(const DiagonalPhases& m,
                                                       const RotationGate& r);

struct SweptSequence {
  GateSequence rotations;
  DiagonalPhases theta;
};

/**
 * Move every virtual Z gate of s, together with the diagonal `leading`
 * (applied before s), to the front of the sequence:
 *
 *   sequenceMatrix(s) * leading == sequenceMatrix(rotations) * theta
 *
 * exactly. Only rotation phases change.
 */
SweptSequence sweepPhases(const GateSequence& s, const DiagonalPhases& leading);

} // namespace qudit
