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

#include "qudit/linalg.hpp"

#include <cstddef>
#include <numbers>
#include <variant>
#include <vector>

namespace qudit {

/**
 * Two-level rotation exp(-i theta/2 (cos(phi) sx + sin(phi) sy)) on the
 * subspace {levelLow, levelHigh}.
 *
 * Reordering pulses are ordinary rotations with theta = pi, phi = -pi/2.
 */
struct RotationGate {
  std::size_t levelLow = 0;
  std::size_t levelHigh = 1;
  double theta = 0.0;
  double phi = 0.0;

  friend bool operator==(const RotationGate&, const RotationGate&) = default;
};

/// Zero-cost phase e^{i phi} on a single level. Not a Pauli Z.
struct VirtualZGate {
  std::size_t level = 0;
  double phi = 0.0;

  friend bool operator==(const VirtualZGate&, const VirtualZGate&) = default;
};

using Gate = std::variant<RotationGate, VirtualZGate>;

/// Gates in application order: front() acts first, i.e. is the rightmost
/// factor of the product.
using GateSequence = std::vector<Gate>;

inline constexpr double kPi = std::numbers::pi;

/// Reordering pulse parameters.
inline constexpr double kPulseTheta = kPi;
inline constexpr double kPulsePhi = -kPi / 2.0;

RotationGate reorderingPulse(std::size_t a, std::size_t b);

/// Throws InvalidInput unless 0 <= low < high < dim and angles are finite.
void validate(const RotationGate& g, std::size_t dim);
void validate(const VirtualZGate& g, std::size_t dim);
void validate(const Gate& g, std::size_t dim);

/// The 2x2 block [[c, -i e^{-i phi} s], [-i e^{i phi} s, c]], c = cos(theta/2),
/// s = sin(theta/2).
void rotationBlock(double theta, double phi, Complex (&out)[2][2]);

ComplexMatrix rotationMatrix(const RotationGate& g, std::size_t dim);
ComplexMatrix virtualZMatrix(const VirtualZGate& g, std::size_t dim);
ComplexMatrix gateMatrix(const Gate& g, std::size_t dim);

/// Product of the gates with later gates on the left. Empty -> identity.
ComplexMatrix sequenceMatrix(const GateSequence& s, std::size_t dim);

/// R(theta, phi)^dagger == R(-theta, phi); Z(phi)^dagger == Z(-phi).
RotationGate inverse(const RotationGate& g);
VirtualZGate inverse(const VirtualZGate& g);

/// Same matrix with theta >= 0 (R(-theta, phi) == R(theta, phi + pi)) and phi
/// wrapped to (-pi, pi].
RotationGate canonical(const RotationGate& g);

/// Wrap an angle to (-pi, pi].
double wrapAngle(double a);

std::size_t rotationCount(const GateSequence& s);

} // namespace qudit
