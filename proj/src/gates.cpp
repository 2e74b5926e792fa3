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

#include "qudit/gates.hpp"

#include "qudit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qudit {

RotationGate reorderingPulse(std::size_t a, std::size_t b) {
  return RotationGate{std::min(a, b), std::max(a, b), kPulseTheta, kPulsePhi};
}

void validate(const RotationGate& g, std::size_t dim) {
  if (!(g.levelLow < g.levelHigh) || g.levelHigh >= dim) {
    throw InvalidInput("rotation R_{" + std::to_string(g.levelLow) + "," +
                       std::to_string(g.levelHigh) +
                       "} invalid for dimension " + std::to_string(dim));
  }
  if (!std::isfinite(g.theta) || !std::isfinite(g.phi)) {
    throw InvalidInput("rotation with non-finite angle");
  }
}

void validate(const VirtualZGate& g, std::size_t dim) {
  if (g.level >= dim) {
    throw InvalidInput("virtual Z on level " + std::to_string(g.level) +
                       " invalid for dimension " + std::to_string(dim));
  }
  if (!std::isfinite(g.phi)) {
    throw InvalidInput("virtual Z with non-finite phase");
  }
}

void validate(const Gate& g, std::size_t dim) {
  std::visit([dim](const auto& x) { validate(x, dim); }, g);
}

void rotationBlock(double theta, double phi, Complex (&out)[2][2]) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex minusI{0.0, -1.0};
  out[0][0] = c;
  out[0][1] = minusI * std::polar(1.0, -phi) * s;
  out[1][0] = minusI * std::polar(1.0, phi) * s;
  out[1][1] = c;
}

ComplexMatrix rotationMatrix(const RotationGate& g, std::size_t dim) {
  validate(g, dim);
  Complex block[2][2];
  rotationBlock(g.theta, g.phi, block);
  return ComplexMatrix::identity(dim).leftApplied2x2(g.levelLow, g.levelHigh,
                                                     block);
}

ComplexMatrix virtualZMatrix(const VirtualZGate& g, std::size_t dim) {
  validate(g, dim);
  return ComplexMatrix::identity(dim).with(g.level, g.level,
                                           std::polar(1.0, g.phi));
}

ComplexMatrix gateMatrix(const Gate& g, std::size_t dim) {
  return std::visit(
      [dim](const auto& x) -> ComplexMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, RotationGate>) {
          return rotationMatrix(x, dim);
        } else {
          return virtualZMatrix(x, dim);
        }
      },
      g);
}

ComplexMatrix sequenceMatrix(const GateSequence& s, std::size_t dim) {
  ComplexMatrix acc = ComplexMatrix::identity(dim);
  for (const auto& g : s) {
    if (const auto* r = std::get_if<RotationGate>(&g)) {
      validate(*r, dim);
      Complex block[2][2];
      rotationBlock(r->theta, r->phi, block);
      acc = acc.leftApplied2x2(r->levelLow, r->levelHigh, block);
    } else {
      acc = multiply(gateMatrix(g, dim), acc);
    }
  }
  return acc;
}

RotationGate inverse(const RotationGate& g) {
  return RotationGate{g.levelLow, g.levelHigh, -g.theta, g.phi};
}

VirtualZGate inverse(const VirtualZGate& g) {
  return VirtualZGate{g.level, -g.phi};
}

double wrapAngle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) {
    w += 2.0 * kPi;
  }
  return w;
}

RotationGate canonical(const RotationGate& g) {
  RotationGate out = g;
  if (out.theta < 0.0) {
    out.theta = -out.theta;
    out.phi += kPi;
  }
  out.phi = wrapAngle(out.phi);
  return out;
}

std::size_t rotationCount(const GateSequence& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](const Gate& g) {
        return std::holds_alternative<RotationGate>(g);
      }));
}

} // namespace qudit
