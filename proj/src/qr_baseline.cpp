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

#include "qudit/qr_baseline.hpp"

#include "qudit/errors.hpp"

#include <cmath>
#include <vector>

namespace qudit {

QrResult qrDecompose(const ComplexMatrix& u, const EnergyCouplingGraph& g,
                     const CostParams& p) {
  p.validate();
  if (!isUnitary(u, kDefaultTol)) {
    throw InvalidInput("QR decomposition needs a unitary input");
  }
  ComplexMatrix current = extendToGraph(u, g);
  const std::size_t d = current.dim();
  std::vector<EliminationStep> steps;

  for (std::size_t c = 0; c + 1 < d; ++c) {
    for (std::size_t r = d - 1; r > c; --r) {
      const Complex upper = current(r - 1, c);
      const Complex lower = current(r, c);
      if (std::abs(lower) < kQrZeroTol) {
        continue;
      }
      const double theta = 2.0 * std::atan2(std::abs(lower), std::abs(upper));
      const double phi = -(kPi / 2.0 + std::arg(upper) - std::arg(lower));

      auto priced = gateCost(r - 1, r, theta, g, p);
      EliminationStep step;
      step.routing = priced.routing.pulses;
      for (auto it = step.routing.rbegin(); it != step.routing.rend(); ++it) {
        step.unrouting.push_back(canonical(inverse(*it)));
      }
      step.rotation = LogicalRotationOp{r - 1, r, theta, phi};
      step.cost = priced.cost;
      step.cost.routingCost *= 2.0;
      step.cost.total = step.cost.rotationCost + step.cost.routingCost;
      steps.push_back(std::move(step));

      Complex block[2][2];
      rotationBlock(theta, phi, block);
      current = current.leftApplied2x2(r - 1, r, block);
    }
  }
  return assembleDecomposition(steps, current, g);
}

double qrCostBound(const ComplexMatrix& u, const EnergyCouplingGraph& g,
                   const CostParams& p) {
  return qrDecompose(u, g, p).totalCost;
}

} // namespace qudit
