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

#include "qudit/cost_model.hpp"

#include "qudit/errors.hpp"

#include <cmath>

namespace qudit {

namespace {

// Non-negative remainder.
double positiveMod(double x, double m) {
  const double r = std::fmod(x, m);
  return r < 0.0 ? r + m : r;
}

const ExperimentalCostModel kExperimental;
const LinearCostModel kLinear;

} // namespace

void CostParams::validate() const {
  if (!(baseFactor > 0.0) || !(calibratedAngle > 0.0) || !(angleFloor > 0.0) ||
      !std::isfinite(baseFactor) || !std::isfinite(calibratedAngle) ||
      !std::isfinite(angleFloor)) {
    throw InvalidInput("cost parameters must be finite and positive");
  }
  costModel(model);
}

double ExperimentalCostModel::rotationCost(double theta, std::size_t dist,
                                           const CostParams& p) const {
  const double t = std::abs(theta) / kPi;
  const double half = p.calibratedAngle / 2.0;
  const double calibration =
      std::abs(positiveMod(t + half, p.calibratedAngle) - half);
  return p.baseFactor * static_cast<double>(dist) * (4.0 * t + calibration);
}

double LinearCostModel::rotationCost(double theta, std::size_t dist,
                                     const CostParams& p) const {
  const double t = std::abs(theta) / kPi;
  return p.baseFactor * static_cast<double>(dist) * 4.0 * t;
}

const CostModel& costModel(const std::string& name) {
  if (name == kExperimental.name()) {
    return kExperimental;
  }
  if (name == kLinear.name()) {
    return kLinear;
  }
  throw InvalidInput("unknown cost model '" + name + "'");
}

std::vector<std::string> costModelNames() {
  return {kExperimental.name(), kLinear.name()};
}

double rotationCost(double theta, std::size_t dist, const CostParams& p) {
  if (dist < 1) {
    throw InvalidInput("rotation cost needs distance >= 1");
  }
  return costModel(p.model).rotationCost(theta, dist, p);
}

bool belowAngleFloor(double theta, const CostParams& p) {
  return std::abs(theta) / kPi < p.angleFloor;
}

GateCostResult gateCost(LogicalState i, LogicalState j, double theta,
                        const EnergyCouplingGraph& g, const CostParams& p) {
  GateCostResult out{{}, planRouting(g, i, j)};
  for (const auto& pulse : out.routing.pulses) {
    out.cost.routingCost += rotationCost(pulse.theta, 1, p);
  }
  out.cost.rotationCost = rotationCost(theta, 1, p);
  out.cost.total = out.cost.rotationCost + out.cost.routingCost;
  return out;
}

CostBreakdown gateCost(const RotationGate& gate, const EnergyCouplingGraph& g,
                       const CostParams& p) {
  validate(gate, g.numLevels());
  const auto d = g.levelDistance(gate.levelLow, gate.levelHigh);
  if (!d) {
    throw DisconnectedGraph("rotation on disconnected levels");
  }
  if (*d != 1) {
    throw InvalidInput("physical rotation on uncoupled levels");
  }
  CostBreakdown out;
  out.rotationCost = rotationCost(gate.theta, 1, p);
  out.total = out.rotationCost;
  return out;
}

CostBreakdown gateCost(const VirtualZGate& gate, const EnergyCouplingGraph& g,
                       const CostParams& /*p*/) {
  validate(gate, g.numLevels());
  return {};
}

double sequenceCost(const GateSequence& s, const CostParams& p) {
  double total = 0.0;
  for (const auto& g : s) {
    if (const auto* r = std::get_if<RotationGate>(&g)) {
      total += rotationCost(r->theta, 1, p);
    }
  }
  return total;
}

} // namespace qudit
