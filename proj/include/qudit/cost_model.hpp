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
#include "qudit/gates.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace qudit {

/// Angles are in units of pi.
struct CostParams {
  double baseFactor = 1e-4;
  double calibratedAngle = 0.5;
  /// Lower end of the calibrated domain. The formula is continued below it.
  double angleFloor = 0.25;
  /// Name of the registered cost model.
  std::string model = "experimental";

  void validate() const;
};

struct CostBreakdown {
  double rotationCost = 0.0;
  double routingCost = 0.0;
  double total = 0.0;
};

/// Swappable hardware cost of one two-level rotation.
class CostModel {
public:
  virtual ~CostModel() = default;
  [[nodiscard]] virtual std::string name() const = 0;
  /// dist >= 1 is the hop count between the two levels.
  [[nodiscard]] virtual double rotationCost(double theta, std::size_t dist,
                                            const CostParams& p) const = 0;
};

/// base * dist * (4t + |mod(t + a/2, a) - a/2|), t = |theta| / pi,
/// a = calibratedAngle. With a = 1/2 this is the trapped-ion cost function.
class ExperimentalCostModel final : public CostModel {
public:
  [[nodiscard]] std::string name() const override { return "experimental"; }
  [[nodiscard]] double rotationCost(double theta, std::size_t dist,
                                    const CostParams& p) const override;
};

/// base * dist * 4t: angle-proportional only, no calibration penalty.
class LinearCostModel final : public CostModel {
public:
  [[nodiscard]] std::string name() const override { return "linear"; }
  [[nodiscard]] double rotationCost(double theta, std::size_t dist,
                                    const CostParams& p) const override;
};

/// Look up a model by name; throws InvalidInput for unknown names.
const CostModel& costModel(const std::string& name);
std::vector<std::string> costModelNames();

/// Cost of a rotation with the model named in p.
double rotationCost(double theta, std::size_t dist, const CostParams& p);

/// True when |theta| / pi lies below the calibrated domain of the model.
bool belowAngleFloor(double theta, const CostParams& p);

struct GateCostResult {
  CostBreakdown cost;
  RoutingPlan routing;
};

/// Cost of a logical rotation between states i and j on g, including the
/// reordering pulses that make them adjacent. The rotation itself is charged
/// at distance 1 on the routed graph.
GateCostResult gateCost(LogicalState i, LogicalState j, double theta,
                        const EnergyCouplingGraph& g, const CostParams& p);

/// Physical rotation already on coupled levels: routing is zero.
CostBreakdown gateCost(const RotationGate& gate, const EnergyCouplingGraph& g,
                       const CostParams& p);

/// Virtual gates are free.
CostBreakdown gateCost(const VirtualZGate& gate, const EnergyCouplingGraph& g,
                       const CostParams& p);

/// Sum of rotation costs of a physical sequence (every rotation at distance 1,
/// virtual gates free).
double sequenceCost(const GateSequence& s, const CostParams& p);

} // namespace qudit
