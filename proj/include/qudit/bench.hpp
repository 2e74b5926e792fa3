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

#include "qudit/adaptive_search.hpp"
#include "qudit/coupling_graph.hpp"
#include "qudit/cost_model.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qudit {

struct Architecture {
  std::string id;
  EnergyCouplingGraph graph;
};

struct BenchRecord {
  std::size_t dim = 0;
  std::string architectureId;
  std::size_t unitaryIndex = 0;
  double qrCost = 0.0;
  double adaptiveCost = 0.0;
  std::size_t qrRotations = 0;
  std::size_t adaptiveRotations = 0;
  std::size_t qrRoutingPulses = 0;
  std::size_t routingPulses = 0;
  std::size_t nodesExpanded = 0;
  bool budgetExhausted = false;
  CompileStatus status = CompileStatus::NoSolution;
  bool qrVerified = false;
  bool adaptiveVerified = false;
  double wallTimeMs = 0.0;
  std::string message;

  /// Both compilers produced a decomposition that passed the verifier.
  [[nodiscard]] bool usable() const {
    return status == CompileStatus::Success && qrVerified && adaptiveVerified;
  }
};

struct BenchOptions {
  std::uint64_t seed = 1;
  std::size_t wordLength = 12;
  std::size_t workers = 1;
  double verifyTol = 1e-8;
};

/**
 * For each dim and every architecture whose computational state count equals
 * it, compile counts[k] seeded Cliffords with both QR and the adaptive search.
 * The unitary list of a dim depends only on (seed, dim, wordLength), so every
 * architecture and both compilers see the same inputs. Records are ordered by
 * (dim, architecture, index).
 */
std::vector<BenchRecord> runSuite(const std::vector<std::size_t>& dims,
                                  const std::vector<std::size_t>& counts,
                                  const std::vector<Architecture>& archs,
                                  const SearchConfig& cfg, const CostParams& p,
                                  const BenchOptions& opts);

struct Stats {
  double min = 0.0;
  double avg = 0.0;
  double max = 0.0;
};

struct SummaryRow {
  std::size_t dim = 0;
  std::string architectureId;
  std::size_t count = 0;
  std::size_t excluded = 0;
  Stats qr;
  Stats adaptive;
};

/// Groups in record order; only usable records are aggregated. Groups with
/// nothing usable are dropped with a warning.
std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records);

/// One JSON object per line. Wall time is written only when asked for, so
/// that the default output is reproducible byte for byte.
void writeRecords(std::ostream& out, const std::vector<BenchRecord>& records,
                  bool withTiming = false);
/// Raw costs.
void writeSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows);
/// Costs multiplied by 10^4.
void writeSummaryTable(std::ostream& out, const std::vector<SummaryRow>& rows);

} // namespace qudit
