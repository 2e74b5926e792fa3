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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qudit {

struct SearchConfig {
  /// Cost limit as a multiple of the QR baseline cost.
  double costLimitFactor = 1.1;
  /// Overrides costLimitFactor when set.
  std::optional<double> absoluteCostLimit;
  /// |U[r2][c]| must exceed this for (r, r2) to be tried in column c.
  double threshold = 1e-8;
  /// |U[r][c]| must exceed this (floating-point stand-in for "!= 0").
  double zeroTol = 1e-12;
  /// Also try pairs whose pivot |U[r][c]| is below zeroTol (theta = pi).
  /// Without them a column whose only non-zero entry is below its diagonal
  /// has no child.
  bool zeroPivotChildren = true;
  double diagTol = 1e-9;
  std::size_t maxNodes = 1'000'000;
  bool returnFirst = false;
  /// Recurse into cheaper children first instead of (c, r, r2) order.
  bool sortChildren = false;
  /// Until a first decomposition is found, try the child that eliminates the
  /// lowest entry of the first unfinished column with the pair (r-1, r)
  /// before the others. Ordering only; the explored set is unchanged.
  bool guidedDive = true;
  /// Logical rotations per path; default d(d-1)/2 + d.
  std::optional<std::size_t> maxDepth;

  void validate() const;
};

struct SearchStats {
  std::size_t nodesExpanded = 0;
  std::size_t childrenGenerated = 0;
  std::size_t solutionsFound = 0;
  std::size_t maxDepthReached = 0;
  std::size_t depth = 0;
  double costLimit = 0.0;
  double qrCost = 0.0;
  bool budgetExhausted = false;
  double wallTimeMs = 0.0;
};

enum class CompileStatus { Success, NoSolution, InvalidInput };

std::string toString(CompileStatus s);

struct CompilationResult {
  CompileStatus status = CompileStatus::NoSolution;
  /// Valid only when status == Success.
  Decomposition decomposition;
  SearchStats stats;
  std::string message;

  [[nodiscard]] bool ok() const { return status == CompileStatus::Success; }
};

/**
 * Node of the decomposition tree: the step that led here, the matrix left to
 * diagonalise and the graph snapshot after the step's routing.
 */
struct SearchNode {
  EliminationStep step;
  ComplexMatrix remaining;
  EnergyCouplingGraph graph;
  double cumulativeCost = 0.0;
  std::size_t depth = 0;
};

/// Children of a node in (c, r, r2) order, without any cost-limit filtering.
std::vector<SearchNode> expandChildren(const SearchNode& node,
                                       const SearchConfig& cfg,
                                       const CostParams& p);

/**
 * Adaptive cost-limited depth-first decomposition.
 *
 * Every child applies one Givens rotation R_{r,r2}(theta, phi) to the
 * remaining matrix, chosen to zero entry (r2, c), after routing r2 next to r
 * on the node's graph snapshot. Children whose cumulative cost would reach
 * the limit are dropped; once a diagonal matrix is reached its cost becomes
 * the new limit. The cheapest decomposition found is returned (the first
 * one with returnFirst).
 *
 * Throws InvalidInput for non-unitary input; disconnected graphs are rejected
 * when the graph is built.
 */
CompilationResult adaptiveCompile(const ComplexMatrix& u,
                                  const EnergyCouplingGraph& g,
                                  const SearchConfig& cfg, const CostParams& p);

/// Independent compilations, results in input order. Failures are reported
/// per item. workers > 1 compiles items concurrently.
std::vector<CompilationResult>
compileBatch(const std::vector<ComplexMatrix>& us, const EnergyCouplingGraph& g,
             const SearchConfig& cfg, const CostParams& p,
             std::size_t workers = 1);

} // namespace qudit
