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

#include "qudit/adaptive_search.hpp"

#include "qudit/errors.hpp"
#include "qudit/qr_baseline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>
#include <utility>

namespace qudit {

void SearchConfig::validate() const {
  if (!(threshold > 0.0) || !(zeroTol > 0.0) || !(diagTol > 0.0)) {
    throw InvalidInput("search tolerances must be positive");
  }
  if (absoluteCostLimit) {
    if (!(*absoluteCostLimit > 0.0) || !std::isfinite(*absoluteCostLimit)) {
      throw InvalidInput("absolute cost limit must be finite and positive");
    }
  } else if (!(costLimitFactor >= 1.0) || !std::isfinite(costLimitFactor)) {
    throw InvalidInput("cost limit factor must be >= 1");
  }
  if (maxNodes == 0) {
    throw InvalidInput("node budget must be positive");
  }
}

std::string toString(CompileStatus s) {
  switch (s) {
  case CompileStatus::Success:
    return "success";
  case CompileStatus::NoSolution:
    return "no-solution";
  case CompileStatus::InvalidInput:
    return "invalid-input";
  }
  return "unknown";
}

std::vector<SearchNode> expandChildren(const SearchNode& node,
                                       const SearchConfig& cfg,
                                       const CostParams& p) {
  const auto& u = node.remaining;
  const std::size_t d = u.dim();
  std::vector<SearchNode> children;
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = c; r < d; ++r) {
      const Complex pivot = u(r, c);
      if (!cfg.zeroPivotChildren && std::abs(pivot) <= cfg.zeroTol) {
        continue;
      }
      for (std::size_t r2 = r + 1; r2 < d; ++r2) {
        const Complex target = u(r2, c);
        if (std::abs(target) <= cfg.threshold) {
          continue;
        }
        const double theta =
            2.0 * std::atan2(std::abs(target), std::abs(pivot));
        const double phi = -(kPi / 2.0 + std::arg(pivot) - std::arg(target));
        auto priced = gateCost(r, r2, theta, node.graph, p);

        Complex block[2][2];
        rotationBlock(theta, phi, block);
        SearchNode child{
            EliminationStep{std::move(priced.routing.pulses),
                            LogicalRotationOp{r, r2, theta, phi},
                            {},
                            priced.cost},
            u.leftApplied2x2(r, r2, block),
            std::move(priced.routing.resultingGraph),
            node.cumulativeCost + priced.cost.total,
            node.depth + 1};
        children.push_back(std::move(child));
      }
    }
  }
  return children;
}

namespace {

class Search {
public:
  Search(const SearchConfig& cfg, const CostParams& p, double limit,
         std::size_t maxDepth)
      : cfg_(cfg), params_(p), limit_(limit), maxDepth_(maxDepth) {}

  void run(const SearchNode& root) { visit(root); }

  [[nodiscard]] bool found() const { return best_.has_value(); }
  [[nodiscard]] const std::vector<EliminationStep>& bestSteps() const {
    return bestSteps_;
  }
  [[nodiscard]] const SearchNode& bestLeaf() const { return *best_; }
  [[nodiscard]] SearchStats& stats() { return stats_; }

private:
  void visit(const SearchNode& node) {
    stats_.maxDepthReached = std::max(stats_.maxDepthReached, node.depth);
    if (isDiagonal(node.remaining, cfg_.diagTol)) {
      if (!best_ || node.cumulativeCost < best_->cumulativeCost) {
        best_ = node;
        bestSteps_.clear();
        for (const auto* n : path_) {
          bestSteps_.push_back(n->step);
        }
        limit_ = node.cumulativeCost;
        ++stats_.solutionsFound;
        if (cfg_.returnFirst) {
          stop_ = true;
        }
      }
      return;
    }
    if (node.depth >= maxDepth_) {
      return;
    }
    if (stats_.nodesExpanded >= cfg_.maxNodes) {
      stats_.budgetExhausted = true;
      stop_ = true;
      return;
    }
    ++stats_.nodesExpanded;

    auto children = expandChildren(node, cfg_, params_);
    stats_.childrenGenerated += children.size();
    std::erase_if(children, [this](const SearchNode& child) {
      return !(child.cumulativeCost < limit_);
    });
    if (cfg_.sortChildren) {
      std::stable_sort(children.begin(), children.end(),
                       [](const SearchNode& a, const SearchNode& b) {
                         return a.cumulativeCost < b.cumulativeCost;
                       });
    }
    if (cfg_.guidedDive && !best_) {
      promoteGuidedChild(node.remaining, children);
    }
    for (const auto& child : children) {
      if (stop_) {
        return;
      }
      // The limit may have tightened since the child was generated.
      if (!(child.cumulativeCost < limit_)) {
        continue;
      }
      path_.push_back(&child);
      visit(child);
      path_.pop_back();
    }
  }

  // The QR-order pair: lowest non-zero entry of the first unfinished column.
  void promoteGuidedChild(const ComplexMatrix& u,
                          std::vector<SearchNode>& children) const {
    const std::size_t d = u.dim();
    for (std::size_t c = 0; c + 1 < d; ++c) {
      for (std::size_t r = d - 1; r > c; --r) {
        if (std::abs(u(r, c)) <= cfg_.threshold) {
          continue;
        }
        const auto it = std::find_if(
            children.begin(), children.end(), [&](const SearchNode& n) {
              return n.step.rotation.from == r - 1 && n.step.rotation.to == r;
            });
        if (it != children.end()) {
          std::rotate(children.begin(), it, std::next(it));
        }
        return;
      }
    }
  }

  const SearchConfig& cfg_;
  const CostParams& params_;
  double limit_;
  std::size_t maxDepth_;
  bool stop_ = false;
  std::vector<const SearchNode*> path_;
  std::optional<SearchNode> best_;
  std::vector<EliminationStep> bestSteps_;
  SearchStats stats_;
};

} // namespace

CompilationResult adaptiveCompile(const ComplexMatrix& u,
                                  const EnergyCouplingGraph& g,
                                  const SearchConfig& cfg,
                                  const CostParams& p) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  p.validate();
  if (!isUnitary(u, kDefaultTol)) {
    throw InvalidInput("adaptive compilation needs a unitary input");
  }
  const ComplexMatrix extended = extendToGraph(u, g);
  const std::size_t d = extended.dim();

  CompilationResult result;
  double limit = 0.0;
  double qrCost = 0.0;
  if (cfg.absoluteCostLimit) {
    limit = *cfg.absoluteCostLimit;
  } else {
    qrCost = qrCostBound(u, g, p);
    limit = cfg.costLimitFactor * qrCost;
  }
  const std::size_t maxDepth = cfg.maxDepth.value_or(d * (d - 1) / 2 + d);

  SearchNode root{EliminationStep{}, extended, g, 0.0, 0};
  Search search(cfg, p, limit, maxDepth);
  // A diagonal input is complete at zero cost even when the limit is zero.
  if (isDiagonal(extended, cfg.diagTol)) {
    result.status = CompileStatus::Success;
    result.decomposition = assembleDecomposition({}, extended, g);
  } else {
    search.run(root);
    if (search.found()) {
      result.status = CompileStatus::Success;
      result.decomposition = assembleDecomposition(
          search.bestSteps(), search.bestLeaf().remaining, g);
      search.stats().depth = search.bestSteps().size();
    } else {
      result.status = CompileStatus::NoSolution;
      result.message = search.stats().budgetExhausted
                           ? "node budget exhausted without a decomposition"
                           : "no decomposition within the cost limit";
    }
  }
  result.stats = search.stats();
  result.stats.costLimit = limit;
  result.stats.qrCost = qrCost;
  result.stats.wallTimeMs =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::vector<CompilationResult>
compileBatch(const std::vector<ComplexMatrix>& us, const EnergyCouplingGraph& g,
             const SearchConfig& cfg, const CostParams& p,
             std::size_t workers) {
  std::vector<CompilationResult> results(us.size());
  auto compileOne = [&](std::size_t i) {
    try {
      results[i] = adaptiveCompile(us[i], g, cfg, p);
    } catch (const std::exception& e) {
      results[i].status = CompileStatus::InvalidInput;
      results[i].message = e.what();
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, us.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < us.size(); ++i) {
      compileOne(i);
    }
    return results;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < us.size(); i = next++) {
          compileOne(i);
        }
      });
    }
  }
  return results;
}

} // namespace qudit
