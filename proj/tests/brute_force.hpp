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

// Exhaustive enumeration of the elimination tree, sharing no code with the
// search. Costs use the hand formula, routing uses its own breadth-first
// search and path choice.

#pragma once

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace oracle {

struct Topology {
  std::size_t levels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  [[nodiscard]] bool coupled(std::size_t a, std::size_t b) const {
    return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
      return (e.first == a && e.second == b) ||
             (e.first == b && e.second == a);
    });
  }

  /// Smallest level sequence, compared lexicographically, among all shortest
  /// paths from -> to.
  [[nodiscard]] std::vector<std::size_t> path(std::size_t from,
                                              std::size_t to) const {
    const std::size_t len = *bfs(levels, edges, from, to);
    std::vector<std::size_t> best;
    std::vector<std::size_t> cur{from};
    extend(cur, to, len, best);
    return best;
  }

private:
  void extend(std::vector<std::size_t>& cur, std::size_t to, std::size_t len,
              std::vector<std::size_t>& best) const {
    if (cur.size() == len + 1) {
      if (cur.back() == to && (best.empty() || cur < best)) {
        best = cur;
      }
      return;
    }
    for (std::size_t v = 0; v < levels; ++v) {
      if (coupled(cur.back(), v) &&
          std::find(cur.begin(), cur.end(), v) == cur.end()) {
        cur.push_back(v);
        extend(cur, to, len, best);
        cur.pop_back();
      }
    }
  }
};

inline bool offDiagonalBelow(const Mat& u, double tol) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (i != j && std::abs(u[i][j]) > tol) {
        return false;
      }
    }
  }
  return true;
}

struct BruteForce {
  Topology topo;
  std::size_t maxDepth = 4;
  double threshold = 1e-8;
  double zeroTol = 1e-12;
  double diagTol = 1e-9;
  bool zeroPivot = true;
  std::size_t leaves = 0;

  /// Cheapest complete path of at most maxDepth rotations, nullopt if none.
  std::optional<double> minimum(const Mat& u,
                                const std::vector<std::size_t>& placement) {
    std::optional<double> best;
    walk(u, placement, 0.0, 0, best);
    return best;
  }

private:
  void walk(const Mat& u, const std::vector<std::size_t>& place, double cost,
            std::size_t depth, std::optional<double>& best) {
    if (offDiagonalBelow(u, diagTol)) {
      ++leaves;
      if (!best || cost < *best) {
        best = cost;
      }
      return;
    }
    if (depth == maxDepth) {
      return;
    }
    const std::size_t d = u.size();
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t r = c; r < d; ++r) {
        if (!zeroPivot && std::abs(u[r][c]) <= zeroTol) {
          continue;
        }
        for (std::size_t r2 = r + 1; r2 < d; ++r2) {
          if (std::abs(u[r2][c]) <= threshold) {
            continue;
          }
          const double theta =
              2.0 * std::atan(std::abs(u[r2][c]) / std::abs(u[r][c]));
          const double phi =
              -(M_PI / 2.0 + std::arg(u[r][c]) - std::arg(u[r2][c]));
          // Walk r2 toward r; every hop is one pi pulse.
          auto p = topo.path(place[r2], place[r]);
          std::vector<std::size_t> next = place;
          double step = 0.0;
          for (std::size_t h = 0; h + 2 < p.size(); ++h) {
            for (auto& lv : next) {
              if (lv == p[h]) {
                lv = p[h + 1];
              } else if (lv == p[h + 1]) {
                lv = p[h];
              }
            }
            step += costFormula(M_PI, 1);
          }
          step += costFormula(theta, 1);
          walk(mul(rotation(d, r, r2, theta, phi), u), next, cost + step,
               depth + 1, best);
        }
      }
    }
  }
};

} // namespace oracle
