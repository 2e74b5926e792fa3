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

#include "oracles.hpp"
#include "qudit/coupling_graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace qudit::testing {

struct RoutedInstance {
  EnergyCouplingGraph graph;
  RoutedSequence sequence;
};

/// Connected graph on the given number of levels with a shuffled placement of
/// levels - (0 or 1) states and random node phases, plus a short sequence of
/// routed rotations, logical phases and stray pulses.
inline RoutedInstance randomRoutedInstance(std::mt19937_64& rng,
                                           std::size_t levels) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < levels; ++v) {
    edges.emplace_back(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng),
                       v);
  }
  if (rng() % 2 == 0) {
    const std::size_t a = rng() % levels;
    const std::size_t b = rng() % levels;
    if (a != b) {
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::vector<Level> perm(levels);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const std::size_t states = levels - rng() % 2;
  perm.resize(states);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  std::vector<double> phases(levels);
  for (auto& p : phases) {
    p = rng() % 3 == 0 ? 0.0 : ang(rng);
  }
  EnergyCouplingGraph g =
      EnergyCouplingGraph(levels, edges, perm).withNodePhases(phases);

  RoutedSequence s;
  EnergyCouplingGraph cur = g;
  const int length = 3 + static_cast<int>(rng() % 6);
  for (int k = 0; k < length; ++k) {
    const auto kind = rng() % 5;
    if (kind == 0) {
      s.emplace_back(LogicalPhaseOp{rng() % states, ang(rng)});
      continue;
    }
    if (kind == 1) {
      const auto& [a, b] = cur.edges()[rng() % cur.edges().size()];
      const RotationGate p = reorderingPulse(a, b);
      s.emplace_back(ReorderOp{p});
      cur = cur.afterPulse(p);
      continue;
    }
    const LogicalState i = rng() % states;
    LogicalState j = rng() % states;
    while (j == i) {
      j = rng() % states;
    }
    auto plan = planRouting(cur, i, j);
    for (const auto& p : plan.pulses) {
      s.emplace_back(ReorderOp{p});
    }
    cur = plan.resultingGraph;
    // Either orientation of the pair.
    if (rng() % 2 == 0) {
      s.emplace_back(LogicalRotationOp{i, j, ang(rng), ang(rng)});
    } else {
      s.emplace_back(LogicalRotationOp{j, i, ang(rng), ang(rng)});
    }
  }
  return {g, s};
}

/// Logical matrix a routed sequence is meant to implement.
inline oracle::Mat logicalIntent(const RoutedSequence& s, std::size_t n) {
  oracle::Mat m = oracle::eye(n);
  for (const auto& op : s) {
    if (const auto* r = std::get_if<LogicalRotationOp>(&op)) {
      m = oracle::mul(oracle::rotation(n, r->from, r->to, r->theta, r->phi),
                      m);
    } else if (const auto* z = std::get_if<LogicalPhaseOp>(&op)) {
      oracle::Mat d = oracle::eye(n);
      d[z->state][z->state] = std::polar(1.0, z->phi);
      m = oracle::mul(d, m);
    }
  }
  return m;
}

/**
 * max | E_out^dagger W E_in - L |, where W is the physical product, L the
 * logical intent and E embeds logical state k at level p(k) with the frame
 * phase of that level. Zero means the lowered circuit carries every logical
 * amplitude exactly where the frame says it is.
 */
inline double masterPropertyError(const RoutedSequence& s,
                                  const EnergyCouplingGraph& g,
                                  const LoweredSequence& out) {
  const std::size_t n = g.numLogical();
  const oracle::Mat w = oracle::sequence(out.gates, g.numLevels());
  const oracle::Mat l = logicalIntent(s, n);
  const auto& f = out.finalGraph;
  auto frame = [](const EnergyCouplingGraph& h, Level lv) {
    return std::polar(1.0, h.phaseOffset(lv) + (h.signFlipped(lv) ? M_PI : 0.0));
  };
  double err = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto lo = f.levelOf(m);
      const auto li = g.levelOf(k);
      const oracle::C v =
          std::conj(frame(f, lo)) * w[lo][li] * frame(g, li);
      err = std::max(err, std::abs(v - l[m][k]));
    }
  }
  return err;
}

} // namespace qudit::testing
