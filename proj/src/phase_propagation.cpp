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

#include "qudit/phase_propagation.hpp"

#include "qudit/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qudit {

DiagonalPhases DiagonalPhases::zero(std::size_t dim) {
  return DiagonalPhases{std::vector<double>(dim, 0.0)};
}

DiagonalPhases DiagonalPhases::fromDiagonal(const ComplexMatrix& m) {
  DiagonalPhases out;
  out.phases.reserve(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out.phases.push_back(std::arg(m(i, i)));
  }
  return out;
}

ComplexMatrix DiagonalPhases::matrix() const {
  const auto e = entries();
  return ComplexMatrix::diagonal(e);
}

std::vector<Complex> DiagonalPhases::entries() const {
  std::vector<Complex> out;
  out.reserve(phases.size());
  for (const double p : phases) {
    out.push_back(std::polar(1.0, p));
  }
  return out;
}

DiagonalPhases DiagonalPhases::canonical(std::size_t pivot) const {
  if (pivot >= phases.size()) {
    throw InvalidInput("pivot level out of range");
  }
  DiagonalPhases out = *this;
  const double ref = phases[pivot];
  for (auto& p : out.phases) {
    p = wrapAngle(p - ref);
  }
  return out;
}

DiagonalPhases DiagonalPhases::times(const DiagonalPhases& other) const {
  if (other.dim() != dim()) {
    throw InvalidInput("diagonal dimension mismatch");
  }
  DiagonalPhases out = *this;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    out.phases[i] = wrapAngle(phases[i] + other.phases[i]);
  }
  return out;
}

std::pair<RotationGate, DiagonalPhases> commuteThrough(const DiagonalPhases& m,
                                                       const RotationGate& r) {
  validate(r, m.dim());
  RotationGate moved = r;
  moved.phi = r.phi - m.phases[r.levelLow] + m.phases[r.levelHigh];
  return {moved, m};
}

SweptSequence sweepPhases(const GateSequence& s, const DiagonalPhases& leading) {
  // Walk from the last-applied gate to the first, carrying the diagonal M
  // that has been collected to the left of the unprocessed prefix.
  DiagonalPhases carried = DiagonalPhases::zero(leading.dim());
  GateSequence reversed;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (const auto* z = std::get_if<VirtualZGate>(&*it)) {
      validate(*z, leading.dim());
      carried.phases[z->level] = wrapAngle(carried.phases[z->level] + z->phi);
    } else {
      auto [moved, unchanged] =
          commuteThrough(carried, std::get<RotationGate>(*it));
      reversed.emplace_back(moved);
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return SweptSequence{std::move(reversed), carried.times(leading)};
}

} // namespace qudit
