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

#include "qudit/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qudit {

struct CliffordSpec {
  std::size_t dim = 3;
  std::uint64_t seed = 0;
  std::size_t wordLength = 12;

  /// Throws InvalidInput for a non-prime dim or an empty word.
  void validate() const;
};

bool isPrime(std::size_t n);

/// {F, S}: the qudit Fourier matrix and the phase gate. Odd primes only.
std::vector<ComplexMatrix> generatorSet(std::size_t dim);

/// Product of wordLength random generators, resampled while diagonal.
ComplexMatrix randomClifford(const CliffordSpec& spec);

/// Seed of the index-th member of a seeded family (splitmix64 mixing).
std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t index);

/// count samples, sample k drawn with deriveSeed(seed, k).
std::vector<ComplexMatrix> cliffordSet(std::size_t dim, std::size_t count,
                                       std::uint64_t seed,
                                       std::size_t wordLength = 12);

/// Generalized Pauli shift X|j> = |j+1 mod d> and clock Z|j> = w^j |j>.
ComplexMatrix pauliX(std::size_t dim);
ComplexMatrix pauliZ(std::size_t dim);

} // namespace qudit
