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

#include "qudit/clifford.hpp"

#include "qudit/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace qudit {

namespace {

Complex rootOfUnity(std::size_t dim, std::size_t power) {
  const double angle = 2.0 * std::numbers::pi *
                       static_cast<double>(power % dim) /
                       static_cast<double>(dim);
  return std::polar(1.0, angle);
}

} // namespace

bool isPrime(std::size_t n) {
  if (n < 2) {
    return false;
  }
  for (std::size_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) {
      return false;
    }
  }
  return true;
}

void CliffordSpec::validate() const {
  if (!isPrime(dim) || dim == 2) {
    throw InvalidInput("Clifford dimension must be an odd prime, got " +
                       std::to_string(dim));
  }
  if (wordLength == 0) {
    throw InvalidInput("Clifford word length must be at least 1");
  }
}

std::vector<ComplexMatrix> generatorSet(std::size_t dim) {
  CliffordSpec{dim}.validate();
  const auto n = static_cast<Eigen::Index>(dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix::Storage f(n, n);
  ComplexMatrix::Storage s = ComplexMatrix::Storage::Zero(n, n);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      f(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          norm * rootOfUnity(dim, j * k);
    }
    const auto jj = static_cast<Eigen::Index>(j);
    s(jj, jj) = rootOfUnity(dim, j == 0 ? 0 : j * (j - 1) / 2);
  }
  return {ComplexMatrix(std::move(f)), ComplexMatrix(std::move(s))};
}

std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ComplexMatrix randomClifford(const CliffordSpec& spec) {
  spec.validate();
  const auto gens = generatorSet(spec.dim);
  std::mt19937_64 engine(spec.seed);
  for (;;) {
    ComplexMatrix::Storage u = ComplexMatrix::Storage::Identity(
        static_cast<Eigen::Index>(spec.dim),
        static_cast<Eigen::Index>(spec.dim));
    for (std::size_t k = 0; k < spec.wordLength; ++k) {
      // Raw engine bits keep the stream identical across standard libraries.
      const auto pick = static_cast<std::size_t>(engine() >> 63);
      u = gens[pick].data() * u;
    }
    ComplexMatrix m(std::move(u));
    if (!isDiagonal(m, kDefaultTol)) {
      return m;
    }
  }
}

std::vector<ComplexMatrix> cliffordSet(std::size_t dim, std::size_t count,
                                       std::uint64_t seed,
                                       std::size_t wordLength) {
  std::vector<ComplexMatrix> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(randomClifford({dim, deriveSeed(seed, k), wordLength}));
  }
  return out;
}

ComplexMatrix pauliX(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix::Storage x = ComplexMatrix::Storage::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    x((j + 1) % n, j) = 1.0;
  }
  return ComplexMatrix(std::move(x));
}

ComplexMatrix pauliZ(std::size_t dim) {
  std::vector<Complex> d(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    d[j] = rootOfUnity(dim, j);
  }
  return ComplexMatrix::diagonal(d);
}

} // namespace qudit
