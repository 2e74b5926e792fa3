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

#include "qudit/linalg.hpp"

#include "oracles.hpp"
#include "qudit/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

namespace qudit {
namespace {

TEST(ComplexMatrixTest, RejectsTooSmallNonSquareAndNonFinite) {
  EXPECT_THROW(ComplexMatrix(1), InvalidInput);
  EXPECT_THROW(ComplexMatrix(ComplexMatrix::Storage(2, 3)), InvalidInput);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW((ComplexMatrix{{1.0, 0.0}, {0.0, Complex(nan, 0.0)}}),
               InvalidInput);
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW((ComplexMatrix{{1.0, inf}, {0.0, 1.0}}), InvalidInput);
  EXPECT_THROW((ComplexMatrix{{1.0, 0.0}, {0.0}}), InvalidInput);
}

TEST(ComplexMatrixTest, ProductMatchesTripleLoop) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (std::size_t n : {2, 3, 5, 7}) {
    oracle::Mat a = oracle::zeros(n);
    oracle::Mat b = oracle::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = {g(rng), g(rng)};
        b[i][j] = {g(rng), g(rng)};
      }
    }
    const auto got = multiply(oracle::toLibrary(a), oracle::toLibrary(b));
    EXPECT_LT(oracle::maxDiff(oracle::fromLibrary(got), oracle::mul(a, b)),
              1e-12);
  }
}

TEST(ComplexMatrixTest, AdjointAndApply) {
  const ComplexMatrix m{{1.0, Complex(0, 2)}, {Complex(3, 1), 4.0}};
  const auto a = m.adjoint();
  EXPECT_EQ(a(0, 1), Complex(3, -1));
  EXPECT_EQ(a(1, 0), Complex(0, -2));
  const std::vector<Complex> v{1.0, Complex(0, 1)};
  const auto w = qudit::apply(m, v);
  EXPECT_EQ(w[0], Complex(-1.0, 0.0));
  EXPECT_EQ(w[1], Complex(3.0, 5.0));
}

TEST(ComplexMatrixTest, LeftApplied2x2MatchesFullProduct) {
  std::mt19937_64 rng(5);
  const auto u = oracle::randomUnitaryMatrix(5, rng);
  Complex block[2][2] = {{Complex(0.6, 0.0), Complex(0.0, -0.8)},
                         {Complex(0.0, -0.8), Complex(0.6, 0.0)}};
  const auto got = u.leftApplied2x2(1, 4, block);
  oracle::Mat full = oracle::eye(5);
  full[1][1] = block[0][0];
  full[1][4] = block[0][1];
  full[4][1] = block[1][0];
  full[4][4] = block[1][1];
  EXPECT_LT(oracle::maxDiff(oracle::fromLibrary(got),
                            oracle::mul(full, oracle::fromLibrary(u))),
            1e-14);
}

TEST(PredicatesTest, Unitary) {
  std::mt19937_64 rng(3);
  EXPECT_TRUE(isUnitary(oracle::randomUnitaryMatrix(4, rng)));
  EXPECT_TRUE(isUnitary(ComplexMatrix::identity(3)));
  EXPECT_FALSE(isUnitary(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}));
  EXPECT_FALSE(isUnitary(ComplexMatrix{{1.0 + 1e-6, 0.0}, {0.0, 1.0}}, 1e-9));
  EXPECT_TRUE(isUnitary(ComplexMatrix{{1.0 + 1e-12, 0.0}, {0.0, 1.0}}, 1e-9));
}

TEST(PredicatesTest, Diagonal) {
  EXPECT_TRUE(isDiagonal(ComplexMatrix{{Complex(0, 1), 0.0}, {0.0, -1.0}}));
  EXPECT_FALSE(isDiagonal(ComplexMatrix{{1.0, 1e-6}, {0.0, 1.0}}));
  EXPECT_TRUE(isDiagonal(ComplexMatrix{{1.0, 1e-12}, {0.0, 1.0}}));
}

TEST(PredicatesTest, GlobalPhase) {
  std::mt19937_64 rng(9);
  const auto u = oracle::randomUnitaryMatrix(4, rng);
  EXPECT_TRUE(equalUpToGlobalPhase(u.scaled(std::polar(1.0, 2.1)), u, 1e-12));
  EXPECT_FALSE(equalUpToGlobalPhase(u.scaled(-1.0), u.with(0, 0, 0.0), 1e-6));
  const auto d1 = ComplexMatrix::diagonal(std::vector<Complex>{1.0, 1.0});
  const auto d2 = ComplexMatrix::diagonal(std::vector<Complex>{1.0, -1.0});
  EXPECT_FALSE(equalUpToGlobalPhase(d1, d2, 1e-6));
}

TEST(PredicatesTest, DistanceAndDeterminant) {
  const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const ComplexMatrix b{{1.0, 2.5}, {3.0, 4.0}};
  EXPECT_DOUBLE_EQ(maxNormDistance(a, b), 0.5);
  EXPECT_NEAR(std::abs(determinant(a) - Complex(-2.0, 0.0)), 0.0, 1e-12);
}

} // namespace
} // namespace qudit
