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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qudit {

using Complex = std::complex<double>;

/// Default tolerance for unitarity and diagonality checks.
inline constexpr double kDefaultTol = 1e-9;

/**
 * Dense square complex matrix with value semantics.
 *
 * Entries are addressed as (row, col). Dimension is at least 2 and all
 * entries are finite; both are checked on construction.
 */
class ComplexMatrix {
public:
  using Storage =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);
  explicit ComplexMatrix(Storage data);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> entries);

  [[nodiscard]] std::size_t dim() const {
    return static_cast<std::size_t>(data_.rows());
  }
  [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
    return data_(static_cast<Eigen::Index>(row),
                 static_cast<Eigen::Index>(col));
  }
  [[nodiscard]] const Storage& data() const { return data_; }

  [[nodiscard]] ComplexMatrix adjoint() const;
  [[nodiscard]] ComplexMatrix scaled(Complex factor) const;
  [[nodiscard]] std::vector<Complex> diagonalEntries() const;

  /// Copy with one entry replaced.
  [[nodiscard]] ComplexMatrix with(std::size_t row, std::size_t col,
                                   Complex value) const;

  /// Copy with a 2x2 block applied from the left on rows {low, high}:
  /// [row_low; row_high] <- block * [row_low; row_high]. O(d) update.
  [[nodiscard]] ComplexMatrix leftApplied2x2(std::size_t low, std::size_t high,
                                             const Complex (&block)[2][2]) const;

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.data_ == b.data_;
  }

private:
  void validate() const;

  Storage data_;
};

/// Standard product a*b. Throws InvalidInput on dimension mismatch.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix-vector product; the vector length must equal m.dim().
std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> v);

/// Entrywise max |a_ij - b_ij|.
double maxNormDistance(const ComplexMatrix& a, const ComplexMatrix& b);

/// max-norm(m^dagger m - I) <= tol.
bool isUnitary(const ComplexMatrix& m, double tol = kDefaultTol);

/// Every off-diagonal modulus <= tol.
bool isDiagonal(const ComplexMatrix& m, double tol = kDefaultTol);

/// Exists |c| = 1 with max-norm(a - c b) <= tol. The phase is fixed by the
/// largest-modulus entry of b.
bool equalUpToGlobalPhase(const ComplexMatrix& a, const ComplexMatrix& b,
                          double tol = kDefaultTol);

/// Determinant (used by tests and diagnostics).
Complex determinant(const ComplexMatrix& m);

} // namespace qudit
