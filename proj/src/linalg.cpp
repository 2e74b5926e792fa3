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

#include "qudit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace qudit {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void requireSameDim(const ComplexMatrix& a, const ComplexMatrix& b,
                    const char* op) {
  if (a.dim() != b.dim()) {
    throw InvalidInput(std::string(op) + ": dimension mismatch (" +
                       std::to_string(a.dim()) + " vs " +
                       std::to_string(b.dim()) + ")");
  }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : data_(Storage::Zero(idx(dim), idx(dim))) {
  validate();
}

ComplexMatrix::ComplexMatrix(Storage data) : data_(std::move(data)) {
  validate();
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = rows.size();
  data_ = Storage::Zero(idx(n), idx(n));
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw InvalidInput("ComplexMatrix: rows must form a square matrix");
    }
    std::size_t c = 0;
    for (const auto& v : row) {
      data_(idx(r), idx(c++)) = v;
    }
    ++r;
  }
  validate();
}

void ComplexMatrix::validate() const {
  if (data_.rows() != data_.cols()) {
    throw InvalidInput("ComplexMatrix: matrix must be square");
  }
  if (data_.rows() < 2) {
    throw InvalidInput("ComplexMatrix: dimension must be at least 2");
  }
  for (Eigen::Index i = 0; i < data_.size(); ++i) {
    const auto v = data_.data()[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidInput("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  return ComplexMatrix(Storage::Identity(idx(dim), idx(dim)));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
  Storage s = Storage::Zero(idx(entries.size()), idx(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    s(idx(i), idx(i)) = entries[i];
  }
  return ComplexMatrix(std::move(s));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  return ComplexMatrix(Storage(data_.adjoint()));
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
  return ComplexMatrix(Storage(data_ * factor));
}

std::vector<Complex> ComplexMatrix::diagonalEntries() const {
  std::vector<Complex> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    out[i] = (*this)(i, i);
  }
  return out;
}

ComplexMatrix ComplexMatrix::with(std::size_t row, std::size_t col,
                                  Complex value) const {
  if (row >= dim() || col >= dim()) {
    throw InvalidInput("ComplexMatrix::with: index out of range");
  }
  Storage s = data_;
  s(idx(row), idx(col)) = value;
  return ComplexMatrix(std::move(s));
}

ComplexMatrix
ComplexMatrix::leftApplied2x2(std::size_t low, std::size_t high,
                              const Complex (&block)[2][2]) const {
  if (low >= dim() || high >= dim() || low == high) {
    throw InvalidInput("leftApplied2x2: invalid row pair");
  }
  ComplexMatrix out = *this;
  const auto a = idx(low);
  const auto b = idx(high);
  for (Eigen::Index c = 0; c < data_.cols(); ++c) {
    const Complex x = data_(a, c);
    const Complex y = data_(b, c);
    out.data_(a, c) = block[0][0] * x + block[0][1] * y;
    out.data_(b, c) = block[1][0] * x + block[1][1] * y;
  }
  return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  requireSameDim(a, b, "multiply");
  return ComplexMatrix(ComplexMatrix::Storage(a.data() * b.data()));
}

std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) {
    throw InvalidInput("apply: vector length does not match dimension");
  }
  std::vector<Complex> out(m.dim(), Complex{0.0, 0.0});
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

double maxNormDistance(const ComplexMatrix& a, const ComplexMatrix& b) {
  requireSameDim(a, b, "maxNormDistance");
  return (a.data() - b.data()).cwiseAbs().maxCoeff();
}

bool isUnitary(const ComplexMatrix& m, double tol) {
  const ComplexMatrix::Storage gram = m.data().adjoint() * m.data();
  const auto n = static_cast<Eigen::Index>(m.dim());
  return (gram - ComplexMatrix::Storage::Identity(n, n)).cwiseAbs().maxCoeff() <=
         tol;
}

bool isDiagonal(const ComplexMatrix& m, double tol) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (r != c && std::abs(m(r, c)) > tol) {
        return false;
      }
    }
  }
  return true;
}

bool equalUpToGlobalPhase(const ComplexMatrix& a, const ComplexMatrix& b,
                          double tol) {
  requireSameDim(a, b, "equalUpToGlobalPhase");
  std::size_t pr = 0;
  std::size_t pc = 0;
  double best = -1.0;
  for (std::size_t r = 0; r < b.dim(); ++r) {
    for (std::size_t c = 0; c < b.dim(); ++c) {
      if (const double mag = std::abs(b(r, c)); mag > best) {
        best = mag;
        pr = r;
        pc = c;
      }
    }
  }
  if (best == 0.0) {
    return maxNormDistance(a, b) <= tol;
  }
  const Complex ratio = a(pr, pc) / b(pr, pc);
  const double mag = std::abs(ratio);
  const Complex phase = mag > 0.0 ? ratio / mag : Complex{1.0, 0.0};
  return maxNormDistance(a, b.scaled(phase)) <= tol;
}

Complex determinant(const ComplexMatrix& m) { return m.data().determinant(); }

} // namespace qudit
