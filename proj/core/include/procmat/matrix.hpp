// Copyright 2026 The procmat Authors
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

#include <complex>
#include <cstddef>
#include <set>
#include <span>
#include <vector>

namespace procmat {

/**
 * Dense square matrix of complex doubles, row-major.
 *
 * The workhorse for operators, Choi matrices and process matrices. Every
 * operation returns a fresh value; nothing is mutated in place except via
 * the explicit compound-assignment operators, so instances can be shared
 * across threads freely once constructed.
 */
class ComplexMatrix {
 public:
  using Scalar = std::complex<double>;

  /// Zero matrix of the given dimension. The dimension must be positive.
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Scalar& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Scalar& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  /// Row-major view of all dim*dim entries.
  std::span<const Scalar> entries() const { return entries_; }

  ComplexMatrix adjoint() const;

  /// max |M(i,j) - conj(M(j,i))| over all entries.
  double hermiticity_defect() const;

  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

  /// Largest entrywise |difference| to another matrix of the same dimension.
  double max_abs_diff(const ComplexMatrix& other) const;

  /// Largest entrywise magnitude.
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Scalar factor);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Scalar rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(Scalar lhs, ComplexMatrix rhs) {
    rhs *= lhs;
    return rhs;
  }

  /// Matrix product.
  friend ComplexMatrix operator*(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs);

 private:
  std::size_t dim_;
  std::vector<Scalar> entries_;
};

/// Sum of the diagonal entries.
std::complex<double> trace(const ComplexMatrix& m);

/// Tr[a * b] without forming the product.
std::complex<double> trace_of_product(const ComplexMatrix& a,
                                      const ComplexMatrix& b);

/**
 * Kronecker product of the factors, leftmost factor most significant in the
 * row/column index. Throws std::invalid_argument on an empty list.
 */
ComplexMatrix tensor(const std::vector<ComplexMatrix>& factors);

/**
 * Partial trace over a subset of tensor factors.
 *
 * `factor_dims` lists the dimension of each factor, most significant first;
 * their product must equal the dimension of `m`. `traced_positions` holds
 * zero-based indices into `factor_dims`. The result lives on the kept
 * factors in their original order, and its trace equals the trace of `m`.
 */
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<std::size_t>& factor_dims,
                            const std::set<std::size_t>& traced_positions);

}  // namespace procmat
