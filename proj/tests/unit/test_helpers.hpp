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

#include <array>
#include <random>

#include "procmat/matrix.hpp"

namespace procmat::testing {

/// Uniform random entries in [-1, 1] on both components, then symmetrized
/// to (m + m^dagger) / 2.
inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix raw(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      raw(i, j) = {u(rng), u(rng)};
    }
  }
  ComplexMatrix m = raw;
  m += raw.adjoint();
  m *= 0.5;
  return m;
}

/// Random dense complex matrix, entries in [-1, 1] on both components.
inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      m(i, j) = {u(rng), u(rng)};
    }
  }
  return m;
}

/**
 * Independent Kronecker-product oracle for six 2x2 factors: each entry of
 * the 64x64 result is computed directly as the product of one entry from
 * every factor, with factor 0 owning the most significant index bit.
 */
inline ComplexMatrix kron6_oracle(const std::array<ComplexMatrix, 6>& factors) {
  ComplexMatrix out(64);
  for (std::size_t row = 0; row < 64; ++row) {
    for (std::size_t col = 0; col < 64; ++col) {
      std::complex<double> value(1.0, 0.0);
      for (std::size_t pos = 0; pos < 6; ++pos) {
        const std::size_t shift = 5 - pos;
        const std::size_t rbit = (row >> shift) & 1u;
        const std::size_t cbit = (col >> shift) & 1u;
        value *= factors[pos](rbit, cbit);
      }
      out(row, col) = value;
    }
  }
  return out;
}

}  // namespace procmat::testing
