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

#include "procmat/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace procmat {

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Scalar(0.0, 0.0)) {
  if (dim == 0) {
    throw std::invalid_argument("matrix dimension must be positive");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = Scalar(1.0, 0.0);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      out(j, i) = std::conj((*this)(i, j));
    }
  }
  return out;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) {
    throw std::invalid_argument("dimension mismatch in max_abs_diff");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
  }
  return worst;
}

double ComplexMatrix::max_abs() const {
  double worst = 0.0;
  for (const Scalar& e : entries_) {
    worst = std::max(worst, std::abs(e));
  }
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) {
    throw std::invalid_argument("dimension mismatch in matrix addition");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += other.entries_[k];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) {
    throw std::invalid_argument("dimension mismatch in matrix subtraction");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] -= other.entries_[k];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Scalar factor) {
  for (Scalar& e : entries_) {
    e *= factor;
  }
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) {
    throw std::invalid_argument("dimension mismatch in matrix product");
  }
  const std::size_t n = lhs.dim_;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const ComplexMatrix::Scalar lik = lhs(i, k);
      if (lik == ComplexMatrix::Scalar(0.0, 0.0)) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += lik * rhs(k, j);
      }
    }
  }
  return out;
}

std::complex<double> trace(const ComplexMatrix& m) {
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    sum += m(i, i);
  }
  return sum;
}

std::complex<double> trace_of_product(const ComplexMatrix& a,
                                      const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch in trace_of_product");
  }
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      sum += a(i, k) * b(k, i);
    }
  }
  return sum;
}

namespace {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t ia = 0; ia < da; ++ia) {
    for (std::size_t ja = 0; ja < da; ++ja) {
      const ComplexMatrix::Scalar aij = a(ia, ja);
      if (aij == ComplexMatrix::Scalar(0.0, 0.0)) {
        continue;
      }
      for (std::size_t ib = 0; ib < db; ++ib) {
        for (std::size_t jb = 0; jb < db; ++jb) {
          out(ia * db + ib, ja * db + jb) = aij * b(ib, jb);
        }
      }
    }
  }
  return out;
}

}  // namespace

ComplexMatrix tensor(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("tensor requires at least one factor");
  }
  ComplexMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    out = kron(out, factors[k]);
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<std::size_t>& factor_dims,
                            const std::set<std::size_t>& traced_positions) {
  std::size_t total = 1;
  for (std::size_t d : factor_dims) {
    if (d == 0) {
      throw std::invalid_argument("factor dimensions must be positive");
    }
    total *= d;
  }
  if (total != m.dim()) {
    throw std::invalid_argument(
        "product of factor dimensions does not match matrix dimension");
  }
  for (std::size_t p : traced_positions) {
    if (p >= factor_dims.size()) {
      throw std::invalid_argument("traced position out of range");
    }
  }

  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
  for (std::size_t p = 0; p < factor_dims.size(); ++p) {
    (traced_positions.count(p) != 0 ? traced : kept).push_back(p);
  }

  // Row-major strides, factor 0 most significant.
  std::vector<std::size_t> stride(factor_dims.size(), 1);
  for (std::size_t p = factor_dims.size(); p-- > 1;) {
    stride[p - 1] = stride[p] * factor_dims[p];
  }

  std::size_t kept_dim = 1;
  for (std::size_t p : kept) {
    kept_dim *= factor_dims[p];
  }
  std::size_t traced_dim = 1;
  for (std::size_t p : traced) {
    traced_dim *= factor_dims[p];
  }

  // Maps a mixed-radix index over the listed positions to a full flat index.
  auto expand = [&](std::size_t idx, const std::vector<std::size_t>& positions) {
    std::size_t flat = 0;
    for (std::size_t k = positions.size(); k-- > 0;) {
      const std::size_t p = positions[k];
      flat += (idx % factor_dims[p]) * stride[p];
      idx /= factor_dims[p];
    }
    return flat;
  };

  ComplexMatrix out(kept_dim);
  for (std::size_t r = 0; r < kept_dim; ++r) {
    const std::size_t row_base = expand(r, kept);
    for (std::size_t c = 0; c < kept_dim; ++c) {
      const std::size_t col_base = expand(c, kept);
      ComplexMatrix::Scalar sum(0.0, 0.0);
      for (std::size_t t = 0; t < traced_dim; ++t) {
        const std::size_t offset = expand(t, traced);
        sum += m(row_base + offset, col_base + offset);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

}  // namespace procmat
