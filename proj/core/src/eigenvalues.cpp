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

#include "procmat/eigenvalues.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace procmat {

namespace {

// The (doubled) spectrum is extracted once the off-diagonal Frobenius norm
// falls below this.
constexpr double kOffNormTarget = 1e-12;
constexpr int kMaxSweeps = 100;

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermiticity_tol) {
  if (m.hermiticity_defect() > hermiticity_tol) {
    throw std::invalid_argument(
        "hermitian_eigenvalues requires a Hermitian input");
  }

  // Real symmetric embedding S = [[Re, -Im], [Im, Re]] of size 2n; its
  // spectrum is that of the input with every eigenvalue doubled.
  const std::size_t n = m.dim();
  const std::size_t nn = 2 * n;
  std::vector<double> s(nn * nn);
  auto at = [&s, nn](std::size_t i, std::size_t j) -> double& {
    return s[i * nn + j];
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = m(i, j).real();
      const double im = m(i, j).imag();
      at(i, j) = re;
      at(n + i, n + j) = re;
      at(i, n + j) = -im;
      at(n + i, j) = im;
    }
  }

  auto off_norm = [&]() {
    double sum = 0.0;
    for (std::size_t i = 0; i < nn; ++i) {
      for (std::size_t j = i + 1; j < nn; ++j) {
        sum += 2.0 * at(i, j) * at(i, j);
      }
    }
    return std::sqrt(sum);
  };

  // Cyclic Jacobi: sweep all upper-triangle pivots, zeroing each with a
  // Givens rotation, until the off-diagonal mass is gone.
  int sweeps = 0;
  while (off_norm() > kOffNormTarget) {
    if (++sweeps > kMaxSweeps) {
      throw std::runtime_error("eigenvalue iteration failed to converge");
    }
    for (std::size_t p = 0; p < nn; ++p) {
      for (std::size_t q = p + 1; q < nn; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) {
          continue;
        }
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t k = 0; k < nn; ++k) {
          if (k == p || k == q) {
            continue;
          }
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - sn * akq;
          at(p, k) = at(k, p);
          at(k, q) = sn * akp + c * akq;
          at(q, k) = at(k, q);
        }
      }
    }
  }

  std::vector<double> doubled(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    doubled[i] = at(i, i);
  }
  std::sort(doubled.begin(), doubled.end());

  // Each eigenvalue appears exactly twice; collapse adjacent pairs.
  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) {
    eigenvalues[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  }
  return eigenvalues;
}

}  // namespace procmat
