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

#include <vector>

#include "procmat/matrix.hpp"

namespace procmat {

/**
 * Eigenvalues of a Hermitian matrix, in nondecreasing order.
 *
 * Self-contained cyclic Jacobi iteration on the 2n x 2n real symmetric
 * embedding [[Re, -Im], [Im, Re]]; the off-diagonal Frobenius norm is
 * driven below 1e-12 before the (doubled) spectrum is read off the
 * diagonal. Throws std::invalid_argument if the input fails the
 * Hermiticity check (defect > hermiticity_tol).
 */
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermiticity_tol = 1e-10);

}  // namespace procmat
