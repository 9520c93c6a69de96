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
#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "procmat/matrix.hpp"
#include "procmat/pauli.hpp"

namespace procmat {

/**
 * A 64x64 Hermitian matrix on the six-qubit space of all parties' input and
 * output factors, in the fixed order (A in, A out, B in, B out, C in, C out).
 *
 * Carries no validity claim by itself; validity against the framework's
 * three conditions is established by validate(). Construction enforces only
 * dimension 64 and Hermiticity within 1e-10, throwing std::invalid_argument
 * otherwise.
 */
class ProcessMatrix {
 public:
  static constexpr std::size_t kDim = 64;
  static constexpr std::size_t kFactors = 6;
  static constexpr double kExpectedTrace = 8.0;  // product of output dims

  explicit ProcessMatrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/**
 * The three correlation terms of the canonical process matrix, i.e. the
 * Pauli words (I,Z,Z,I,Z,Z), (Z,I,X,Z,Y,Z) and (Z,Z,Y,Z,X,I) as 64x64
 * matrices. Each is traceless, Hermitian and involutory; they mutually
 * commute, and the first times the second equals the third.
 */
std::array<ComplexMatrix, 3> process_matrix_terms();

/**
 * The canonical tripartite process matrix: one eighth of (identity plus the
 * three correlation terms). Hermitian, trace 8, positive semi-definite with
 * eigenvalues 1/2 (multiplicity 16) and 0 (multiplicity 48); it supports
 * signaling incompatible with any predefined causal order.
 */
ProcessMatrix canonical_process_matrix();

/**
 * Outcome of checking one candidate matrix against the three validity
 * conditions: positive semi-definiteness, trace equal to the product of the
 * output-factor dimensions (8), and the allowed-terms rule (every
 * non-identity Pauli-basis term needs at least one party whose output label
 * is identity while its input label is not).
 */
struct ValidityReport {
  bool psd_ok = false;
  double min_eigenvalue = 0.0;

  bool trace_ok = false;
  double trace_value = 0.0;
  double expected_trace = ProcessMatrix::kExpectedTrace;

  bool terms_ok = false;
  std::vector<PauliWord> offending_words;

  /// Conjunction of the three checks.
  bool overall = false;

  /// {"psd_ok":bool,"min_eigenvalue":real,"trace_ok":bool,"trace":real,
  ///  "terms_ok":bool,"offending_words":[["I","Z",...],...],"overall":bool}
  nlohmann::json to_json() const;
};

/**
 * Checks the three validity conditions at absolute tolerance `tol`:
 * psd_ok iff the minimum eigenvalue is >= -tol; trace_ok iff |trace - 8|
 * <= tol; terms_ok iff no Pauli word with |coefficient| > tol violates the
 * allowed-terms rule. `overall` is their conjunction.
 */
ValidityReport validate(const ProcessMatrix& w, double tol = 1e-9);

}  // namespace procmat
