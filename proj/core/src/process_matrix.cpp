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

#include "procmat/process_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "procmat/eigenvalues.hpp"

namespace procmat {

namespace {

using L = PauliLabel;

/**
 * A non-identity basis term is allowed when some party acts as a pure
 * receiver on it: identity on its output factor, non-identity on its input
 * factor. Terms failing this for every party would let a party signal to
 * its own past.
 */
bool word_is_allowed(const PauliWord& word) {
  for (std::size_t party = 0; party < 3; ++party) {
    const PauliLabel in = word.labels[2 * party];
    const PauliLabel out = word.labels[2 * party + 1];
    if (out == L::kI && in != L::kI) {
      return true;
    }
  }
  return false;
}

}  // namespace

ProcessMatrix::ProcessMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.dim() != kDim) {
    throw std::invalid_argument("process matrices have dimension 64");
  }
  if (!matrix_.is_hermitian(1e-10)) {
    throw std::invalid_argument("process matrices must be Hermitian");
  }
}

std::array<ComplexMatrix, 3> process_matrix_terms() {
  const PauliWord first{{L::kI, L::kZ, L::kZ, L::kI, L::kZ, L::kZ}};
  const PauliWord second{{L::kZ, L::kI, L::kX, L::kZ, L::kY, L::kZ}};
  const PauliWord third{{L::kZ, L::kZ, L::kY, L::kZ, L::kX, L::kI}};
  return {word_to_matrix(first), word_to_matrix(second),
          word_to_matrix(third)};
}

ProcessMatrix canonical_process_matrix() {
  const auto terms = process_matrix_terms();
  ComplexMatrix sum = ComplexMatrix::identity(ProcessMatrix::kDim);
  sum += terms[0];
  sum += terms[1];
  sum += terms[2];
  sum *= 0.125;
  return ProcessMatrix(std::move(sum));
}

nlohmann::json ValidityReport::to_json() const {
  nlohmann::json words = nlohmann::json::array();
  for (const PauliWord& w : offending_words) {
    nlohmann::json labels = nlohmann::json::array();
    for (PauliLabel label : w.labels) {
      labels.push_back(std::string(1, pauli_label_name(label)));
    }
    words.push_back(std::move(labels));
  }
  return nlohmann::json{
      {"psd_ok", psd_ok},       {"min_eigenvalue", min_eigenvalue},
      {"trace_ok", trace_ok},   {"trace", trace_value},
      {"terms_ok", terms_ok},   {"offending_words", std::move(words)},
      {"overall", overall},
  };
}

ValidityReport validate(const ProcessMatrix& w, double tol) {
  ValidityReport report;

  const auto eigenvalues = hermitian_eigenvalues(w.matrix());
  report.min_eigenvalue = eigenvalues.front();
  report.psd_ok = report.min_eigenvalue >= -tol;

  report.trace_value = trace(w.matrix()).real();
  report.trace_ok =
      std::abs(report.trace_value - ProcessMatrix::kExpectedTrace) <= tol;

  report.terms_ok = true;
  const auto coefficients = pauli_decompose(w.matrix());
  const PauliWord identity = identity_word();
  for (const auto& [word, coefficient] : coefficients) {
    if (word == identity || std::abs(coefficient) <= tol) {
      continue;
    }
    if (!word_is_allowed(word)) {
      report.terms_ok = false;
      report.offending_words.push_back(word);
    }
  }

  report.overall = report.psd_ok && report.trace_ok && report.terms_ok;
  return report;
}

}  // namespace procmat
