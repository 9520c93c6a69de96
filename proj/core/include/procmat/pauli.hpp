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
#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <string>

#include "procmat/matrix.hpp"

namespace procmat {

/// Single-qubit operator basis labels.
enum class PauliLabel : unsigned char { kI = 0, kX = 1, kY = 2, kZ = 3 };

/// 'I', 'X', 'Y' or 'Z'.
char pauli_label_name(PauliLabel label);

/// Inverse of pauli_label_name (also accepts lowercase); throws
/// std::invalid_argument on anything else.
PauliLabel pauli_label_from_name(char name);

/**
 * A word of six Pauli labels, one per tensor factor in the fixed global
 * order (A in, A out, B in, B out, C in, C out). Words index the operator
 * basis of the 64-dimensional six-qubit space.
 */
struct PauliWord {
  static constexpr std::size_t kLength = 6;

  std::array<PauliLabel, kLength> labels;

  /// Word with base-4 digit expansion `index`, leftmost label most
  /// significant (digits I=0, X=1, Y=2, Z=3). index < 4096.
  static PauliWord from_index(std::size_t index);

  /// Inverse of from_index.
  std::size_t index() const;

  /// Six-character string such as "IZZIZZ".
  std::string str() const;

  auto operator<=>(const PauliWord&) const = default;
};

/// The identity word (I,I,I,I,I,I).
PauliWord identity_word();

/// The standard 2x2 operator for one label: identity or a Pauli matrix.
/// Hermitian and involutory.
ComplexMatrix pauli(PauliLabel label);

/// Tensor product of the word's six single-qubit operators in the fixed
/// factor order (dimension 64).
ComplexMatrix word_to_matrix(const PauliWord& word);

/**
 * Coefficients of a 64x64 matrix in the Pauli-word basis: for every word w,
 * c_w = Tr[P_w * m] / 64, so that m = sum_w c_w * P_w exactly. The returned
 * map holds all 4096 words, including those with zero coefficient. Throws
 * std::invalid_argument unless m has dimension 64.
 */
std::map<PauliWord, std::complex<double>> pauli_decompose(
    const ComplexMatrix& m);

}  // namespace procmat
