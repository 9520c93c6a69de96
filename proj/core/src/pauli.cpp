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

#include "procmat/pauli.hpp"

#include <cctype>
#include <stdexcept>

namespace procmat {

namespace {

constexpr std::size_t kWordCount = 4096;  // 4^6
constexpr std::size_t kSpaceDim = 64;     // 2^6

/**
 * Every Pauli word, as a matrix, has exactly one nonzero entry per row.
 * For row r, the entry sits at column `col(r)` with value `val(r)`; both
 * factor over the six qubit positions, which keeps word evaluation linear
 * in the dimension instead of quadratic.
 */
struct RowEntry {
  std::size_t col;
  std::complex<double> value;
};

RowEntry word_row_entry(const PauliWord& word, std::size_t row) {
  std::size_t col = 0;
  std::complex<double> value(1.0, 0.0);
  for (std::size_t pos = 0; pos < PauliWord::kLength; ++pos) {
    const std::size_t shift = PauliWord::kLength - 1 - pos;
    const std::size_t row_bit = (row >> shift) & 1u;
    std::size_t col_bit = row_bit;
    switch (word.labels[pos]) {
      case PauliLabel::kI:
        break;
      case PauliLabel::kX:
        col_bit = 1u - row_bit;
        break;
      case PauliLabel::kY:
        // Entries (0,1) = -i and (1,0) = +i.
        col_bit = 1u - row_bit;
        value *= row_bit == 0 ? std::complex<double>(0.0, -1.0)
                              : std::complex<double>(0.0, 1.0);
        break;
      case PauliLabel::kZ:
        if (row_bit == 1) {
          value = -value;
        }
        break;
    }
    col |= col_bit << shift;
  }
  return {col, value};
}

}  // namespace

char pauli_label_name(PauliLabel label) {
  switch (label) {
    case PauliLabel::kI:
      return 'I';
    case PauliLabel::kX:
      return 'X';
    case PauliLabel::kY:
      return 'Y';
    case PauliLabel::kZ:
      return 'Z';
  }
  throw std::invalid_argument("invalid Pauli label value");
}

PauliLabel pauli_label_from_name(char name) {
  switch (std::toupper(static_cast<unsigned char>(name))) {
    case 'I':
      return PauliLabel::kI;
    case 'X':
      return PauliLabel::kX;
    case 'Y':
      return PauliLabel::kY;
    case 'Z':
      return PauliLabel::kZ;
    default:
      throw std::invalid_argument(std::string("unknown Pauli label: ") + name);
  }
}

PauliWord PauliWord::from_index(std::size_t index) {
  if (index >= kWordCount) {
    throw std::out_of_range("Pauli word index out of range");
  }
  PauliWord word;
  for (std::size_t pos = kLength; pos-- > 0;) {
    word.labels[pos] = static_cast<PauliLabel>(index & 3u);
    index >>= 2;
  }
  return word;
}

std::size_t PauliWord::index() const {
  std::size_t idx = 0;
  for (PauliLabel label : labels) {
    idx = (idx << 2) | static_cast<std::size_t>(label);
  }
  return idx;
}

std::string PauliWord::str() const {
  std::string s;
  s.reserve(kLength);
  for (PauliLabel label : labels) {
    s.push_back(pauli_label_name(label));
  }
  return s;
}

PauliWord identity_word() {
  return PauliWord{{PauliLabel::kI, PauliLabel::kI, PauliLabel::kI,
                    PauliLabel::kI, PauliLabel::kI, PauliLabel::kI}};
}

ComplexMatrix pauli(PauliLabel label) {
  ComplexMatrix m(2);
  switch (label) {
    case PauliLabel::kI:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case PauliLabel::kX:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliLabel::kY:
      m(0, 1) = std::complex<double>(0.0, -1.0);
      m(1, 0) = std::complex<double>(0.0, 1.0);
      break;
    case PauliLabel::kZ:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix word_to_matrix(const PauliWord& word) {
  ComplexMatrix m(kSpaceDim);
  for (std::size_t row = 0; row < kSpaceDim; ++row) {
    const RowEntry entry = word_row_entry(word, row);
    m(row, entry.col) = entry.value;
  }
  return m;
}

std::map<PauliWord, std::complex<double>> pauli_decompose(
    const ComplexMatrix& m) {
  if (m.dim() != kSpaceDim) {
    throw std::invalid_argument(
        "pauli_decompose expects a matrix of dimension 64");
  }
  std::map<PauliWord, std::complex<double>> coefficients;
  for (std::size_t w = 0; w < kWordCount; ++w) {
    const PauliWord word = PauliWord::from_index(w);
    // Tr[P_w * m] touches only the one nonzero of P_w in each row.
    std::complex<double> tr(0.0, 0.0);
    for (std::size_t row = 0; row < kSpaceDim; ++row) {
      const RowEntry entry = word_row_entry(word, row);
      tr += entry.value * m(entry.col, row);
    }
    coefficients.emplace(word, tr / static_cast<double>(kSpaceDim));
  }
  return coefficients;
}

}  // namespace procmat
