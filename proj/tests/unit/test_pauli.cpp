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

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "procmat/matrix.hpp"
#include "procmat/pauli.hpp"
#include "test_helpers.hpp"

namespace procmat {
namespace {

using testing::kron6_oracle;
using testing::random_hermitian;

constexpr std::complex<double> kZero{0.0, 0.0};
constexpr std::complex<double> kOne{1.0, 0.0};
constexpr std::complex<double> kImag{0.0, 1.0};

TEST_CASE("single-qubit operators have their textbook entries") {
  const ComplexMatrix x = pauli(PauliLabel::kX);
  CHECK(x(0, 0) == kZero);
  CHECK(x(0, 1) == kOne);
  CHECK(x(1, 0) == kOne);
  CHECK(x(1, 1) == kZero);

  const ComplexMatrix y = pauli(PauliLabel::kY);
  CHECK(y(0, 0) == kZero);
  CHECK(y(0, 1) == -kImag);
  CHECK(y(1, 0) == kImag);
  CHECK(y(1, 1) == kZero);

  const ComplexMatrix z = pauli(PauliLabel::kZ);
  CHECK(z(0, 0) == kOne);
  CHECK(z(0, 1) == kZero);
  CHECK(z(1, 0) == kZero);
  CHECK(z(1, 1) == -kOne);

  const ComplexMatrix eye = pauli(PauliLabel::kI);
  CHECK(eye.max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("single-qubit operators are Hermitian, involutory and orthogonal") {
  const std::array<PauliLabel, 4> labels = {PauliLabel::kI, PauliLabel::kX,
                                            PauliLabel::kY, PauliLabel::kZ};
  for (const PauliLabel a : labels) {
    const ComplexMatrix p = pauli(a);
    CHECK(p.hermiticity_defect() == 0.0);
    CHECK((p * p).max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
    for (const PauliLabel b : labels) {
      const std::complex<double> overlap = trace_of_product(p, pauli(b));
      const double expected = a == b ? 2.0 : 0.0;
      CHECK(std::abs(overlap - std::complex<double>(expected, 0.0)) == 0.0);
    }
  }
}

TEST_CASE("label names round-trip and reject junk") {
  CHECK(pauli_label_name(PauliLabel::kI) == 'I');
  CHECK(pauli_label_name(PauliLabel::kX) == 'X');
  CHECK(pauli_label_name(PauliLabel::kY) == 'Y');
  CHECK(pauli_label_name(PauliLabel::kZ) == 'Z');
  CHECK(pauli_label_from_name('I') == PauliLabel::kI);
  CHECK(pauli_label_from_name('x') == PauliLabel::kX);
  CHECK(pauli_label_from_name('y') == PauliLabel::kY);
  CHECK(pauli_label_from_name('Z') == PauliLabel::kZ);
  CHECK_THROWS_AS(pauli_label_from_name('Q'), std::invalid_argument);
  CHECK_THROWS_AS(pauli_label_from_name(' '), std::invalid_argument);
}

TEST_CASE("word index round-trips over the whole basis") {
  for (std::size_t index = 0; index < 4096; ++index) {
    const PauliWord word = PauliWord::from_index(index);
    CHECK(word.index() == index);
  }
  CHECK_THROWS_AS(PauliWord::from_index(4096), std::out_of_range);

  // Leftmost label is the most significant base-4 digit.
  const PauliWord leading = PauliWord::from_index(3 * 1024);
  CHECK(leading.labels[0] == PauliLabel::kZ);
  for (std::size_t i = 1; i < PauliWord::kLength; ++i) {
    CHECK(leading.labels[i] == PauliLabel::kI);
  }

  const PauliWord word{{PauliLabel::kI, PauliLabel::kZ, PauliLabel::kZ,
                        PauliLabel::kI, PauliLabel::kZ, PauliLabel::kZ}};
  CHECK(word.str() == "IZZIZZ");
  CHECK(identity_word().str() == "IIIIII");
  CHECK(identity_word().index() == 0);
}

TEST_CASE("word matrices agree with the generic tensor product") {
  CHECK(word_to_matrix(identity_word())
            .max_abs_diff(ComplexMatrix::identity(64)) == 0.0);

  const std::array<PauliWord, 3> correlation_words = {
      PauliWord{{PauliLabel::kI, PauliLabel::kZ, PauliLabel::kZ,
                 PauliLabel::kI, PauliLabel::kZ, PauliLabel::kZ}},
      PauliWord{{PauliLabel::kZ, PauliLabel::kI, PauliLabel::kX,
                 PauliLabel::kZ, PauliLabel::kY, PauliLabel::kZ}},
      PauliWord{{PauliLabel::kZ, PauliLabel::kZ, PauliLabel::kY,
                 PauliLabel::kZ, PauliLabel::kX, PauliLabel::kI}}};
  for (const PauliWord& word : correlation_words) {
    std::vector<ComplexMatrix> factors;
    std::array<ComplexMatrix, 6> oracle_factors = {
        ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
        ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2)};
    for (std::size_t i = 0; i < PauliWord::kLength; ++i) {
      factors.push_back(pauli(word.labels[i]));
      oracle_factors[i] = pauli(word.labels[i]);
    }
    const ComplexMatrix direct = word_to_matrix(word);
    CHECK(direct.max_abs_diff(tensor(factors)) == 0.0);
    CHECK(direct.max_abs_diff(kron6_oracle(oracle_factors)) == 0.0);
  }

  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> pick(0, 4095);
  for (int trial = 0; trial < 25; ++trial) {
    const PauliWord word = PauliWord::from_index(pick(rng));
    std::vector<ComplexMatrix> factors;
    for (std::size_t i = 0; i < PauliWord::kLength; ++i) {
      factors.push_back(pauli(word.labels[i]));
    }
    CHECK(word_to_matrix(word).max_abs_diff(tensor(factors)) == 0.0);
  }
}

TEST_CASE("decomposing the identity yields a single unit coefficient") {
  const auto coefficients = pauli_decompose(ComplexMatrix::identity(64));
  CHECK(coefficients.size() == 4096);
  for (const auto& [word, value] : coefficients) {
    const std::complex<double> expected =
        word == identity_word() ? kOne : kZero;
    CHECK(std::abs(value - expected) == 0.0);
  }
}

TEST_CASE("decomposing a known combination recovers the weights") {
  const std::array<PauliWord, 3> correlation_words = {
      PauliWord{{PauliLabel::kI, PauliLabel::kZ, PauliLabel::kZ,
                 PauliLabel::kI, PauliLabel::kZ, PauliLabel::kZ}},
      PauliWord{{PauliLabel::kZ, PauliLabel::kI, PauliLabel::kX,
                 PauliLabel::kZ, PauliLabel::kY, PauliLabel::kZ}},
      PauliWord{{PauliLabel::kZ, PauliLabel::kZ, PauliLabel::kY,
                 PauliLabel::kZ, PauliLabel::kX, PauliLabel::kI}}};
  ComplexMatrix combo = ComplexMatrix::identity(64);
  for (const PauliWord& word : correlation_words) {
    combo += word_to_matrix(word);
  }
  combo *= 0.125;

  const auto coefficients = pauli_decompose(combo);
  for (const auto& [word, value] : coefficients) {
    const bool member = word == identity_word() ||
                        word == correlation_words[0] ||
                        word == correlation_words[1] ||
                        word == correlation_words[2];
    const std::complex<double> expected = member ? 0.125 : 0.0;
    CHECK(std::abs(value - expected) < 1e-15);
  }
}

TEST_CASE("random Hermitian matrices round-trip through the decomposition") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix m = random_hermitian(rng, 64);
    const auto coefficients = pauli_decompose(m);
    ComplexMatrix rebuilt(64);
    for (const auto& [word, value] : coefficients) {
      if (std::abs(value) == 0.0) {
        continue;
      }
      rebuilt += value * word_to_matrix(word);
    }
    CHECK(rebuilt.max_abs_diff(m) < 1e-12);
  }
}

TEST_CASE("decomposition rejects matrices of the wrong dimension") {
  CHECK_THROWS_AS(pauli_decompose(ComplexMatrix::identity(32)),
                  std::invalid_argument);
  CHECK_THROWS_AS(pauli_decompose(ComplexMatrix::identity(2)),
                  std::invalid_argument);
}

}  // namespace
}  // namespace procmat
