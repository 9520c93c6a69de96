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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "procmat/matrix.hpp"
#include "procmat/party.hpp"

namespace procmat {

/// Measurement axis of a single-qubit projective measurement.
enum class Axis { kX = 0, kY = 1, kZ = 2 };

/// 'x', 'y' or 'z'.
char axis_name(Axis axis);

/// Inverse of axis_name (also accepts uppercase); throws
/// std::invalid_argument on anything else.
Axis axis_from_name(char name);

/**
 * The local operation "measure the input qubit along `axis`, obtain
 * `outcome`, and send out the computational-basis state `reprep`", as a
 * 4x4 matrix on the party's input (x) output factor pair:
 *
 *   ((1 + (-1)^outcome * sigma_axis) / 2)  tensor
 *   ((1 + (-1)^reprep  * sigma_z)    / 2).
 *
 * Positive semi-definite, rank 1, trace 1. Bits must be 0 or 1; throws
 * std::invalid_argument otherwise.
 */
ComplexMatrix measure_reprepare_cj(Axis axis, int outcome, int reprep);

/**
 * How the re-prepared bit is computed from the party's free bit and its
 * just-obtained measurement outcome.
 */
enum class BitFunction {
  kZero,            // always 0
  kOne,             // always 1
  kFree,            // the free bit
  kOutcome,         // the measurement outcome
  kFreeXorOutcome,  // free bit XOR outcome
};

/// Value of the function on a concrete (free bit, outcome bit) pair.
int eval_bit_function(BitFunction f, int free_bit, int outcome_bit);

/// Canonical token: "0", "1", "f", "o" or "f^o".
std::string_view bit_function_name(BitFunction f);

/**
 * Parses a re-preparation expression. Accepts the canonical tokens with
 * `f` the free bit and `o` the outcome bit, and, when `party` is given,
 * the party's own letters as aliases (for the first party: "a" for the
 * free bit, "x" for the outcome, "a^x" or "x^a" for their XOR; likewise
 * b/y and c/z). Throws std::invalid_argument on anything else.
 */
BitFunction bit_function_from_name(std::string_view token);
BitFunction bit_function_from_name(std::string_view token, Party party);

/// One strategy-table cell: the measurement axis and the re-preparation rule.
struct ProgramRule {
  Axis axis;
  BitFunction reprep;
};

/**
 * A party's complete local strategy: for every value of the shared input m,
 * the measurement axis to use and how to compute the re-prepared bit. The
 * same axis serves both outcome branches (a single measurement is
 * performed), and the re-prepared bit is a deterministic function of the
 * free bit and the outcome.
 */
struct PartyProgram {
  Party party;
  std::map<int, ProgramRule> rules;  // keyed by m
};

/**
 * A finite family of completely positive maps indexed by a classical
 * outcome bit, each given as a 4x4 matrix on the party's input (x) output
 * factor pair. Outcomes are distinct.
 */
struct Instrument {
  std::vector<std::pair<int, ComplexMatrix>> elements;
};

/**
 * The two-element instrument a program performs at shared input m with the
 * given free bit: element `o` is measure_reprepare_cj(axis, o, k(free, o))
 * for o in {0, 1}. Throws std::out_of_range if the program has no rule
 * for m, std::invalid_argument on a non-bit free value.
 */
Instrument instrument_for(const PartyProgram& program, int m, int free_bit);

/// True iff every element is positive semi-definite within tol.
bool is_cp(const Instrument& inst, double tol = 1e-10);

/**
 * True iff the sum of the elements, partial-traced over the output factor,
 * equals the identity on the input factor within tol — i.e. the summed map
 * is trace-preserving.
 */
bool is_cptp_sum(const Instrument& inst, double tol = 1e-10);

/// The built-in winning programs (one per party) for the all-to-one game;
/// rules for m in {1, 2, 3}.
std::array<PartyProgram, 3> all_to_one_strategy();

/// The built-in winning programs for the selective game; m in {1, ..., 6}.
std::array<PartyProgram, 3> selective_strategy();

/// {"party":"A","rules":[{"m":1,"alpha":"z","k":"a"},...]} with k in the
/// expression grammar accepted by bit_function_from_name.
nlohmann::json program_to_json(const PartyProgram& program);

/// Inverse of program_to_json. Throws std::invalid_argument on schema
/// violations (unknown party, bad axis, bad k-expression, duplicate m).
PartyProgram program_from_json(const nlohmann::json& j);

/**
 * Parses an array of exactly three programs covering parties A, B and C
 * (in any order); the result is ordered (A, B, C). Throws
 * std::invalid_argument if a party is missing or duplicated, or if the
 * programs do not all cover the same set of m values.
 */
std::array<PartyProgram, 3> programs_from_json(const nlohmann::json& j);

}  // namespace procmat
