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

#include "procmat/instruments.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "procmat/eigenvalues.hpp"
#include "procmat/pauli.hpp"

namespace procmat {

namespace {

PauliLabel axis_to_pauli(Axis axis) {
  switch (axis) {
    case Axis::kX:
      return PauliLabel::kX;
    case Axis::kY:
      return PauliLabel::kY;
    case Axis::kZ:
      return PauliLabel::kZ;
  }
  throw std::invalid_argument("invalid axis value");
}

void require_bit(int value, const char* what) {
  if (value != 0 && value != 1) {
    throw std::invalid_argument(std::string(what) + " must be 0 or 1");
  }
}

// The free-bit / outcome letters each party uses in the strategy-file
// grammar, e.g. party B's free bit is written "b" and its outcome "y".
char free_letter(Party p) { return "abc"[party_index(p)]; }
char outcome_letter(Party p) { return "xyz"[party_index(p)]; }

std::string lowercase(std::string_view token) {
  std::string s(token);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

/// The party-flavored token for JSON output, e.g. kFreeXorOutcome for
/// party A prints as "a^x".
std::string bit_function_token(BitFunction f, Party party) {
  switch (f) {
    case BitFunction::kZero:
      return "0";
    case BitFunction::kOne:
      return "1";
    case BitFunction::kFree:
      return std::string(1, free_letter(party));
    case BitFunction::kOutcome:
      return std::string(1, outcome_letter(party));
    case BitFunction::kFreeXorOutcome:
      return std::string(1, free_letter(party)) + "^" + outcome_letter(party);
  }
  throw std::invalid_argument("invalid bit-function value");
}

PartyProgram make_program(Party party,
                          std::initializer_list<std::pair<int, ProgramRule>> rules) {
  PartyProgram program;
  program.party = party;
  for (const auto& [m, rule] : rules) {
    program.rules.emplace(m, rule);
  }
  return program;
}

}  // namespace

char axis_name(Axis axis) {
  switch (axis) {
    case Axis::kX:
      return 'x';
    case Axis::kY:
      return 'y';
    case Axis::kZ:
      return 'z';
  }
  throw std::invalid_argument("invalid axis value");
}

Axis axis_from_name(char name) {
  switch (std::tolower(static_cast<unsigned char>(name))) {
    case 'x':
      return Axis::kX;
    case 'y':
      return Axis::kY;
    case 'z':
      return Axis::kZ;
    default:
      throw std::invalid_argument(std::string("unknown axis: ") + name);
  }
}

ComplexMatrix measure_reprepare_cj(Axis axis, int outcome, int reprep) {
  require_bit(outcome, "outcome");
  require_bit(reprep, "reprep");
  const double measure_sign = outcome == 0 ? 1.0 : -1.0;
  const double prepare_sign = reprep == 0 ? 1.0 : -1.0;

  ComplexMatrix measure = ComplexMatrix::identity(2);
  measure += measure_sign * pauli(axis_to_pauli(axis));
  measure *= 0.5;

  ComplexMatrix prepare = ComplexMatrix::identity(2);
  prepare += prepare_sign * pauli(PauliLabel::kZ);
  prepare *= 0.5;

  return tensor({measure, prepare});
}

int eval_bit_function(BitFunction f, int free_bit, int outcome_bit) {
  require_bit(free_bit, "free bit");
  require_bit(outcome_bit, "outcome bit");
  switch (f) {
    case BitFunction::kZero:
      return 0;
    case BitFunction::kOne:
      return 1;
    case BitFunction::kFree:
      return free_bit;
    case BitFunction::kOutcome:
      return outcome_bit;
    case BitFunction::kFreeXorOutcome:
      return free_bit ^ outcome_bit;
  }
  throw std::invalid_argument("invalid bit-function value");
}

std::string_view bit_function_name(BitFunction f) {
  switch (f) {
    case BitFunction::kZero:
      return "0";
    case BitFunction::kOne:
      return "1";
    case BitFunction::kFree:
      return "f";
    case BitFunction::kOutcome:
      return "o";
    case BitFunction::kFreeXorOutcome:
      return "f^o";
  }
  throw std::invalid_argument("invalid bit-function value");
}

BitFunction bit_function_from_name(std::string_view token) {
  const std::string t = lowercase(token);
  if (t == "0") return BitFunction::kZero;
  if (t == "1") return BitFunction::kOne;
  if (t == "f") return BitFunction::kFree;
  if (t == "o") return BitFunction::kOutcome;
  if (t == "f^o" || t == "o^f") return BitFunction::kFreeXorOutcome;
  throw std::invalid_argument("unknown re-preparation expression: " +
                              std::string(token));
}

BitFunction bit_function_from_name(std::string_view token, Party party) {
  const std::string t = lowercase(token);
  const std::string free(1, free_letter(party));
  const std::string outcome(1, outcome_letter(party));
  if (t == free) return BitFunction::kFree;
  if (t == outcome) return BitFunction::kOutcome;
  if (t == free + "^" + outcome || t == outcome + "^" + free) {
    return BitFunction::kFreeXorOutcome;
  }
  return bit_function_from_name(token);
}

Instrument instrument_for(const PartyProgram& program, int m, int free_bit) {
  require_bit(free_bit, "free bit");
  const auto it = program.rules.find(m);
  if (it == program.rules.end()) {
    throw std::out_of_range("program for party " +
                            std::string(party_name(program.party)) +
                            " has no rule for m=" + std::to_string(m));
  }
  const ProgramRule& rule = it->second;
  Instrument inst;
  for (int outcome = 0; outcome < 2; ++outcome) {
    const int reprep = eval_bit_function(rule.reprep, free_bit, outcome);
    inst.elements.emplace_back(outcome,
                               measure_reprepare_cj(rule.axis, outcome, reprep));
  }
  return inst;
}

bool is_cp(const Instrument& inst, double tol) {
  for (const auto& [outcome, element] : inst.elements) {
    if (!element.is_hermitian(tol)) {
      return false;
    }
    const auto eigenvalues = hermitian_eigenvalues(element, tol);
    if (eigenvalues.front() < -tol) {
      return false;
    }
  }
  return true;
}

bool is_cptp_sum(const Instrument& inst, double tol) {
  if (inst.elements.empty()) {
    return false;
  }
  ComplexMatrix sum(inst.elements.front().second.dim());
  for (const auto& [outcome, element] : inst.elements) {
    sum += element;
  }
  // Trace preservation: tracing out the output factor must leave the
  // identity on the input factor.
  const ComplexMatrix input_marginal = partial_trace(sum, {2, 2}, {1});
  return input_marginal.max_abs_diff(ComplexMatrix::identity(2)) <= tol;
}

std::array<PartyProgram, 3> all_to_one_strategy() {
  using B = BitFunction;
  return {
      make_program(Party::kA, {{1, {Axis::kZ, B::kFree}},
                               {2, {Axis::kZ, B::kFree}},
                               {3, {Axis::kZ, B::kFreeXorOutcome}}}),
      make_program(Party::kB, {{1, {Axis::kX, B::kFreeXorOutcome}},
                               {2, {Axis::kZ, B::kFree}},
                               {3, {Axis::kY, B::kFreeXorOutcome}}}),
      make_program(Party::kC, {{1, {Axis::kY, B::kFreeXorOutcome}},
                               {2, {Axis::kZ, B::kFreeXorOutcome}},
                               {3, {Axis::kX, B::kFree}}}),
  };
}

std::array<PartyProgram, 3> selective_strategy() {
  using B = BitFunction;
  return {
      make_program(Party::kA, {{1, {Axis::kZ, B::kFree}},
                               {2, {Axis::kZ, B::kFreeXorOutcome}},
                               {3, {Axis::kZ, B::kFree}},
                               {4, {Axis::kZ, B::kOutcome}},
                               {5, {Axis::kZ, B::kOutcome}},
                               {6, {Axis::kZ, B::kZero}}}),
      make_program(Party::kB, {{1, {Axis::kZ, B::kFree}},
                               {2, {Axis::kY, B::kOutcome}},
                               {3, {Axis::kX, B::kFreeXorOutcome}},
                               {4, {Axis::kY, B::kFreeXorOutcome}},
                               {5, {Axis::kX, B::kOutcome}},
                               {6, {Axis::kZ, B::kFree}}}),
      make_program(Party::kC, {{1, {Axis::kZ, B::kOutcome}},
                               {2, {Axis::kX, B::kFree}},
                               {3, {Axis::kY, B::kOutcome}},
                               {4, {Axis::kX, B::kFree}},
                               {5, {Axis::kY, B::kFreeXorOutcome}},
                               {6, {Axis::kZ, B::kFreeXorOutcome}}}),
  };
}

nlohmann::json program_to_json(const PartyProgram& program) {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& [m, rule] : program.rules) {
    rules.push_back(nlohmann::json{
        {"m", m},
        {"alpha", std::string(1, axis_name(rule.axis))},
        {"k", bit_function_token(rule.reprep, program.party)},
    });
  }
  return nlohmann::json{{"party", std::string(party_name(program.party))},
                        {"rules", std::move(rules)}};
}

PartyProgram program_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("party") || !j.contains("rules")) {
    throw std::invalid_argument(
        "program must be an object with party and rules");
  }
  if (!j["party"].is_string()) {
    throw std::invalid_argument("party must be a string");
  }
  PartyProgram program;
  program.party = party_from_name(j["party"].get<std::string>());
  if (!j["rules"].is_array() || j["rules"].empty()) {
    throw std::invalid_argument("rules must be a non-empty array");
  }
  for (const auto& rule : j["rules"]) {
    if (!rule.is_object() || !rule.contains("m") || !rule.contains("alpha") ||
        !rule.contains("k")) {
      throw std::invalid_argument("each rule needs m, alpha and k");
    }
    if (!rule["m"].is_number_integer()) {
      throw std::invalid_argument("rule m must be an integer");
    }
    const int m = rule["m"].get<int>();
    if (!rule["alpha"].is_string() || rule["alpha"].get<std::string>().size() != 1) {
      throw std::invalid_argument("rule alpha must be a one-letter string");
    }
    if (!rule["k"].is_string()) {
      throw std::invalid_argument("rule k must be a string");
    }
    const Axis axis = axis_from_name(rule["alpha"].get<std::string>()[0]);
    const BitFunction reprep =
        bit_function_from_name(rule["k"].get<std::string>(), program.party);
    if (!program.rules.emplace(m, ProgramRule{axis, reprep}).second) {
      throw std::invalid_argument(
          "duplicate rule for m=" + std::to_string(m) + " in program for party " +
          std::string(party_name(program.party)));
    }
  }
  return program;
}

std::array<PartyProgram, 3> programs_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument(
        "strategy must be an array of exactly three programs");
  }
  std::array<PartyProgram, 3> programs = {
      PartyProgram{Party::kA, {}},
      PartyProgram{Party::kB, {}},
      PartyProgram{Party::kC, {}},
  };
  std::set<Party> seen;
  for (const auto& entry : j) {
    PartyProgram program = program_from_json(entry);
    if (!seen.insert(program.party).second) {
      throw std::invalid_argument(
          "duplicate program for party " +
          std::string(party_name(program.party)));
    }
    programs[party_index(program.party)] = std::move(program);
  }
  if (seen.size() != 3) {
    for (Party p : kParties) {
      if (seen.count(p) == 0) {
        throw std::invalid_argument("missing program for party " +
                                    std::string(party_name(p)));
      }
    }
  }

  std::set<int> m_values;
  for (const auto& [m, rule] : programs[0].rules) {
    m_values.insert(m);
  }
  for (const PartyProgram& program : programs) {
    std::set<int> own;
    for (const auto& [m, rule] : program.rules) {
      own.insert(m);
    }
    if (own != m_values) {
      throw std::invalid_argument(
          "programs must all cover the same set of m values");
    }
  }
  return programs;
}

}  // namespace procmat
