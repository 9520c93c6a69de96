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

#include "procmat/game.hpp"

#include <stdexcept>
#include <string>

namespace procmat {

namespace {

const ComplexMatrix& element_for_outcome(const Instrument& inst, int outcome) {
  for (const auto& [o, element] : inst.elements) {
    if (o == outcome) {
      return element;
    }
  }
  throw std::out_of_range("instrument has no element for outcome " +
                          std::to_string(outcome));
}

void require_cptp(const Instrument& inst, Party party, int m) {
  if (!is_cptp_sum(inst)) {
    throw std::invalid_argument(
        "program for party " + std::string(party_name(party)) +
        " is not trace-preserving at m=" + std::to_string(m));
  }
}

/// The probability rule with preconditions already established.
JointDistribution joint_from_instruments(const ProcessMatrix& w,
                                         const Instrument& inst_a,
                                         const Instrument& inst_b,
                                         const Instrument& inst_c) {
  JointDistribution dist;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        const ComplexMatrix product = tensor({element_for_outcome(inst_a, x),
                                              element_for_outcome(inst_b, y),
                                              element_for_outcome(inst_c, z)});
        dist.at(x, y, z) = trace_of_product(product, w.matrix()).real();
      }
    }
  }
  return dist;
}

void require_valid(const ProcessMatrix& w) {
  if (!validate(w).overall) {
    throw std::invalid_argument(
        "process matrix fails the validity conditions");
  }
}

/**
 * Success marginal at fixed m, averaged over the 8 free-bit assignments.
 * The process matrix is assumed valid; instruments are checked here.
 */
double score_at_m(const ProcessMatrix& w,
                  const std::array<PartyProgram, 3>& programs,
                  const GameSpec& game, int m) {
  const auto it = game.winners.find(m);
  if (it == game.winners.end()) {
    throw std::invalid_argument("game has no winner for m=" +
                                std::to_string(m));
  }
  const Winner& winner = it->second;
  double total = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        const Instrument inst_a = instrument_for(programs[0], m, a);
        const Instrument inst_b = instrument_for(programs[1], m, b);
        const Instrument inst_c = instrument_for(programs[2], m, c);
        require_cptp(inst_a, Party::kA, m);
        require_cptp(inst_b, Party::kB, m);
        require_cptp(inst_c, Party::kC, m);
        const JointDistribution dist =
            joint_from_instruments(w, inst_a, inst_b, inst_c);
        total += dist.marginal(winner.target, winner.predicate(a, b, c));
      }
    }
  }
  return total / 8.0;
}

}  // namespace

GameSpec all_to_one_game() {
  GameSpec game;
  game.name = "all-to-one";
  game.m_values = {1, 2, 3};
  game.winners.emplace(
      1, Winner{Party::kA, [](int, int b, int c) { return b ^ c; }});
  game.winners.emplace(
      2, Winner{Party::kB, [](int a, int, int c) { return a ^ c; }});
  game.winners.emplace(
      3, Winner{Party::kC, [](int a, int b, int) { return a ^ b; }});
  return game;
}

GameSpec selective_game() {
  GameSpec game;
  game.name = "selective";
  game.m_values = {1, 2, 3, 4, 5, 6};
  // m picks the ordered (sender, receiver) pairs (A,B), (A,C), (B,A),
  // (B,C), (C,A), (C,B) in turn; the receiver must output the sender's bit.
  game.winners.emplace(
      1, Winner{Party::kB, [](int a, int, int) { return a; }});
  game.winners.emplace(
      2, Winner{Party::kC, [](int a, int, int) { return a; }});
  game.winners.emplace(
      3, Winner{Party::kA, [](int, int b, int) { return b; }});
  game.winners.emplace(
      4, Winner{Party::kC, [](int, int b, int) { return b; }});
  game.winners.emplace(
      5, Winner{Party::kA, [](int, int, int c) { return c; }});
  game.winners.emplace(
      6, Winner{Party::kB, [](int, int, int c) { return c; }});
  return game;
}

double JointDistribution::sum() const {
  double total = 0.0;
  for (double p : probabilities) {
    total += p;
  }
  return total;
}

double JointDistribution::marginal(Party p, int bit) const {
  double total = 0.0;
  for (int idx = 0; idx < 8; ++idx) {
    const int outcome = (idx >> (2 - party_index(p))) & 1;
    if (outcome == bit) {
      total += probabilities[idx];
    }
  }
  return total;
}

JointDistribution joint_distribution(const ProcessMatrix& w,
                                     const std::array<PartyProgram, 3>& programs,
                                     int m, int a, int b, int c) {
  require_valid(w);
  const Instrument inst_a = instrument_for(programs[0], m, a);
  const Instrument inst_b = instrument_for(programs[1], m, b);
  const Instrument inst_c = instrument_for(programs[2], m, c);
  require_cptp(inst_a, Party::kA, m);
  require_cptp(inst_b, Party::kB, m);
  require_cptp(inst_c, Party::kC, m);
  return joint_from_instruments(w, inst_a, inst_b, inst_c);
}

double success_probability(const ProcessMatrix& w,
                           const std::array<PartyProgram, 3>& programs,
                           const GameSpec& game) {
  const auto scores = per_m_scores(w, programs, game);
  double total = 0.0;
  for (const auto& [m, score] : scores) {
    total += score;
  }
  return total / static_cast<double>(scores.size());
}

std::map<int, double> per_m_scores(const ProcessMatrix& w,
                                   const std::array<PartyProgram, 3>& programs,
                                   const GameSpec& game) {
  require_valid(w);
  if (game.m_values.empty()) {
    throw std::invalid_argument("game has no m values");
  }
  std::map<int, double> scores;
  for (int m : game.m_values) {
    scores.emplace(m, score_at_m(w, programs, game, m));
  }
  return scores;
}

nlohmann::json score_report_json(const GameSpec& game,
                                 const std::map<int, double>& per_m,
                                 double overall) {
  nlohmann::json per_m_json = nlohmann::json::object();
  for (const auto& [m, score] : per_m) {
    per_m_json[std::to_string(m)] = score;
  }
  return nlohmann::json{
      {"game", game.name}, {"per_m", std::move(per_m_json)}, {"overall", overall}};
}

}  // namespace procmat
