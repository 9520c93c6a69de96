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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "procmat/instruments.hpp"
#include "procmat/party.hpp"
#include "procmat/process_matrix.hpp"

namespace procmat {

/// Winning condition at one value of the shared input m: the selected
/// target party must output the predicate of the three free bits.
struct Winner {
  Party target;
  /// Required output bit as a function of the free bits (a, b, c).
  std::function<int(int, int, int)> predicate;
};

/**
 * A tripartite signaling game. Each round, nature draws the shared input m
 * and the parties' free bits uniformly; the game is won if the target party
 * selected by m outputs the required predicate value.
 */
struct GameSpec {
  std::string name;
  std::vector<int> m_values;
  std::map<int, Winner> winners;
};

/// The game on m in {1,2,3}: the party selected by m must output the
/// parity of the other two parties' free bits.
GameSpec all_to_one_game();

/// The game on m in {1,...,6}: m selects an ordered (sender, receiver)
/// pair, and the receiver must output the sender's free bit.
GameSpec selective_game();

/**
 * Joint distribution of the three outcome bits (x, y, z) at fixed shared
 * input and free bits. Entries are >= -1e-10 and sum to 1 within 1e-9
 * whenever produced by joint_distribution.
 */
struct JointDistribution {
  std::array<double, 8> probabilities{};  // index 4x + 2y + z

  double& at(int x, int y, int z) { return probabilities[4 * x + 2 * y + z]; }
  double at(int x, int y, int z) const {
    return probabilities[4 * x + 2 * y + z];
  }
  double sum() const;

  /// Probability that the given party's outcome equals `bit`, summed over
  /// the other two outcomes.
  double marginal(Party p, int bit) const;
};

/**
 * The joint outcome distribution under the probability rule: each entry is
 * the trace of (element_A tensor element_B tensor element_C) times the
 * process matrix, with the three 4x4 instrument elements tensored in party
 * order. Programs must be ordered (A, B, C).
 *
 * Preconditions are enforced: throws std::invalid_argument if w fails
 * validate() or if any program's instrument at (m, free bit) fails
 * is_cptp_sum — normalization is not guaranteed otherwise.
 */
JointDistribution joint_distribution(const ProcessMatrix& w,
                                     const std::array<PartyProgram, 3>& programs,
                                     int m, int a, int b, int c);

/**
 * Probability of winning `game` with the given process matrix and programs,
 * averaged over uniform m and uniform free bits. The target party's success
 * marginal is obtained by summing the joint distribution over the other
 * two outcomes. Preconditions as for joint_distribution (checked once).
 */
double success_probability(const ProcessMatrix& w,
                           const std::array<PartyProgram, 3>& programs,
                           const GameSpec& game);

/// The per-m decomposition of success_probability: each entry is the
/// success marginal at fixed m, averaged over the free bits; the mean of
/// the entries equals success_probability.
std::map<int, double> per_m_scores(const ProcessMatrix& w,
                                   const std::array<PartyProgram, 3>& programs,
                                   const GameSpec& game);

/// {"game":"all-to-one","per_m":{"1":1.0,...},"overall":1.0}
nlohmann::json score_report_json(const GameSpec& game,
                                 const std::map<int, double>& per_m,
                                 double overall);

}  // namespace procmat
