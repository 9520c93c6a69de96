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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include "procmat/game.hpp"
#include "procmat/party.hpp"

namespace procmat {

/// Exact arithmetic for classical bounds; no floating point appears in any
/// BoundReport.
using Rational = boost::rational<std::int64_t>;

/// "2/3" for proper fractions, "1" for integers.
std::string rational_to_string(const Rational& r);

/// A definite causal order of the three laboratories, first to last.
struct TotalOrder {
  std::array<Party, 3> sequence;

  /// 0-based position of the party in the order.
  int position_of(Party p) const;

  auto operator<=>(const TotalOrder&) const = default;
};

/// All six total orders, lexicographic from (A,B,C) to (C,B,A).
std::array<TotalOrder, 6> all_total_orders();

/**
 * A deterministic classical strategy for one value of the shared input m
 * under a fixed causal order, within the closed-laboratory model: each
 * party's laboratory opens once, so each party past the first receives a
 * single classical symbol (a bit, unless a larger reception alphabet is
 * configured for experiments).
 *
 * Tables are indexed by their argument bits packed little-endian (first
 * argument = bit 0). Only the functions feeding the target party influence
 * the score; the others are left zero.
 */
struct CellStrategy {
  unsigned reception_alphabet = 2;
  /// Symbol received by the party in position 2, per free bit of the
  /// position-1 party.
  std::array<unsigned, 2> reception_second{};
  /// Symbol received by the party in position 3, per (free bit of position
  /// 1) + 2 * (free bit of position 2).
  std::array<unsigned, 4> reception_third{};
  /// Target party's output bit, indexed by (own free bit) + 2 * (received
  /// symbol); size 2 * reception_alphabet.
  std::vector<int> target_output;
};

/// A full deterministic protocol: one causal order plus a per-m strategy.
struct ClassicalProtocol {
  TotalOrder order;
  std::map<int, CellStrategy> per_m;
};

/// Fraction of the 8 free-bit assignments on which the strategy's target
/// output matches the game's predicate at fixed m.
Rational cell_score(const TotalOrder& order, const GameSpec& game, int m,
                    const CellStrategy& strategy);

/// Uniform average of cell_score over the game's m values; throws
/// std::invalid_argument if the protocol misses one.
Rational evaluate_protocol(const ClassicalProtocol& protocol,
                           const GameSpec& game);

/// Value together with a strategy attaining it.
struct CellMax {
  Rational value;
  CellStrategy witness;
};

/**
 * Exact maximum of cell_score over all deterministic strategies for the
 * given order and m, by exhaustive enumeration of the reception function
 * feeding the target and the target's output table. Throws
 * std::invalid_argument for m outside the game or an alphabet size
 * outside [2, 4].
 */
CellMax max_success_cell(const TotalOrder& order, const GameSpec& game, int m,
                         unsigned reception_alphabet = 2);

/// The value of max_success_cell.
Rational max_success_at_m(const TotalOrder& order, const GameSpec& game,
                          int m, unsigned reception_alphabet = 2);

/// The two flavors of definite causal order the bounds are computed for:
/// a fixed (convex mixture of) order(s), or an order where the first party
/// chooses how the remaining two are arranged per round.
enum class CausalModel { kConvex, kAdaptive };

/// "convex" or "adaptive".
std::string_view causal_model_name(CausalModel model);

/**
 * The exact classical bound for one game and model, with the witnessing
 * order(s) and the full per-(order, m) achievability table.
 */
struct BoundReport {
  CausalModel model;
  std::string game;
  Rational value;

  /// per_m_table[k] holds the per-m maxima for all_total_orders()[k].
  std::array<std::map<int, Rational>, 6> per_m_table;

  /// Convex witness: the best single order.
  TotalOrder witness_order{};
  /// Adaptive witness: the best first party and the order chosen per m.
  Party witness_first = Party::kA;
  std::map<int, TotalOrder> witness_orders;

  /// Per-m values the witness attains; the model's aggregation of these
  /// equals `value`.
  std::map<int, Rational> witness_per_m;

  /// {"model":"convex","game":"all-to-one","value":"2/3",
  ///  "witness":{"order":["B","C","A"]},"per_m":{"1":"1","2":"1/2",...}}
  /// (adaptive witness: {"first":"A","orders":{"1":["A","B","C"],...}}).
  nlohmann::json to_json() const;
};

/// Maximum over the six total orders of the uniform per-m average of
/// max_success_at_m; ties go to the lexicographically first order.
BoundReport convex_bound(const GameSpec& game,
                         unsigned reception_alphabet = 2);

/// Maximum over the choice of first party of the uniform per-m average of
/// the better of the two orders starting with that party.
BoundReport adaptive_bound(const GameSpec& game,
                           unsigned reception_alphabet = 2);

/// True iff max_success_at_m lies in {1/2, 1} for every (order, m) pair —
/// the structure behind the published bound arguments.
bool verify_half_or_one(const GameSpec& game, unsigned reception_alphabet = 2);

}  // namespace procmat
