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

#include "procmat/bounds.hpp"

#include <stdexcept>

namespace procmat {

namespace {

const Winner& winner_at(const GameSpec& game, int m) {
  const auto it = game.winners.find(m);
  if (it == game.winners.end()) {
    throw std::invalid_argument("m=" + std::to_string(m) +
                                " is outside the game");
  }
  return it->second;
}

void require_alphabet(unsigned alphabet) {
  if (alphabet < 2 || alphabet > 4) {
    throw std::invalid_argument(
        "reception alphabet size must be between 2 and 4");
  }
}

void require_m_values(const GameSpec& game) {
  if (game.m_values.empty()) {
    throw std::invalid_argument("game has no m values");
  }
}

nlohmann::json order_to_json(const TotalOrder& order) {
  nlohmann::json names = nlohmann::json::array();
  for (Party p : order.sequence) {
    names.push_back(std::string(party_name(p)));
  }
  return names;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) {
    return std::to_string(r.numerator());
  }
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int TotalOrder::position_of(Party p) const {
  for (int pos = 0; pos < 3; ++pos) {
    if (sequence[pos] == p) {
      return pos;
    }
  }
  throw std::invalid_argument("party not in order");
}

std::array<TotalOrder, 6> all_total_orders() {
  using P = Party;
  return {
      TotalOrder{{P::kA, P::kB, P::kC}}, TotalOrder{{P::kA, P::kC, P::kB}},
      TotalOrder{{P::kB, P::kA, P::kC}}, TotalOrder{{P::kB, P::kC, P::kA}},
      TotalOrder{{P::kC, P::kA, P::kB}}, TotalOrder{{P::kC, P::kB, P::kA}},
  };
}

Rational cell_score(const TotalOrder& order, const GameSpec& game, int m,
                    const CellStrategy& strategy) {
  const Winner& winner = winner_at(game, m);
  require_alphabet(strategy.reception_alphabet);
  if (strategy.target_output.size() != 2 * strategy.reception_alphabet) {
    throw std::invalid_argument(
        "target output table must have 2 * alphabet entries");
  }
  for (unsigned symbol : strategy.reception_second) {
    if (symbol >= strategy.reception_alphabet) {
      throw std::invalid_argument("reception symbol outside the alphabet");
    }
  }
  for (unsigned symbol : strategy.reception_third) {
    if (symbol >= strategy.reception_alphabet) {
      throw std::invalid_argument("reception symbol outside the alphabet");
    }
  }

  const int target_pos = order.position_of(winner.target);
  int wins = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        const int first_free = party_bit(order.sequence[0], a, b, c);
        const int second_free = party_bit(order.sequence[1], a, b, c);
        unsigned received = 0;
        if (target_pos == 1) {
          received = strategy.reception_second[first_free];
        } else if (target_pos == 2) {
          received = strategy.reception_third[first_free + 2 * second_free];
        }
        const int own_free = party_bit(winner.target, a, b, c);
        const int output = strategy.target_output[own_free + 2 * received];
        if (output == winner.predicate(a, b, c)) {
          ++wins;
        }
      }
    }
  }
  return {wins, 8};
}

Rational evaluate_protocol(const ClassicalProtocol& protocol,
                           const GameSpec& game) {
  require_m_values(game);
  Rational sum(0);
  for (int m : game.m_values) {
    const auto it = protocol.per_m.find(m);
    if (it == protocol.per_m.end()) {
      throw std::invalid_argument("protocol has no strategy for m=" +
                                  std::to_string(m));
    }
    sum += cell_score(protocol.order, game, m, it->second);
  }
  return sum / Rational(static_cast<std::int64_t>(game.m_values.size()));
}

CellMax max_success_cell(const TotalOrder& order, const GameSpec& game, int m,
                         unsigned reception_alphabet) {
  require_alphabet(reception_alphabet);
  const Winner& winner = winner_at(game, m);
  const int target_pos = order.position_of(winner.target);

  // Only the reception feeding the target can influence its output; the
  // other reception function is fixed to zero without loss of maximality.
  std::size_t reception_count = 1;
  if (target_pos == 1) {
    reception_count = std::size_t{reception_alphabet} * reception_alphabet;
  } else if (target_pos == 2) {
    reception_count = std::size_t{reception_alphabet} * reception_alphabet *
                      reception_alphabet * reception_alphabet;
  }
  const std::size_t output_count = std::size_t{1} << (2 * reception_alphabet);

  CellMax best;
  best.value = Rational(-1);
  for (std::size_t r = 0; r < reception_count; ++r) {
    CellStrategy candidate;
    candidate.reception_alphabet = reception_alphabet;
    candidate.target_output.assign(2 * reception_alphabet, 0);
    std::size_t digits = r;
    if (target_pos == 1) {
      for (auto& symbol : candidate.reception_second) {
        symbol = static_cast<unsigned>(digits % reception_alphabet);
        digits /= reception_alphabet;
      }
    } else if (target_pos == 2) {
      for (auto& symbol : candidate.reception_third) {
        symbol = static_cast<unsigned>(digits % reception_alphabet);
        digits /= reception_alphabet;
      }
    }
    for (std::size_t g = 0; g < output_count; ++g) {
      for (std::size_t i = 0; i < candidate.target_output.size(); ++i) {
        candidate.target_output[i] = static_cast<int>((g >> i) & 1u);
      }
      const Rational score = cell_score(order, game, m, candidate);
      if (score > best.value) {
        best.value = score;
        best.witness = candidate;
      }
    }
  }
  return best;
}

Rational max_success_at_m(const TotalOrder& order, const GameSpec& game,
                          int m, unsigned reception_alphabet) {
  return max_success_cell(order, game, m, reception_alphabet).value;
}

std::string_view causal_model_name(CausalModel model) {
  switch (model) {
    case CausalModel::kConvex:
      return "convex";
    case CausalModel::kAdaptive:
      return "adaptive";
  }
  throw std::invalid_argument("invalid causal model value");
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json witness;
  if (model == CausalModel::kConvex) {
    witness = nlohmann::json{{"order", order_to_json(witness_order)}};
  } else {
    nlohmann::json orders = nlohmann::json::object();
    for (const auto& [m, order] : witness_orders) {
      orders[std::to_string(m)] = order_to_json(order);
    }
    witness = nlohmann::json{{"first", std::string(party_name(witness_first))},
                             {"orders", std::move(orders)}};
  }
  nlohmann::json per_m = nlohmann::json::object();
  for (const auto& [m, v] : witness_per_m) {
    per_m[std::to_string(m)] = rational_to_string(v);
  }
  return nlohmann::json{
      {"model", std::string(causal_model_name(model))},
      {"game", game},
      {"value", rational_to_string(value)},
      {"witness", std::move(witness)},
      {"per_m", std::move(per_m)},
  };
}

namespace {

/// Fills report.per_m_table with max_success_at_m for every (order, m).
void fill_table(BoundReport& report, const GameSpec& game,
                unsigned reception_alphabet) {
  const auto orders = all_total_orders();
  for (std::size_t k = 0; k < orders.size(); ++k) {
    for (int m : game.m_values) {
      report.per_m_table[k].emplace(
          m, max_success_at_m(orders[k], game, m, reception_alphabet));
    }
  }
}

}  // namespace

BoundReport convex_bound(const GameSpec& game, unsigned reception_alphabet) {
  require_m_values(game);
  require_alphabet(reception_alphabet);

  BoundReport report;
  report.model = CausalModel::kConvex;
  report.game = game.name;
  fill_table(report, game, reception_alphabet);

  const auto orders = all_total_orders();
  const Rational m_count(static_cast<std::int64_t>(game.m_values.size()));
  Rational best(-1);
  std::size_t best_k = 0;
  for (std::size_t k = 0; k < orders.size(); ++k) {
    Rational sum(0);
    for (const auto& [m, v] : report.per_m_table[k]) {
      sum += v;
    }
    const Rational average = sum / m_count;
    if (average > best) {
      best = average;
      best_k = k;
    }
  }
  report.value = best;
  report.witness_order = orders[best_k];
  report.witness_per_m = report.per_m_table[best_k];
  return report;
}

BoundReport adaptive_bound(const GameSpec& game, unsigned reception_alphabet) {
  require_m_values(game);
  require_alphabet(reception_alphabet);

  BoundReport report;
  report.model = CausalModel::kAdaptive;
  report.game = game.name;
  fill_table(report, game, reception_alphabet);

  const auto orders = all_total_orders();
  const Rational m_count(static_cast<std::int64_t>(game.m_values.size()));
  Rational best(-1);
  for (Party first : kParties) {
    // The two orders starting with this party, in enumeration order.
    const std::size_t k0 = 2 * static_cast<std::size_t>(party_index(first));
    const std::size_t k1 = k0 + 1;
    Rational sum(0);
    std::map<int, TotalOrder> chosen;
    std::map<int, Rational> chosen_values;
    for (int m : game.m_values) {
      const Rational v0 = report.per_m_table[k0].at(m);
      const Rational v1 = report.per_m_table[k1].at(m);
      const std::size_t pick = v1 > v0 ? k1 : k0;
      const Rational v = v1 > v0 ? v1 : v0;
      chosen.emplace(m, orders[pick]);
      chosen_values.emplace(m, v);
      sum += v;
    }
    const Rational average = sum / m_count;
    if (average > best) {
      best = average;
      report.witness_first = first;
      report.witness_orders = std::move(chosen);
      report.witness_per_m = std::move(chosen_values);
    }
  }
  report.value = best;
  return report;
}

bool verify_half_or_one(const GameSpec& game, unsigned reception_alphabet) {
  require_m_values(game);
  require_alphabet(reception_alphabet);
  const Rational half(1, 2);
  const Rational one(1);
  for (const TotalOrder& order : all_total_orders()) {
    for (int m : game.m_values) {
      const Rational v = max_success_at_m(order, game, m, reception_alphabet);
      if (v != half && v != one) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace procmat
