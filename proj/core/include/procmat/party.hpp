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
#include <string_view>

namespace procmat {

/// The three parties. Their laboratories own the tensor factors in the
/// fixed global order (A in, A out, B in, B out, C in, C out).
enum class Party { kA = 0, kB = 1, kC = 2 };

inline constexpr std::array<Party, 3> kParties = {Party::kA, Party::kB,
                                                  Party::kC};

/// "A", "B" or "C".
std::string_view party_name(Party p);

/// Inverse of party_name; throws std::invalid_argument on anything else.
Party party_from_name(std::string_view name);

/// 0, 1 or 2, matching the enum value and the factor-pair position.
inline constexpr int party_index(Party p) { return static_cast<int>(p); }

/// Picks the party's entry from per-party bits given in (A, B, C) order.
inline constexpr int party_bit(Party p, int a, int b, int c) {
  return p == Party::kA ? a : (p == Party::kB ? b : c);
}

}  // namespace procmat
