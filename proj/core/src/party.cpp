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

#include "procmat/party.hpp"

#include <stdexcept>
#include <string>

namespace procmat {

std::string_view party_name(Party p) {
  switch (p) {
    case Party::kA:
      return "A";
    case Party::kB:
      return "B";
    case Party::kC:
      return "C";
  }
  throw std::invalid_argument("invalid party value");
}

Party party_from_name(std::string_view name) {
  if (name == "A") return Party::kA;
  if (name == "B") return Party::kB;
  if (name == "C") return Party::kC;
  throw std::invalid_argument("unknown party name: " + std::string(name));
}

}  // namespace procmat
