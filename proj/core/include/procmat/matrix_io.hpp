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

#include <string>

#include <nlohmann/json.hpp>

#include "procmat/matrix.hpp"

namespace procmat {

/// Dump format: {"dim": n, "re": [row-major reals], "im": [row-major reals]}.
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Inverse of matrix_to_json. Throws std::invalid_argument on a malformed
/// object (missing keys, wrong types, or array lengths != dim*dim).
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Reads a matrix dump from a JSON file. Throws std::runtime_error if the
/// file cannot be opened or parsed, std::invalid_argument on bad contents.
ComplexMatrix load_matrix(const std::string& path);

/// Writes the dump format to a file. Throws std::runtime_error on I/O error.
void save_matrix(const std::string& path, const ComplexMatrix& m);

}  // namespace procmat
