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

#include "procmat/matrix_io.hpp"

#include <fstream>
#include <stdexcept>

namespace procmat {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (const auto& entry : m.entries()) {
    re.push_back(entry.real());
    im.push_back(entry.imag());
  }
  return nlohmann::json{
      {"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") ||
      !j.contains("im")) {
    throw std::invalid_argument(
        "matrix dump must be an object with dim, re and im");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0) {
    throw std::invalid_argument("matrix dim must be a positive integer");
  }
  const auto dim = j["dim"].get<std::size_t>();
  const auto& re = j["re"];
  const auto& im = j["im"];
  if (!re.is_array() || !im.is_array() || re.size() != dim * dim ||
      im.size() != dim * dim) {
    throw std::invalid_argument("re and im must be arrays of dim*dim numbers");
  }
  ComplexMatrix m(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t k = row * dim + col;
      if (!re[k].is_number() || !im[k].is_number()) {
        throw std::invalid_argument("matrix entries must be numbers");
      }
      m(row, col) = {re[k].get<double>(), im[k].get<double>()};
    }
  }
  return m;
}

ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open matrix file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("cannot parse matrix file " + path + ": " +
                             e.what());
  }
  return matrix_from_json(j);
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open file for writing: " + path);
  }
  out << matrix_to_json(m).dump(2) << '\n';
  if (!out) {
    throw std::runtime_error("failed writing matrix file: " + path);
  }
}

}  // namespace procmat
