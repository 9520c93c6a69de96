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

// Command-line surface for the process-matrix framework: validate candidate
// process matrices, evaluate the two signaling games, inspect the spectrum,
// and compute the exact classical causal-order bounds.
//
// Exit status: 0 on success, 1 when an invoked check fails (e.g. a matrix
// fails validation), 2 on usage or file errors.

#include <cstdio>
#include <exception>
#include <fstream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "procmat/bounds.hpp"
#include "procmat/eigenvalues.hpp"
#include "procmat/game.hpp"
#include "procmat/instruments.hpp"
#include "procmat/matrix_io.hpp"
#include "procmat/process_matrix.hpp"

namespace {

using procmat::GameSpec;
using procmat::PartyProgram;
using procmat::ProcessMatrix;

GameSpec game_by_name(const std::string& name) {
  if (name == "all-to-one") {
    return procmat::all_to_one_game();
  }
  if (name == "selective") {
    return procmat::selective_game();
  }
  throw std::invalid_argument("unknown game: " + name);
}

std::array<PartyProgram, 3> builtin_strategy(const std::string& game_name) {
  return game_name == "all-to-one" ? procmat::all_to_one_strategy()
                                   : procmat::selective_strategy();
}

/**
 * Loads three party programs from a strategy JSON file and rejects any
 * whose instruments are not completely positive and trace-preserving in
 * sum, naming the offending (party, m).
 */
std::array<PartyProgram, 3> parse_strategy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open strategy file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("cannot parse strategy file " + path + ": " +
                             e.what());
  }
  auto programs = procmat::programs_from_json(j);
  for (const PartyProgram& program : programs) {
    for (const auto& [m, rule] : program.rules) {
      for (int free_bit = 0; free_bit < 2; ++free_bit) {
        const procmat::Instrument inst =
            procmat::instrument_for(program, m, free_bit);
        if (!procmat::is_cp(inst) || !procmat::is_cptp_sum(inst)) {
          throw std::runtime_error(
              fmt::format("program for party {} at m={} is not CPTP",
                          procmat::party_name(program.party), m));
        }
      }
    }
  }
  return programs;
}

void require_matching_m_values(const std::array<PartyProgram, 3>& programs,
                               const GameSpec& game) {
  std::set<int> covered;
  for (const auto& [m, rule] : programs[0].rules) {
    covered.insert(m);
  }
  const std::set<int> wanted(game.m_values.begin(), game.m_values.end());
  if (covered != wanted) {
    throw std::runtime_error(
        "strategy file m values do not match the selected game");
  }
}

int run_validate(const std::string& w_file, double tol,
                 const std::string& output) {
  ProcessMatrix w = w_file.empty()
                        ? procmat::canonical_process_matrix()
                        : ProcessMatrix(procmat::load_matrix(w_file));
  const procmat::ValidityReport report = procmat::validate(w, tol);
  if (output == "json") {
    fmt::print("{}\n", report.to_json().dump(2));
  } else {
    fmt::print("psd_ok: {} (min eigenvalue {})\n", report.psd_ok,
               report.min_eigenvalue);
    fmt::print("trace_ok: {} (trace {}, expected {})\n", report.trace_ok,
               report.trace_value, report.expected_trace);
    fmt::print("terms_ok: {}", report.terms_ok);
    if (!report.offending_words.empty()) {
      fmt::print(" (offending:");
      for (const auto& word : report.offending_words) {
        fmt::print(" {}", word.str());
      }
      fmt::print(")");
    }
    fmt::print("\noverall: {}\n", report.overall);
  }
  return report.overall ? 0 : 1;
}

int run_play(const std::string& game_name, const std::string& strategy_file,
             const std::string& output) {
  const GameSpec game = game_by_name(game_name);
  const auto programs = strategy_file.empty()
                            ? builtin_strategy(game_name)
                            : parse_strategy_file(strategy_file);
  require_matching_m_values(programs, game);

  const ProcessMatrix w = procmat::canonical_process_matrix();
  const auto per_m = procmat::per_m_scores(w, programs, game);
  double overall = 0.0;
  for (const auto& [m, score] : per_m) {
    overall += score;
  }
  overall /= static_cast<double>(per_m.size());

  if (output == "json") {
    fmt::print("{}\n", procmat::score_report_json(game, per_m, overall).dump(2));
  } else {
    fmt::print("game: {}\n", game.name);
    for (const auto& [m, score] : per_m) {
      fmt::print("m={}: {}\n", m, score);
    }
    fmt::print("overall: {}\n", overall);
  }
  return 0;
}

int run_bounds(const std::string& game_name, const std::string& model,
               const std::string& output) {
  const GameSpec game = game_by_name(game_name);
  const procmat::BoundReport report = model == "convex"
                                          ? procmat::convex_bound(game)
                                          : procmat::adaptive_bound(game);
  if (output == "json") {
    fmt::print("{}\n", report.to_json().dump(2));
  } else {
    fmt::print("model: {}\n", procmat::causal_model_name(report.model));
    fmt::print("game: {}\n", report.game);
    fmt::print("value: {}\n", procmat::rational_to_string(report.value));
    if (report.model == procmat::CausalModel::kConvex) {
      fmt::print("witness order:");
      for (procmat::Party p : report.witness_order.sequence) {
        fmt::print(" {}", procmat::party_name(p));
      }
      fmt::print("\n");
    } else {
      fmt::print("witness first party: {}\n",
                 procmat::party_name(report.witness_first));
      for (const auto& [m, order] : report.witness_orders) {
        fmt::print("m={} order:", m);
        for (procmat::Party p : order.sequence) {
          fmt::print(" {}", procmat::party_name(p));
        }
        fmt::print("\n");
      }
    }
    for (const auto& [m, value] : report.witness_per_m) {
      fmt::print("m={}: {}\n", m, procmat::rational_to_string(value));
    }
  }
  return 0;
}

int run_spectrum(const std::string& output) {
  const ProcessMatrix w = procmat::canonical_process_matrix();
  const auto eigenvalues = procmat::hermitian_eigenvalues(w.matrix());
  if (output == "json") {
    nlohmann::json j{{"dim", w.matrix().dim()}, {"eigenvalues", eigenvalues}};
    fmt::print("{}\n", j.dump(2));
  } else {
    for (double v : eigenvalues) {
      fmt::print("{}\n", v);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Tripartite process-matrix toolkit: signaling games beyond any "
      "predefined causal order"};
  app.require_subcommand(1);

  std::string output = "text";
  std::string w_file;
  std::string strategy_file;
  std::string game_name;
  std::string model;
  double tol = 1e-9;

  const auto output_check = CLI::IsMember({"text", "json"});
  const auto game_check = CLI::IsMember({"all-to-one", "selective"});

  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "Check the three process-matrix validity conditions");
  validate_cmd->add_option("--w-file", w_file,
                           "Matrix dump (JSON) to check instead of the "
                           "built-in process matrix");
  validate_cmd->add_option("--tol", tol, "Absolute tolerance for the checks")
      ->capture_default_str();
  validate_cmd->add_option("--output", output, "Report format")
      ->capture_default_str()
      ->check(output_check);

  CLI::App* play_cmd = app.add_subcommand(
      "play", "Evaluate a signaling game under the probability rule");
  play_cmd->add_option("--game", game_name, "Which game to play")
      ->required()
      ->check(game_check);
  play_cmd->add_option("--strategy-file", strategy_file,
                       "Party programs (JSON) replacing the built-in tables");
  play_cmd->add_option("--output", output, "Report format")
      ->capture_default_str()
      ->check(output_check);

  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "Compute the exact classical causal-order bound");
  bounds_cmd->add_option("--game", game_name, "Which game to bound")
      ->required()
      ->check(game_check);
  bounds_cmd->add_option("--model", model, "Causal-order model")
      ->required()
      ->check(CLI::IsMember({"convex", "adaptive"}));
  bounds_cmd->add_option("--output", output, "Report format")
      ->capture_default_str()
      ->check(output_check);

  CLI::App* spectrum_cmd = app.add_subcommand(
      "spectrum", "Print the sorted eigenvalues of the process matrix");
  spectrum_cmd->add_option("--output", output, "Report format")
      ->capture_default_str()
      ->check(output_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      return run_validate(w_file, tol, output);
    }
    if (play_cmd->parsed()) {
      return run_play(game_name, strategy_file, output);
    }
    if (bounds_cmd->parsed()) {
      return run_bounds(game_name, model, output);
    }
    return run_spectrum(output);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
