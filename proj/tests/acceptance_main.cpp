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

// Acceptance gate for the library: nine end-to-end checks, one PASS/FAIL
// line each, nonzero exit status if any check fails. Each check states the
// tolerance it enforces; the classical-bound comparisons are exact.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include "procmat/bounds.hpp"
#include "procmat/eigenvalues.hpp"
#include "procmat/game.hpp"
#include "procmat/instruments.hpp"
#include "procmat/matrix.hpp"
#include "procmat/pauli.hpp"
#include "procmat/process_matrix.hpp"

namespace {

using procmat::all_to_one_game;
using procmat::all_to_one_strategy;
using procmat::canonical_process_matrix;
using procmat::ComplexMatrix;
using procmat::GameSpec;
using procmat::JointDistribution;
using procmat::PartyProgram;
using procmat::ProcessMatrix;
using procmat::Rational;
using procmat::selective_game;
using procmat::selective_strategy;

using Clock = std::chrono::steady_clock;

bool g_all_passed = true;

void report(const std::string& name, bool passed, const std::string& detail) {
  std::printf("%s %s (%s)\n", passed ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  g_all_passed = g_all_passed && passed;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Criterion 1: the canonical process matrix satisfies all three validity
/// conditions, with the stated slack on each, in under a second.
void check_validity() {
  const auto start = Clock::now();
  const ProcessMatrix w = canonical_process_matrix();
  const procmat::ValidityReport r = procmat::validate(w);
  const double elapsed = seconds_since(start);

  const bool passed = r.psd_ok && r.min_eigenvalue >= -1e-10 && r.trace_ok &&
                      std::abs(r.trace_value - 8.0) <= 1e-10 && r.terms_ok &&
                      r.offending_words.empty() && r.overall &&
                      elapsed < 1.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "overall=%s min_eigenvalue=%.3e trace=%.12f in %.3fs",
                r.overall ? "true" : "false", r.min_eigenvalue, r.trace_value,
                elapsed);
  report("1-validity", passed, detail);
}

/// Criterion 2: identity plus the three correlation terms has eigenvalues
/// 0 (x48) and 4 (x16) within 1e-8.
void check_spectrum() {
  ComplexMatrix sum = ComplexMatrix::identity(64);
  for (const ComplexMatrix& term : procmat::process_matrix_terms()) {
    sum += term;
  }
  const std::vector<double> eigs = procmat::hermitian_eigenvalues(sum);

  int zeros = 0;
  int fours = 0;
  for (const double value : eigs) {
    zeros += std::abs(value) <= 1e-8;
    fours += std::abs(value - 4.0) <= 1e-8;
  }
  const bool passed = eigs.size() == 64 && zeros == 48 && fours == 16;
  char detail[96];
  std::snprintf(detail, sizeof(detail),
                "48 eigenvalues at 0, 16 at 4: got %d and %d (tol 1e-8)",
                zeros, fours);
  report("2-spectrum", passed, detail);
}

/// Criterion 3: the four published closed-form joint distributions are
/// reproduced entry by entry within 1e-12.
void check_closed_forms() {
  const ProcessMatrix w = canonical_process_matrix();
  double worst = 0.0;

  // Each case: (game, programs, m, sign exponent as a function of the
  // outcome bits x,y,z and free bits a,b,c).
  using Exponent = int (*)(int, int, int, int, int, int);
  struct Case {
    const GameSpec game;
    const std::array<PartyProgram, 3> programs;
    int m;
    Exponent exponent;
  };
  const Case cases[] = {
      {all_to_one_game(), all_to_one_strategy(), 1,
       [](int x, int, int, int, int b, int c) { return x + b + c; }},
      {all_to_one_game(), all_to_one_strategy(), 2,
       [](int, int y, int, int a, int, int c) { return a + y + c; }},
      {all_to_one_game(), all_to_one_strategy(), 3,
       [](int, int, int z, int a, int b, int) { return a + b + z; }},
      {selective_game(), selective_strategy(), 1,
       [](int, int y, int, int a, int, int) { return a + y; }},
  };

  for (const Case& c : cases) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int free_c = 0; free_c < 2; ++free_c) {
          const JointDistribution joint =
              procmat::joint_distribution(w, c.programs, c.m, a, b, free_c);
          for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
              for (int z = 0; z < 2; ++z) {
                const int s = c.exponent(x, y, z, a, b, free_c);
                const double expected = (1.0 + (s % 2 == 0 ? 1.0 : -1.0)) / 8.0;
                worst = std::max(worst,
                                 std::abs(joint.at(x, y, z) - expected));
              }
            }
          }
        }
      }
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail),
                "max deviation %.3e from the stated forms (tol 1e-12)", worst);
  report("3-closed-forms", worst <= 1e-12, detail);
}

/// Criterion 4: both built-in strategies win their game with probability 1
/// within 1e-9, at every m and overall.
void check_perfect_wins() {
  const ProcessMatrix w = canonical_process_matrix();
  double worst = 0.0;
  for (const auto& [game, programs] :
       {std::pair{all_to_one_game(), all_to_one_strategy()},
        std::pair{selective_game(), selective_strategy()}}) {
    const std::map<int, double> scores =
        procmat::per_m_scores(w, programs, game);
    for (const auto& [m, score] : scores) {
      worst = std::max(worst, std::abs(score - 1.0));
    }
    const double overall = procmat::success_probability(w, programs, game);
    worst = std::max(worst, std::abs(overall - 1.0));
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail),
                "max deviation from 1 over 9 per-m scores: %.3e (tol 1e-9)",
                worst);
  report("4-perfect-wins", worst <= 1e-9, detail);
}

/// Criterion 5: the four classical bounds, by full enumeration in exact
/// rational arithmetic, in under 30 seconds.
void check_classical_bounds(std::map<std::string, Rational>* bounds_out) {
  const auto start = Clock::now();
  const Rational convex_all = procmat::convex_bound(all_to_one_game()).value;
  const Rational adaptive_all =
      procmat::adaptive_bound(all_to_one_game()).value;
  const Rational convex_sel = procmat::convex_bound(selective_game()).value;
  const Rational adaptive_sel =
      procmat::adaptive_bound(selective_game()).value;
  const double elapsed = seconds_since(start);

  (*bounds_out)["all-to-one/convex"] = convex_all;
  (*bounds_out)["all-to-one/adaptive"] = adaptive_all;
  (*bounds_out)["selective/convex"] = convex_sel;
  (*bounds_out)["selective/adaptive"] = adaptive_sel;

  const bool passed =
      convex_all == Rational(2, 3) && adaptive_all == Rational(5, 6) &&
      convex_sel == Rational(3, 4) && adaptive_sel == Rational(5, 6) &&
      elapsed < 30.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%s, %s, %s, %s (want 2/3, 5/6, 3/4, 5/6, exact) in %.3fs",
                procmat::rational_to_string(convex_all).c_str(),
                procmat::rational_to_string(adaptive_all).c_str(),
                procmat::rational_to_string(convex_sel).c_str(),
                procmat::rational_to_string(adaptive_sel).c_str(), elapsed);
  report("5-classical-bounds", passed, detail);
}

/// Criterion 6: every single-cell classical maximum is exactly 1/2 or 1.
void check_half_or_one() {
  const bool all_to_one_ok = procmat::verify_half_or_one(all_to_one_game());
  const bool selective_ok = procmat::verify_half_or_one(selective_game());
  char detail[96];
  std::snprintf(detail, sizeof(detail), "all-to-one: %s, selective: %s",
                all_to_one_ok ? "true" : "false",
                selective_ok ? "true" : "false");
  report("6-half-or-one", all_to_one_ok && selective_ok, detail);
}

/// Criterion 7: all 27 (party, m) instrument families from the two
/// strategy tables are completely positive with trace-preserving sums.
void check_cptp_families() {
  int families = 0;
  int good = 0;
  for (const auto& programs : {all_to_one_strategy(), selective_strategy()}) {
    for (const PartyProgram& program : programs) {
      for (const auto& [m, rule] : program.rules) {
        ++families;
        bool family_ok = true;
        for (const int free_bit : {0, 1}) {
          const procmat::Instrument inst =
              procmat::instrument_for(program, m, free_bit);
          family_ok = family_ok && procmat::is_cp(inst) &&
                      procmat::is_cptp_sum(inst);
        }
        good += family_ok;
      }
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail),
                "%d of %d families CP with CPTP sum (want 27 of 27)", good,
                families);
  report("7-cptp-families", families == 27 && good == 27, detail);
}

/// Runs the command-line tool, capturing stdout; returns the exit code.
int run_cli(const std::string& args, std::string* out) {
  const std::string command =
      std::string(PROCMAT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    return -1;
  }
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    out->append(buffer, n);
  }
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

/// Criterion 8: one CLI game evaluation per game strictly beats every
/// classical bound for that game.
void check_violation_exhibit(const std::map<std::string, Rational>& bounds) {
  bool passed = true;
  std::string detail;
  for (const std::string game : {"all-to-one", "selective"}) {
    std::string out;
    const int code = run_cli("play --game " + game + " --output json", &out);
    double overall = -1.0;
    if (code == 0) {
      try {
        overall = nlohmann::json::parse(out).at("overall").get<double>();
      } catch (const std::exception&) {
        passed = false;
      }
    } else {
      passed = false;
    }
    for (const std::string model : {"convex", "adaptive"}) {
      const Rational bound = bounds.at(game + "/" + model);
      const double bound_value = boost::rational_cast<double>(bound);
      passed = passed && overall > bound_value;
    }
    char piece[96];
    std::snprintf(piece, sizeof(piece), "%s%s: quantum %.9f > %s and %s",
                  detail.empty() ? "" : "; ", game.c_str(), overall,
                  procmat::rational_to_string(bounds.at(game + "/convex"))
                      .c_str(),
                  procmat::rational_to_string(bounds.at(game + "/adaptive"))
                      .c_str());
    detail += piece;
  }
  report("8-violation-exhibit", passed, detail);
}

/// Criterion 9: three property suites — operator-basis round-trips,
/// eigenvalue sums against traces, and joint-distribution normalization
/// for random program triples.
void check_property_suites() {
  std::mt19937_64 rng(20260818);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  const auto random_hermitian = [&rng, &u](std::size_t dim) {
    ComplexMatrix raw(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        raw(i, j) = {u(rng), u(rng)};
      }
    }
    ComplexMatrix m = raw;
    m += raw.adjoint();
    m *= 0.5;
    return m;
  };

  // Every Pauli word has exactly one nonzero per row; tabulate them once so
  // a hundred reconstructions stay cheap.
  struct RowEntry {
    unsigned char col;
    std::complex<double> value;
  };
  std::vector<std::array<RowEntry, 64>> sparse_words(4096);
  for (std::size_t index = 0; index < 4096; ++index) {
    const ComplexMatrix p =
        procmat::word_to_matrix(procmat::PauliWord::from_index(index));
    for (std::size_t row = 0; row < 64; ++row) {
      for (std::size_t col = 0; col < 64; ++col) {
        if (p(row, col) != std::complex<double>(0.0, 0.0)) {
          sparse_words[index][row] = {static_cast<unsigned char>(col),
                                      p(row, col)};
          break;
        }
      }
    }
  }

  double worst_roundtrip = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix m = random_hermitian(64);
    const auto coefficients = procmat::pauli_decompose(m);
    ComplexMatrix rebuilt(64);
    for (const auto& [word, coefficient] : coefficients) {
      const auto& rows = sparse_words[word.index()];
      for (std::size_t row = 0; row < 64; ++row) {
        rebuilt(row, rows[row].col) += coefficient * rows[row].value;
      }
    }
    worst_roundtrip = std::max(worst_roundtrip, rebuilt.max_abs_diff(m));
  }
  const bool roundtrip_ok = worst_roundtrip <= 1e-10;

  double worst_trace_gap = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix m = random_hermitian(64);
    const std::vector<double> eigs = procmat::hermitian_eigenvalues(m);
    double sum = 0.0;
    for (const double value : eigs) {
      sum += value;
    }
    worst_trace_gap =
        std::max(worst_trace_gap, std::abs(sum - trace(m).real()));
  }
  const bool trace_ok = worst_trace_gap <= 1e-8;

  const ProcessMatrix w = canonical_process_matrix();
  std::uniform_int_distribution<int> axis_pick(0, 2);
  std::uniform_int_distribution<int> reprep_pick(0, 4);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> m_pick(1, 3);
  double worst_normalization = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::array<PartyProgram, 3> programs;
    for (std::size_t i = 0; i < 3; ++i) {
      programs[i].party = procmat::kParties[i];
      for (int m = 1; m <= 3; ++m) {
        programs[i].rules[m] = procmat::ProgramRule{
            static_cast<procmat::Axis>(axis_pick(rng)),
            static_cast<procmat::BitFunction>(reprep_pick(rng))};
      }
    }
    const JointDistribution joint = procmat::joint_distribution(
        w, programs, m_pick(rng), bit(rng), bit(rng), bit(rng));
    worst_normalization =
        std::max(worst_normalization, std::abs(joint.sum() - 1.0));
  }
  const bool normalization_ok = worst_normalization <= 1e-9;

  char detail[192];
  std::snprintf(detail, sizeof(detail),
                "100 round-trips max %.3e (tol 1e-10); 10 eigensum gaps max "
                "%.3e (tol 1e-8); 50 normalizations max %.3e (tol 1e-9)",
                worst_roundtrip, worst_trace_gap, worst_normalization);
  report("9-property-suites", roundtrip_ok && trace_ok && normalization_ok,
         detail);
}

}  // namespace

int main() {
  check_validity();
  check_spectrum();
  check_closed_forms();
  check_perfect_wins();
  std::map<std::string, Rational> bounds;
  check_classical_bounds(&bounds);
  check_half_or_one();
  check_cptp_families();
  check_violation_exhibit(bounds);
  check_property_suites();
  return g_all_passed ? 0 : 1;
}
