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

// Microbenchmarks for the hot paths: process-matrix construction and
// validation, the dense eigensolver, the probability rule, the
// operator-basis decomposition, and the exact classical-bound enumeration.

#include <benchmark/benchmark.h>

#include "procmat/bounds.hpp"
#include "procmat/eigenvalues.hpp"
#include "procmat/game.hpp"
#include "procmat/instruments.hpp"
#include "procmat/pauli.hpp"
#include "procmat/process_matrix.hpp"

namespace {

using procmat::canonical_process_matrix;
using procmat::ProcessMatrix;

void BM_CanonicalProcessMatrix(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_process_matrix());
  }
}
BENCHMARK(BM_CanonicalProcessMatrix);

void BM_Validate(benchmark::State& state) {
  const ProcessMatrix w = canonical_process_matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(procmat::validate(w));
  }
}
BENCHMARK(BM_Validate);

void BM_Spectrum(benchmark::State& state) {
  const ProcessMatrix w = canonical_process_matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(procmat::hermitian_eigenvalues(w.matrix()));
  }
}
BENCHMARK(BM_Spectrum);

void BM_PauliDecompose(benchmark::State& state) {
  const ProcessMatrix w = canonical_process_matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(procmat::pauli_decompose(w.matrix()));
  }
}
BENCHMARK(BM_PauliDecompose);

void BM_JointDistribution(benchmark::State& state) {
  const ProcessMatrix w = canonical_process_matrix();
  const auto programs = procmat::all_to_one_strategy();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        procmat::joint_distribution(w, programs, 1, 0, 1, 1));
  }
}
BENCHMARK(BM_JointDistribution);

void BM_SuccessProbability(benchmark::State& state) {
  const ProcessMatrix w = canonical_process_matrix();
  const auto programs = procmat::selective_strategy();
  const procmat::GameSpec game = procmat::selective_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(procmat::success_probability(w, programs, game));
  }
}
BENCHMARK(BM_SuccessProbability);

void BM_MaxSuccessCell(benchmark::State& state) {
  const procmat::GameSpec game = procmat::all_to_one_game();
  const procmat::TotalOrder order{
      {procmat::Party::kB, procmat::Party::kC, procmat::Party::kA}};
  const auto alphabet = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        procmat::max_success_cell(order, game, 1, alphabet));
  }
}
BENCHMARK(BM_MaxSuccessCell)->Arg(2)->Arg(3)->Arg(4);

void BM_ConvexBound(benchmark::State& state) {
  const procmat::GameSpec game = procmat::selective_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(procmat::convex_bound(game));
  }
}
BENCHMARK(BM_ConvexBound);

void BM_AdaptiveBound(benchmark::State& state) {
  const procmat::GameSpec game = procmat::all_to_one_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(procmat::adaptive_bound(game));
  }
}
BENCHMARK(BM_AdaptiveBound);

}  // namespace

BENCHMARK_MAIN();
