// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "qdiscord/entropic.hpp"
#include "qdiscord/geometric.hpp"
#include "qdiscord/xblocks.hpp"

using namespace qdiscord;

namespace {

DensityMatrix extended_x_sample(int d, std::uint64_t seed) {
  ComplexMatrix m = sample_hs_random(2 * d, seed).matrix();
  for (int i = 0; i < 2 * d; ++i) {
    for (int j = 0; j < 2 * d; ++j) {
      const int r = i % d;
      const int c = j % d;
      if (c != r && c != d - 1 - r) m(i, j) = 0.0;
    }
  }
  return DensityMatrix::from_trusted(m, 2, d);
}

void BM_eigen_dense(benchmark::State& state) {
  const auto rho = extended_x_sample(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(rho.matrix()));
}
BENCHMARK(BM_eigen_dense)->Arg(4)->Arg(8)->Arg(16);

void BM_eigen_extended_x(benchmark::State& state) {
  const auto rho = extended_x_sample(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_extended_x_unchecked(rho.matrix()));
}
BENCHMARK(BM_eigen_extended_x)->Arg(4)->Arg(8)->Arg(16);

void BM_conditional_entropy(benchmark::State& state) {
  const auto rho = extended_x_sample(static_cast<int>(state.range(0)), 2);
  const MeasurementAngles a{0.7, 1.3};
  for (auto _ : state) benchmark::DoNotOptimize(conditional_entropy(rho, a));
}
BENCHMARK(BM_conditional_entropy)->Arg(2)->Arg(4)->Arg(16);

void BM_entropic_discord(benchmark::State& state) {
  const auto mode = static_cast<OptimizationMode>(state.range(1));
  const auto rho = project_to_x(sample_hs_random(1 << state.range(0), 3));
  for (auto _ : state) benchmark::DoNotOptimize(entropic_discord(rho, {mode, false}).discord);
}
BENCHMARK(BM_entropic_discord)
    ->Args({2, static_cast<int>(OptimizationMode::Candidate)})
    ->Args({2, static_cast<int>(OptimizationMode::Full)})
    ->Args({3, static_cast<int>(OptimizationMode::Full)})
    ->Unit(benchmark::kMicrosecond);

void BM_geometric_discord(benchmark::State& state) {
  const auto rho = sample_hs_random(2 * static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(geometric_discord(rho).value);
}
BENCHMARK(BM_geometric_discord)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
