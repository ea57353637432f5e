// Copyright 2026 The eframe Authors
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

#include <benchmark/benchmark.h>

#include "eframe/eframe.hpp"

namespace {

using namespace eframe;

// Decaying random maps turn numerically singular past n ~ 30, so use Gram maps.
MatrixMap bench_map(Index n) {
  return gen_matrix({.kind = MatrixKind::Gram, .seed = 1}, n);
}

void BM_ApplyMatrixMapping(benchmark::State& state) {
  const Index n = state.range(0);
  const VectorSequence f = gen_random_frame(n / 2, n, 1);
  const MatrixMap e = bench_map(n);
  for (auto _ : state) benchmark::DoNotOptimize(apply_matrix_mapping(e, f));
}
BENCHMARK(BM_ApplyMatrixMapping)->RangeMultiplier(2)->Range(4, 64);

void BM_SpectralData(benchmark::State& state) {
  const Matrix m = Rng(2).uniform_matrix(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_data(m));
}
BENCHMARK(BM_SpectralData)->RangeMultiplier(2)->Range(4, 64);

void BM_FrameSystem(benchmark::State& state) {
  const Index n = state.range(0);
  const VectorSequence f = gen_random_frame(n / 2, n, 3);
  const MatrixMap e = bench_map(n);
  for (auto _ : state) {
    const EFrameSystem sys(f, e);
    benchmark::DoNotOptimize(sys.spectrum());
  }
}
BENCHMARK(BM_FrameSystem)->RangeMultiplier(2)->Range(4, 64);

void BM_PolarDecompose(benchmark::State& state) {
  const Matrix m = Rng(4).uniform_matrix(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polar_decompose(m));
}
BENCHMARK(BM_PolarDecompose)->RangeMultiplier(2)->Range(2, 32);

void BM_ThreeUnitaryDecomposition(benchmark::State& state) {
  const Index d = state.range(0);
  const EFrameSystem sys(gen_random_frame(d, d, 5), bench_map(d));
  for (auto _ : state) benchmark::DoNotOptimize(three_unitary_decomposition(sys, 0.5));
}
BENCHMARK(BM_ThreeUnitaryDecomposition)->RangeMultiplier(2)->Range(2, 32);

void BM_Campaign(benchmark::State& state) {
  const ExperimentConfig cfg = parse_config(
      R"({"dim":4,"len":6,"trials":50,"seed":1,"matrix":{"kind":"randomhs","rho":0.8}})");
  const std::vector<std::string> verifiers{"thm3", "bessel-id", "ab", "dual"};
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(cfg, verifiers, 1));
}
BENCHMARK(BM_Campaign)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
