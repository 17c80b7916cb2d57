// Copyright 2026 The sicprob Authors
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

#include "sicprob/random.hpp"
#include "sicprob/repr.hpp"
#include "sicprob/sic.hpp"

namespace sicprob {
namespace {

void BM_FramePotentialError(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Engine rng(1);
  const Fiducial f = Fiducial::from_amplitudes(random_pure_state(d, rng));
  for (auto _ : state) benchmark::DoNotOptimize(frame_potential_error(f));
}
BENCHMARK(BM_FramePotentialError)->DenseRange(2, 8, 2);

void BM_FindFiducial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_fiducial(d, 1, 8, 1e-12));
}
BENCHMARK(BM_FindFiducial)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_BuildSic(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Fiducial f = find_fiducial(d, 1, 8, 1e-12);
  for (auto _ : state) benchmark::DoNotOptimize(build_sic(f));
}
BENCHMARK(BM_BuildSic)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_Born(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const SicSystem sic = build_sic(find_fiducial(d, 1, 8, 1e-12));
  Engine rng(2);
  const ProbState p = state_to_prob(random_density(d, rng), sic);
  const CondMatrix r = povm_to_cond(random_povm(d, d, rng), sic);
  for (auto _ : state) benchmark::DoNotOptimize(born(p, r, d));
}
BENCHMARK(BM_Born)->DenseRange(2, 6);

}  // namespace
}  // namespace sicprob

BENCHMARK_MAIN();
