// Copyright 2026 The bellsector Authors
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

#include "bellsector/entanglement.hpp"
#include "bellsector/evolution.hpp"
#include "bellsector/group.hpp"
#include "bellsector/rng.hpp"
#include "bellsector/sampling.hpp"
#include "bellsector/spectral.hpp"
#include "bellsector/synthesis.hpp"

using namespace bellsector;

namespace {

ModelParams bench_params() {
  ModelParams p;
  p.coupling = Vec3(1.0, 0.8, 0.5);
  p.field1 = 0.9;
  p.field2 = 0.4;
  p.axis = Axis::Z;
  return p;
}

void BM_Reduce(benchmark::State& state) {
  const ModelParams p = bench_params();
  for (auto _ : state) benchmark::DoNotOptimize(reduce(p));
}
BENCHMARK(BM_Reduce);

void BM_EvolveClosed(benchmark::State& state) {
  const ModelParams p = bench_params();
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(evolve_closed(p, t));
  }
}
BENCHMARK(BM_EvolveClosed);

void BM_EvolveOracle(benchmark::State& state) {
  const ModelParams p = bench_params();
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(evolve_oracle(p, t));
  }
}
BENCHMARK(BM_EvolveOracle);

void BM_JacobiDiagonalize(benchmark::State& state) {
  Rng rng(1);
  const Mat4 h = rng.random_hermitian4();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_diagonalize(h));
}
BENCHMARK(BM_JacobiDiagonalize);

void BM_ConcurrencePair(benchmark::State& state) {
  Rng rng(2);
  const BellVector v = random_state(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence_bell(v));
    benchmark::DoNotOptimize(concurrence_oracle(v));
  }
}
BENCHMARK(BM_ConcurrencePair);

void BM_SectorCompose(benchmark::State& state) {
  Rng rng(3);
  const Sector s1 =
      sector_from_exponential(0.3, rng.uniform(0.0, M_PI), rng.unit_vec3());
  const Sector s2 =
      sector_from_exponential(-0.2, rng.uniform(0.0, M_PI), rng.unit_vec3());
  for (auto _ : state) benchmark::DoNotOptimize(compose_bch(s1, s2));
}
BENCHMARK(BM_SectorCompose);

void BM_TwoPulseSynthesis(benchmark::State& state) {
  Rng rng(4);
  SynthesisTarget target;
  target.unitary = rng.haar_su2();
  target.axis = Axis::Z;
  for (auto _ : state)
    benchmark::DoNotOptimize(synthesize_two_pulse(target));
}
BENCHMARK(BM_TwoPulseSynthesis);

void BM_FindInverse(benchmark::State& state) {
  const PulseSpec pulse{bench_params(), 1.3};
  for (auto _ : state)
    benchmark::DoNotOptimize(find_inverse(pulse, InversePolicy::TuneAll, 16));
}
BENCHMARK(BM_FindInverse);

}  // namespace

BENCHMARK_MAIN();
