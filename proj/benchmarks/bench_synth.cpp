// Copyright 2026 The sqisw-synth Authors
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

#include <benchmark/benchmark.h>

#include "sqisw/prune.hpp"
#include "sqisw/qsd.hpp"
#include "sqisw/synth2q.hpp"
#include "sqisw/weyl.hpp"

namespace sqisw {
namespace {

void BM_KakDecompose(benchmark::State& state) {
  const Matrix u = haar_random_unitary(4, 1).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kak_decompose(u));
  }
}
BENCHMARK(BM_KakDecompose);

void BM_SqiswCost(benchmark::State& state) {
  const Matrix u = haar_random_unitary(4, 2).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqisw_cost(u));
  }
}
BENCHMARK(BM_SqiswCost);

void BM_SynthesizeTwoQubit(benchmark::State& state) {
  const Matrix u = haar_random_unitary(4, 3).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize_two_qubit(u, 7));
  }
}
BENCHMARK(BM_SynthesizeTwoQubit)->Unit(benchmark::kMillisecond);

void BM_QsdSynthesize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UnitaryMatrix u = haar_random_unitary(1 << n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsd_synthesize(u));
  }
}
BENCHMARK(BM_QsdSynthesize)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClosureCensus(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure_census(N));
  }
}
BENCHMARK(BM_ClosureCensus)->Arg(6)->Arg(9);

}  // namespace
}  // namespace sqisw

BENCHMARK_MAIN();
