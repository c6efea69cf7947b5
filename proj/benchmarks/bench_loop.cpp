// Copyright 2026 The braidcircuit Authors
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

#include "braidcircuit/loop_engine.hpp"

namespace {

using namespace braidcircuit;

void BM_Concatenate(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    const GateProbabilities probs{0.5, 0.5, 0.0};
    const Stripe a = knit_sample(L, 2, probs, 1, KnitMode::Independent);
    const Stripe b = knit_sample(L, 2, probs, 2, KnitMode::Independent);
    for (auto _ : state) {
        benchmark::DoNotOptimize(concatenate(a, b));
    }
    state.SetComplexityN(L);
}
BENCHMARK(BM_Concatenate)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_ApplyLayer(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    const GateProbabilities probs{0.5, 0.5, 0.0};
    std::vector<GateKind> row(static_cast<std::size_t>(L / 2));
    for (int j = 0; j < L / 2; ++j) {
        row[j] = draw_slot(probs, 7, 0, j);
    }
    Stripe s = Stripe::identity(L);
    for (auto _ : state) {
        apply_layer(s, row, 0);
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_ApplyLayer)->RangeMultiplier(4)->Range(64, 4096);

void BM_PooledSample(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    const GateProbabilities probs{0.5, 0.5, 0.0};
    KnitOptions opt;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(knit_samples(L, L, probs, ++seed, opt, opt.pool_size));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(opt.pool_size));
}
BENCHMARK(BM_PooledSample)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_IndependentSample(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    const GateProbabilities probs{0.5, 0.5, 0.0};
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(knit_sample(L, L, probs, ++seed, KnitMode::Independent));
    }
}
BENCHMARK(BM_IndependentSample)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMicrosecond);

}  // namespace
