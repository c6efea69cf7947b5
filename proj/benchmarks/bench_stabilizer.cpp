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

#include "braidcircuit/stabilizer_engine.hpp"

namespace {

using namespace braidcircuit;

void BM_StabilizerTrajectory(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const auto layout = sample_layout(L, L, 0.5, 0.5, 0.1, ++seed);
        benchmark::DoNotOptimize(stabilizer_entropy(layout));
    }
}
BENCHMARK(BM_StabilizerTrajectory)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMicrosecond);

void BM_BellMeasurement(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    auto t = PhaseFreeTableau::tfds(L);
    int a = 0;
    for (auto _ : state) {
        t.measure_bell(a, (a + 1) % L);
        a = (a + 1) % L;
    }
}
BENCHMARK(BM_BellMeasurement)->RangeMultiplier(4)->Range(16, 1024);

void BM_EntanglementRank(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    auto t = PhaseFreeTableau::tfds(L);
    t.apply_layout(sample_layout(L, 4, 0.5, 0.5, 0.0, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(t.entanglement_prefix(L));
    }
}
BENCHMARK(BM_EntanglementRank)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace
