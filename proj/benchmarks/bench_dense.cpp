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

#include "braidcircuit/dense_engine.hpp"

namespace {

using namespace braidcircuit;

void BM_TrajectoryEntropy(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const auto layout = sample_layout(L, L, 1.0, 0.5, 0.0, ++seed, 0.37);
        benchmark::DoNotOptimize(trajectory_entropy(layout));
    }
}
BENCHMARK(BM_TrajectoryEntropy)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_LinkEntropy(benchmark::State &state) {
    double c = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(link_entropy(LinkPiece::TwoR, c));
        c += 1e-3;
    }
}
BENCHMARK(BM_LinkEntropy);

}  // namespace
