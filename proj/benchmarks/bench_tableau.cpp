// Copyright 2026 The spto-games Authors
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

#include "spto/quantum_strategy.hpp"

namespace {

void BM_cluster_preparation(benchmark::State& state) {
    const auto q = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto st = spto::StabilizerTableau::cluster_ring(q);
        benchmark::DoNotOptimize(st);
    }
}
BENCHMARK(BM_cluster_preparation)->Arg(16)->Arg(64)->Arg(256);

void BM_quantum_round(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto inst =
        spto::GameInstance::with_corner_inputs(n, {0, n / 3, 2 * n / 3}, {1, 1, 0});
    const auto ctx = spto::build_contexts(spto::BlockOperators::cluster(),
                                          spto::GroupElement({{2, 2}}, {0, 1}),
                                          spto::GroupElement({{2, 2}}, {1, 0}));
    uint64_t seed = 0;
    for (auto _ : state) {
        auto tr = spto::play_round(inst, ctx, seed++);
        benchmark::DoNotOptimize(tr);
    }
}
BENCHMARK(BM_quantum_round)->Arg(3)->Arg(10)->Arg(25)->Arg(50);

void BM_pauli_measure(benchmark::State& state) {
    const auto q = static_cast<std::size_t>(state.range(0));
    auto st = spto::StabilizerTableau::cluster_ring(q, 1);
    spto::PauliString p(q);
    p.set_x(0, true);
    for (auto _ : state) {
        auto copy = st;
        benchmark::DoNotOptimize(copy.measure(p));
    }
}
BENCHMARK(BM_pauli_measure)->Arg(16)->Arg(64)->Arg(256);

}  // namespace
