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

#include "spto/classical.hpp"
#include "spto/grid.hpp"

namespace {

void BM_deterministic_search(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(spto::best_deterministic_triangle(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_deterministic_search)->Arg(1)->Arg(2);

void BM_affine_search(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(spto::best_edge_restricted_affine(6, {0, 2, 4}));
    }
}
BENCHMARK(BM_affine_search);

void BM_hard_instance_generation(benchmark::State& state) {
    spto::HardInstanceConfig cfg;
    cfg.N = 27;
    cfg.budget = static_cast<uint64_t>(state.range(0));
    cfg.corner_stride = 17;
    for (auto _ : state) {
        benchmark::DoNotOptimize(spto::generate_hard_instances(cfg));
    }
}
BENCHMARK(BM_hard_instance_generation)->Arg(64)->Arg(512);

void BM_failure_check(benchmark::State& state) {
    spto::HardInstanceConfig cfg;
    cfg.N = 27;
    cfg.budget = 1;
    cfg.corner_stride = 17;
    const auto stream = spto::generate_hard_instances(cfg);
    const auto circuit = spto::make_local_shallow_circuit(27);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spto::check_failure(circuit, stream.front()));
    }
}
BENCHMARK(BM_failure_check);

}  // namespace
