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

#include "spto/builtins.hpp"

namespace {

void BM_string_order(benchmark::State& state) {
    const auto aklt = spto::builtin_state("aklt");
    const auto z = spto::z2xz2_element("z");
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            spto::string_order(aklt.tensor, aklt.sym, aklt.bounds, z, 0, N - 2, N));
    }
}
BENCHMARK(BM_string_order)->Arg(8)->Arg(32)->Arg(128);

void BM_dense_oracle(benchmark::State& state) {
    const auto aklt = spto::builtin_state("aklt");
    const auto z = spto::z2xz2_element("z");
    const int N = static_cast<int>(state.range(0));
    const auto ops = spto::string_order_ops(aklt.sym, aklt.bounds, z, 0, N - 2, N);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spto::dense_expectation(aklt.tensor, N, ops));
    }
}
BENCHMARK(BM_dense_oracle)->Arg(6)->Arg(8);

void BM_boundary_construction(benchmark::State& state) {
    const auto aklt = spto::builtin_state("aklt");
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            spto::boundary_operators(*aklt.fixed_tensor, 1, *aklt.fixed_sym));
    }
}
BENCHMARK(BM_boundary_construction);

}  // namespace
