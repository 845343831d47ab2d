// SPDX-License-Identifier: Apache-2.0
//
// ria-sim: retrospective interference alignment simulator for the K-user
// MISO interference channel with imperfect delayed CSIT
// Copyright (C) 2026 The ria-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "ria/sim.hpp"
#include "ria/sim_kernels.hpp"

#include <benchmark/benchmark.h>

namespace {

ria::SimConfig bench_config(int users, int threads) {
    ria::SimConfig c;
    c.users = users;
    c.trials = 512;
    c.seed = 11;
    c.threads = threads;
    return c;
}

void BM_SerialKernel(benchmark::State& state) {
    const ria::SimConfig c = bench_config(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(ria::evaluate_trials_serial(c, 0.5, 1e4));
    state.SetItemsProcessed(state.iterations() * c.trials);
}

void BM_ParallelKernel(benchmark::State& state) {
    const ria::SimConfig c = bench_config(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(ria::evaluate_trials_parallel(c, 0.5, 1e4));
    state.SetItemsProcessed(state.iterations() * c.trials);
}

} // namespace

BENCHMARK(BM_SerialKernel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelKernel)
    ->ArgsProduct({{3, 5}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
