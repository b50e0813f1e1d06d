// SPDX-License-Identifier: Apache-2.0
//
// mimo-ee: energy-efficiency optimal antenna counts for single-user massive MIMO
// Copyright (C) 2026 The mimo-ee authors
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

#include <mimo_ee/mimo_ee.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace mimo_ee;

void BM_GammaQuadrature(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(GammaQuadrature(static_cast<std::size_t>(state.range(0)), 64.0));
}
BENCHMARK(BM_GammaQuadrature)->Arg(64)->Arg(128)->Arg(512);

void BM_ErgodicCapacity(benchmark::State& state)
{
    const CapacityEngine engine;
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(engine.ergodic_capacity(m, 0.5));
}
BENCHMARK(BM_ErgodicCapacity)->Arg(1)->Arg(64)->Arg(1024);

void BM_InvertCapacity(benchmark::State& state)
{
    const CapacityEngine engine;
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(engine.invert_capacity(m, 5.0));
}
BENCHMARK(BM_InvertCapacity)->Arg(1)->Arg(64)->Arg(1024);

void BM_InvertCapacityMonteCarlo(benchmark::State& state)
{
    CapacityConfig cfg;
    cfg.method = EstimatorMethod::monte_carlo;
    cfg.monte_carlo_samples = 100'000;
    const CapacityEngine engine(cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(engine.invert_capacity(64, 5.0));
}
BENCHMARK(BM_InvertCapacityMonteCarlo)->Unit(benchmark::kMillisecond);

void BM_OptimizeExact(benchmark::State& state)
{
    const ExactOptimizer opt;
    const Theta theta = normalize(SystemParams::reference(db_to_linear(static_cast<double>(state.range(0)))));
    for (auto _ : state)
        benchmark::DoNotOptimize(opt.optimize_exact(5.0, theta));
}
BENCHMARK(BM_OptimizeExact)->Arg(-160)->Arg(-150)->Arg(-120)->Unit(benchmark::kMillisecond);

void BM_OptimizeBound(benchmark::State& state)
{
    const Theta theta = normalize(SystemParams::reference(1e-15));
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_bound(5.0, theta));
}
BENCHMARK(BM_OptimizeBound);

void BM_RelaxedOptimum(benchmark::State& state)
{
    const Theta theta = normalize(SystemParams::reference(1e-15));
    for (auto _ : state)
        benchmark::DoNotOptimize(relaxed_optimum(5.0, theta));
}
BENCHMARK(BM_RelaxedOptimum);

void BM_Classify(benchmark::State& state)
{
    const SystemParams params = SystemParams::reference(1e-15);
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(5.0, params));
}
BENCHMARK(BM_Classify);

} // namespace

BENCHMARK_MAIN();
