// Copyright 2026 The phaseshift Authors
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

#include <numbers>

#include <benchmark/benchmark.h>

#include "phaseshift/analytics.hpp"
#include "phaseshift/harness.hpp"
#include "phaseshift/simulator.hpp"

namespace {

using namespace phaseshift;
using std::numbers::pi;

void BM_Deviation(benchmark::State &state) {
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-6;
        if (t > pi) {
            t = 0.0;
        }
        benchmark::DoNotOptimize(
            analytics::deviation(PhaseAngle(t), FailureProb(0.7)));
    }
}
BENCHMARK(BM_Deviation);

void BM_Kappa(benchmark::State &state) {
    const EpsilonRange r(0.0, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(analytics::kappa(r));
    }
}
BENCHMARK(BM_Kappa);

void BM_OneIteration(benchmark::State &state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto inst = sim::crafted_instance(dim, FailureProb(0.6), 0, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim::one_iteration(inst, PhaseAngle(pi / 3.0)));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OneIteration)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_Recursion(benchmark::State &state) {
    const auto inst = sim::crafted_instance(8, FailureProb(0.9), 0, 1);
    const auto levels = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sim::recursion_failures(inst, PhaseAngle(pi / 3.0), levels));
    }
}
BENCHMARK(BM_Recursion)->DenseRange(1, 9, 4);

void BM_RecursionDim(benchmark::State &state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto inst = sim::crafted_instance(dim, FailureProb(0.9), 0, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sim::recursion_unitary(inst, PhaseAngle(pi / 3.0), 3));
    }
}
BENCHMARK(BM_RecursionDim)->RangeMultiplier(4)->Range(8, 128);

void BM_Sweep(benchmark::State &state) {
    harness::SweepSpec spec;
    spec.theta_grid = harness::default_theta_grid();
    spec.eps_grid = harness::default_eps_grid();
    spec.quantities = {harness::Quantity::Deviation, harness::Quantity::Gap};
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(harness::run_sweep(spec, threads));
    }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4);

void BM_CrossCheckedSweep(benchmark::State &state) {
    harness::SweepSpec spec;
    spec.theta_grid = harness::theta_linspace(25);
    spec.eps_grid = harness::eps_linspace(0.0, 1.0, 25);
    spec.mode = harness::CrossChecked{8};
    spec.quantities = {harness::Quantity::Deviation};
    for (auto _ : state) {
        benchmark::DoNotOptimize(harness::run_sweep(spec, 1));
    }
}
BENCHMARK(BM_CrossCheckedSweep);

} // namespace

BENCHMARK_MAIN();
