// Copyright 2026 The cctsim Authors
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

// Serial reference path against the OpenMP path for the trial loops.

#include <benchmark/benchmark.h>

#include <numbers>

#include "cct/zeno_sim.hpp"

namespace {

using cct::ExecutionPolicy;

cct::ExecutionPolicy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
}

cct::GeneralInput balanced() {
  cct::GeneralInput in;
  in.alpha = in.beta = in.gamma = in.delta = cct::Complex{std::numbers::sqrt2 / 2.0, 0.0};
  in.angles = {0.0, std::numbers::pi / 2.0, 0.0};
  return in;
}

void BM_SimulateCct(benchmark::State& state) {
  const cct::CycleConfig cfg{25, 25, 25};
  const cct::ProtocolInput in = balanced();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cct::simulate_cct(cfg, in, 20000, 42, policy_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * 20000);
}

void BM_QzCoherent(benchmark::State& state) {
  const cct::Absorber half{{std::numbers::sqrt2 / 2.0, 0.0}, {std::numbers::sqrt2 / 2.0, 0.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cct::run_qz_trials(half, cct::Polarization::H, 100, cct::AbsorberModel::Coherent,
                                                20000, 7, policy_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * 20000);
}

void BM_CqzPerCycleBorn(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cct::run_cqz_trials(cct::kPresent, cct::Polarization::H, 25, 25,
                                                 cct::AbsorberModel::PerCycleBorn, 20000, 9, policy_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * 20000);
}

void BM_OutcomeStatistics(benchmark::State& state) {
  const cct::GeneralInput in = balanced();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cct::outcome_statistics(in, 5000, 3, policy_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * 5000);
}

// Argument 0 = serial, 1 = parallel.
BENCHMARK(BM_SimulateCct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QzCoherent)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CqzPerCycleBorn)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OutcomeStatistics)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
