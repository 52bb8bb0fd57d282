// Copyright 2026 The swapsim Authors
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

#include <benchmark/benchmark.h>

#include <numbers>

#include "swapsim/protocol.hpp"
#include "swapsim/stats.hpp"

namespace {

using namespace swapsim;

constexpr double kPi = std::numbers::pi;

void BM_RunTrial(benchmark::State& state) {
  RngStream rng(1);
  std::uint64_t id = 0;
  for (auto _ : state) {
    TrialRecord r = run_trial(id++, kPi / 4.0, -kPi / 4.0, ContextKind::Bell,
                              Ordering::EveLast, rng);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RunTrial);

void BM_JointDistribution(benchmark::State& state) {
  for (auto _ : state) {
    JointDistribution dist = joint_distribution(0.3, 1.7, ContextKind::Bell,
                                                Ordering::EveFirst);
    benchmark::DoNotOptimize(dist);
  }
}
BENCHMARK(BM_JointDistribution);

void BM_RunTrialsBatch(benchmark::State& state) {
  RunPlan plan;
  plan.trials = 16384;
  plan.master_seed = 99;
  plan.policy = EvePolicy::bernoulli(0.5);
  plan.settings = {{0.0, kPi / 4.0}, {kPi / 2.0, -kPi / 4.0}};
  plan.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::vector<TrialRecord> records = run_trials(plan);
    benchmark::DoNotOptimize(records);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(plan.trials));
}
BENCHMARK(BM_RunTrialsBatch)->Arg(1)->Arg(2)->Arg(4);

void BM_CorrelatorOverLog(benchmark::State& state) {
  RunPlan plan;
  plan.trials = 100000;
  plan.master_seed = 7;
  plan.policy = EvePolicy::fixed(ContextKind::Bell);
  plan.settings = {{0.0, kPi / 4.0}};
  plan.threads = 4;
  const std::vector<TrialRecord> records = run_trials(plan);
  const PartitionKey key{ContextKind::Bell, 0};
  for (auto _ : state) {
    stats::CorrelationEstimate est = stats::correlator(records, key);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_CorrelatorOverLog);

}  // namespace

BENCHMARK_MAIN();
