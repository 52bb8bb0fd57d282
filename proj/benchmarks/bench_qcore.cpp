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

#include "swapsim/contexts.hpp"
#include "swapsim/protocol.hpp"
#include "swapsim/qcore.hpp"

namespace {

using namespace swapsim;

PairBasis bell_basis() {
  return {bell_state(BellKind::PsiMinus), bell_state(BellKind::PsiPlus),
          bell_state(BellKind::PhiMinus), bell_state(BellKind::PhiPlus)};
}

void BM_ExpandInPairBases(benchmark::State& state) {
  const StateVector& psi = two_singlet_state();
  const PairBasis basis = bell_basis();
  for (auto _ : state) {
    CoefficientMatrix c = expand_in_pair_bases(psi, basis, basis);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ExpandInPairBases);

void BM_PartialTraceSingle(benchmark::State& state) {
  const StateVector& psi = two_singlet_state();
  for (auto _ : state) {
    DensityMatrix rho = partial_trace(psi, {1});
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_PartialTraceSingle);

void BM_PartialTracePair(benchmark::State& state) {
  const StateVector& psi = two_singlet_state();
  for (auto _ : state) {
    DensityMatrix rho = partial_trace(psi, {1, 4});
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_PartialTracePair);

void BM_Eigenvalues4x4(benchmark::State& state) {
  const DensityMatrix rho = partial_trace(two_singlet_state(), {1, 4});
  for (auto _ : state) {
    std::vector<double> eig = rho.eigenvalues();
    benchmark::DoNotOptimize(eig);
  }
}
BENCHMARK(BM_Eigenvalues4x4);

void BM_PairProjector(benchmark::State& state) {
  const StateVector& psi = two_singlet_state();
  const Context& ctx = context_outcomes(ContextKind::Bell);
  for (auto _ : state) {
    RawVector projected = apply_pair_projector(ctx, 0, psi);
    benchmark::DoNotOptimize(projected);
  }
}
BENCHMARK(BM_PairProjector);

}  // namespace

BENCHMARK_MAIN();
