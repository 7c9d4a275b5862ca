// Copyright 2026 The comaxdim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "comaxdim/comaximal.hpp"
#include "comaxdim/solver.hpp"
#include "comaxdim/strong_resolving.hpp"

namespace {

using comaxdim::RingSpec;

RingSpec reduced(int n) { return RingSpec::from_chain_lengths(std::vector<int>(static_cast<std::size_t>(n), 1)); }

void BM_BuildGamma(benchmark::State& state) {
  const auto spec = reduced(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(comaxdim::build_gamma(spec));
}
BENCHMARK(BM_BuildGamma)->DenseRange(3, 8);

void BM_IndependentSetOnSrg(benchmark::State& state) {
  const auto g = comaxdim::build_gamma(reduced(static_cast<int>(state.range(0))));
  const auto srg = comaxdim::build_srg(g.graph);
  for (auto _ : state) benchmark::DoNotOptimize(comaxdim::max_independent_set(srg.srg));
  state.counters["srg_order"] = static_cast<double>(srg.srg.order());
}
BENCHMARK(BM_IndependentSetOnSrg)->DenseRange(3, 8);

void BM_SdimViaSrg(benchmark::State& state) {
  const auto g = comaxdim::build_gamma(RingSpec::from_chain_lengths({2, 2, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(comaxdim::sdim_via_srg(g.graph));
}
BENCHMARK(BM_SdimViaSrg);

void BM_SdimBruteforce(benchmark::State& state) {
  const auto g = comaxdim::build_gamma(RingSpec::from_chain_lengths({2, 2, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(comaxdim::sdim_bruteforce(g.graph));
}
BENCHMARK(BM_SdimBruteforce)->Unit(benchmark::kMillisecond);

void BM_SdimBruteforceCycle(benchmark::State& state) {
  const auto g = comaxdim::Graph::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(comaxdim::sdim_bruteforce(g));
}
BENCHMARK(BM_SdimBruteforceCycle)->DenseRange(8, 24, 8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
