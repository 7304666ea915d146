// Copyright 2026 The transdir Authors.
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

#include <random>
#include <string>
#include <vector>

#include "transdir/cache_key.h"
#include "transdir/detection.h"
#include "transdir/permutation.h"

namespace transdir {
namespace {

std::vector<DirectionScores> document(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(-40.0, -1.0);
  std::vector<DirectionScores> doc;
  for (std::size_t i = 0; i < n; ++i) {
    doc.push_back(DirectionScores::from_sums(u(rng), 1 + rng() % 30, u(rng),
                                             1 + rng() % 30));
  }
  return doc;
}

void BM_AvgTokenLogprob(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-12.0, 0.0);
  std::vector<double> lp(static_cast<std::size_t>(state.range(0)));
  for (double& v : lp) v = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(avg_token_logprob(lp));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AvgTokenLogprob)->Range(16, 1 << 16);

void BM_Pool(benchmark::State& state) {
  const auto doc = document(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pool(doc).log_margin());
}
BENCHMARK(BM_Pool)->Range(8, 4096);

void BM_ExactPermutation(benchmark::State& state) {
  const auto doc = document(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_permutation_test(doc).p_value);
}
BENCHMARK(BM_ExactPermutation)->DenseRange(4, 16, 4);

void BM_MonteCarloPermutation(benchmark::State& state) {
  const auto doc = document(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(permutation_test(doc, {10000, 0, false}).p_value);
  }
}
BENCHMARK(BM_MonteCarloPermutation)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_CacheKey(benchmark::State& state) {
  const std::string source(static_cast<std::size_t>(state.range(0)), 'a');
  const std::string target = "Übersetzung " + source;
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_cache_key("scorer", "en", "de", source, target));
  }
}
BENCHMARK(BM_CacheKey)->Range(16, 4096);

}  // namespace
}  // namespace transdir

BENCHMARK_MAIN();
