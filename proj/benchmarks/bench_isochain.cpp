// Copyright 2026 The isochain Authors
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

#include "isochain/counting.hpp"
#include "isochain/family.hpp"
#include "isochain/rees_quotient.hpp"
#include "isochain/semigroup.hpp"

namespace isochain {
namespace {

void BM_EnumerateOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_oracle(FamilyId::kDecreasingIsometry, n));
  }
}
BENCHMARK(BM_EnumerateOracle)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_EnumerateFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_fast(FamilyId::kDecreasingIsometry, n));
  }
}
BENCHMARK(BM_EnumerateFast)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_Compose(benchmark::State& state) {
  const auto elements = enumerate_fast(FamilyId::kDecreasingIsometry, 6);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = elements[i % elements.size()];
    const auto& b = elements[(i * 7 + 3) % elements.size()];
    benchmark::DoNotOptimize(compose(a, b));
    ++i;
  }
}
BENCHMARK(BM_Compose);

void BM_BuildSemigroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_semigroup(FamilyId::kDecreasingIsometry, n));
  }
}
BENCHMARK(BM_BuildSemigroup)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_GreensJ(benchmark::State& state) {
  const auto s = build_semigroup(FamilyId::kDecreasingIsometry,
                                 static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greens_partition(s.table, GreenRelation::kJ));
  }
}
BENCHMARK(BM_GreensJ)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Categorical(benchmark::State& state) {
  const auto q = rees_quotient(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_categorical(q));
}
BENCHMARK(BM_Categorical)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);

void BM_Triangle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(triangle(FamilyId::kDecreasingIsometry, Statistic::kFix,
                                      static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Triangle)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace isochain

BENCHMARK_MAIN();
