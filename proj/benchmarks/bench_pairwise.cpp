// Copyright 2026 The binassoc Authors
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

#include "binassoc/pairwise.hpp"
#include "binassoc/synthetic.hpp"

namespace {

using namespace binassoc;

BinaryMatrix make_matrix(std::size_t cols, std::size_t rows) {
  return sample_dyadic_independent(std::vector<double>(cols, 0.1), rows, 42);
}

void BM_PairCounts(benchmark::State& state) {
  const BinaryMatrix m = make_matrix(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_counts(m, 0, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PairCounts)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_AllPairsP11(benchmark::State& state) {
  const BinaryMatrix m = make_matrix(static_cast<std::size_t>(state.range(0)),
                                     static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_pairs(m, MeasureKind::CoOccurrenceP11));
  }
  const auto pairs = static_cast<std::int64_t>(pair_count(m.n_cols()));
  state.SetItemsProcessed(state.iterations() * pairs);
}
BENCHMARK(BM_AllPairsP11)
    ->Args({100, 10000})
    ->Args({500, 10000})
    ->Args({1000, 10000});

void BM_AllPairsPhiSingleThread(benchmark::State& state) {
  const BinaryMatrix m = make_matrix(static_cast<std::size_t>(state.range(0)), 10000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_pairs(m, MeasureKind::PearsonPhi, 1));
  }
}
BENCHMARK(BM_AllPairsPhiSingleThread)->Arg(100)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
