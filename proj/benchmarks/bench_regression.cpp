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

#include "binassoc/regression.hpp"
#include "binassoc/synthetic.hpp"

namespace {

using namespace binassoc;

BinaryMatrix make_matrix(std::size_t cols, std::size_t rows) {
  return sample_dyadic_independent(std::vector<double>(cols, 0.3), rows, 9);
}

void BM_NodewiseOls(benchmark::State& state) {
  const BinaryMatrix m = make_matrix(static_cast<std::size_t>(state.range(0)),
                                     static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nodewise_fit(m, 0, RegressionMethod::ols()));
  }
}
BENCHMARK(BM_NodewiseOls)->Args({10, 2000})->Args({30, 2000})->Args({50, 5000});

void BM_NodewiseLogistic(benchmark::State& state) {
  const BinaryMatrix m = make_matrix(static_cast<std::size_t>(state.range(0)),
                                     static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nodewise_fit(m, 0, RegressionMethod::logistic()));
  }
}
BENCHMARK(BM_NodewiseLogistic)->Args({10, 2000})->Args({30, 2000});

void BM_ConditionalTable(benchmark::State& state) {
  const BinaryMatrix m = make_matrix(static_cast<std::size_t>(state.range(0)), 2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        conditional_edge_weights(m, RegressionMethod::ols()));
  }
}
BENCHMARK(BM_ConditionalTable)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
