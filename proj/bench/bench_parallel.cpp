// Copyright 2026 The plvcsp Authors
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

// OpenMP kernels against their serial references. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "plvcsp/arrangement.hpp"
#include "plvcsp/solver.hpp"
#include "support/oracles.hpp"

using namespace plvcsp;

namespace {

PolynomialList generic_polys(std::size_t d, std::size_t k) {
  testing::Rng rng(7 * d + k);
  return std::make_shared<const std::vector<LinearPolynomial>>(testing::random_generic_polys(rng, d, k));
}

// sum of |h_i| over generic hyperplanes h_i in Q^d
Instance abs_sum(std::size_t d, std::size_t k) {
  Instance inst;
  inst.dimension = d;
  std::vector<std::size_t> scope(d);
  for (std::size_t j = 0; j < d; ++j) scope[j] = j;
  const PolynomialList polys = generic_polys(d, k);
  for (const auto& h : *polys) {
    PLCostFunction f;
    f.arity = d;
    f.pieces = {Piece{{{h, Relation::kLt}}, -h}, Piece{{{-h, Relation::kLeq}}, h}};
    inst.terms.push_back(Term{inst.functions.size(), scope});
    inst.functions.push_back(std::move(f));
  }
  return inst;
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto polys = generic_polys(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cells(static_cast<std::size_t>(state.range(0)), polys));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto polys = generic_polys(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_cells_serial(static_cast<std::size_t>(state.range(0)), polys));
  }
}

void BM_SolveParallel(benchmark::State& state) {
  const Instance inst = abs_sum(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, SolveOptions{true, nullptr}));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_SolveSerial(benchmark::State& state) {
  const Instance inst = abs_sum(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, SolveOptions{false, nullptr}));
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->Args({2, 8})->Args({3, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Args({2, 8})->Args({3, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->Args({2, 6})->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveSerial)->Args({2, 6})->Args({3, 5})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
