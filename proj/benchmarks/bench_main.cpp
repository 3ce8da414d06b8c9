// Copyright 2026 The skewgm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "skewgm/parallel.hpp"
#include "skewgm/pipeline.hpp"
#include "skewgm/precision.hpp"
#include "skewgm/rankcorr.hpp"
#include "skewgm/simulate.hpp"
#include "skewgm/skeptic.hpp"

namespace {

using namespace skewgm;

SimulatedDataset dataset(int p, int n) {
  SimulationConfig cfg;
  cfg.p = p;
  cfg.n = n;
  cfg.sparsity = std::max(0.02, 2.0 / p);
  cfg.seed = 42;
  return simulate_dataset(cfg);
}

void BM_KendallTauMatrix(benchmark::State& state) {
  set_worker_count(1);
  const auto ds = dataset(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kendall_tau_matrix(ds.data));
  state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(0) - 1) / 2);
}
BENCHMARK(BM_KendallTauMatrix)->Args({50, 200})->Args({100, 200})->Args({100, 1000})->Unit(benchmark::kMillisecond);

void BM_SpearmanRhoMatrix(benchmark::State& state) {
  set_worker_count(1);
  const auto ds = dataset(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(spearman_rho_matrix(ds.data));
}
BENCHMARK(BM_SpearmanRhoMatrix)->Args({100, 200})->Args({100, 1000})->Unit(benchmark::kMillisecond);

void BM_Glasso(benchmark::State& state) {
  const auto ds = dataset(static_cast<int>(state.range(0)), 200);
  const auto S = psd_repair(skeptic_from_tau(kendall_tau_matrix(ds.data)));
  for (auto _ : state) benchmark::DoNotOptimize(glasso(S, 0.2));
}
BENCHMARK(BM_Glasso)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_GlassoPath(benchmark::State& state) {
  const auto ds = dataset(100, 200);
  const auto S = psd_repair(skeptic_from_tau(kendall_tau_matrix(ds.data)));
  const auto grid = log_lambda_grid(S.matrix, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(glasso_path(S.matrix, grid));
}
BENCHMARK(BM_GlassoPath)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Clime(benchmark::State& state) {
  const auto ds = dataset(static_cast<int>(state.range(0)), 200);
  const auto S = skeptic_from_tau(kendall_tau_matrix(ds.data));
  for (auto _ : state) benchmark::DoNotOptimize(clime(S, 0.2));
}
BENCHMARK(BM_Clime)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Dantzig(benchmark::State& state) {
  const auto ds = dataset(static_cast<int>(state.range(0)), 200);
  const auto S = skeptic_from_tau(kendall_tau_matrix(ds.data));
  for (auto _ : state) benchmark::DoNotOptimize(dantzig(S, 0.2));
}
BENCHMARK(BM_Dantzig)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_AlphaFit(benchmark::State& state) {
  const auto ds = dataset(100, 200);
  const auto method = static_cast<AlphaMethod>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_alpha(ds.data, method));
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_AlphaFit)
    ->Arg(static_cast<int>(AlphaMethod::moments))
    ->Arg(static_cast<int>(AlphaMethod::skew_normal_mle))
    ->Arg(static_cast<int>(AlphaMethod::skew_t_mle))
    ->Unit(benchmark::kMillisecond);

void BM_StarsPipeline(benchmark::State& state) {
  const auto ds = dataset(100, 200);
  PipelineOptions opts;
  StarsSelection sel;
  sel.config.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(ds.data, opts, sel));
}
BENCHMARK(BM_StarsPipeline)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
