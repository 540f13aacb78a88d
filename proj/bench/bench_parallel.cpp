// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

// Parallel kernels against their serial references. Set OMP_NUM_THREADS to
// choose the thread count for the parallel variants.

#include <benchmark/benchmark.h>

#include <vector>

#include "roughvol/analysis.hpp"
#include "roughvol/rng.hpp"
#include "roughvol/sampler.hpp"

using namespace roughvol;

namespace {

void BM_CovarianceReference(benchmark::State& state) {
  const Grid grid(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_covariance_reference(ModelParams{}, grid).full.data());
}

void BM_CovarianceSerial(benchmark::State& state) {
  const Grid grid(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_covariance(ModelParams{}, grid, Execution::serial).full.data());
  }
}

void BM_CovarianceParallel(benchmark::State& state) {
  const Grid grid(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_covariance(ModelParams{}, grid, Execution::parallel).full.data());
  }
}

void BM_CirculantSample(benchmark::State& state) {
  const Grid grid(static_cast<int>(state.range(0)), 1.0);
  const CirculantEmbedding ce(ModelParams{}, grid);
  auto ws = ce.make_workspace();
  std::vector<double> y(grid.n() + 1);
  std::uint64_t rep = 0;
  for (auto _ : state) {
    GaussianStream stream({42, rep++, StreamRole::dh});
    ce.sample(stream, ws, y);
    benchmark::DoNotOptimize(y.data());
  }
}

McConfig mc_config(McMode mode, Execution exec) {
  McConfig cfg;
  cfg.n_list = {16, 32, 64};
  cfg.fine_factor = mode == McMode::joint ? 4 : 64;
  cfg.replications = 512;
  cfg.mode = mode;
  cfg.exec = exec;
  return cfg;
}

void BM_McFast(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  const auto cfg = mc_config(McMode::fast_rho0, exec);
  for (auto _ : state) benchmark::DoNotOptimize(mc_strong_error(ModelParams{}, cfg).rows.data());
}

void BM_McJoint(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  const auto cfg = mc_config(McMode::joint, exec);
  for (auto _ : state) benchmark::DoNotOptimize(mc_strong_error(ModelParams{}, cfg).rows.data());
}

}  // namespace

BENCHMARK(BM_CovarianceReference)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CovarianceSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CovarianceParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CirculantSample)->Arg(1 << 10)->Arg(1 << 15)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_McFast)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McJoint)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
