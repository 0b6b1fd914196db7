// Copyright 2026 The pr2-marl Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "pr2/kernels.h"
#include "pr2/mlp.h"
#include "pr2/rng.h"

namespace {

// Args: number of particle groups (batch rows) and particles per group.
void BM_SvgdSerial(benchmark::State& state) {
  const int groups = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const Eigen::MatrixXd a = Eigen::MatrixXd::Random(1, groups * m);
  const Eigen::MatrixXd s = Eigen::MatrixXd::Random(1, groups * m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pr2::kernels::SvgdDeltasSerial(a, s, m));
  }
  state.SetItemsProcessed(state.iterations() * groups);
}

void BM_SvgdParallel(benchmark::State& state) {
  const int groups = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const Eigen::MatrixXd a = Eigen::MatrixXd::Random(1, groups * m);
  const Eigen::MatrixXd s = Eigen::MatrixXd::Random(1, groups * m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pr2::kernels::SvgdDeltasParallel(a, s, m));
  }
  state.SetItemsProcessed(state.iterations() * groups);
  state.counters["threads"] = pr2::kernels::MaxThreads();
}

void BM_RowLseSerial(benchmark::State& state) {
  const Eigen::MatrixXd q = 10.0 * Eigen::MatrixXd::Random(state.range(0), 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pr2::kernels::RowLogSumExpSerial(q));
  }
}

void BM_RowLseParallel(benchmark::State& state) {
  const Eigen::MatrixXd q = 10.0 * Eigen::MatrixXd::Random(state.range(0), 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pr2::kernels::RowLogSumExpParallel(q));
  }
}

// Forward and backward of a 100-100 network over one batch of particles.
void BM_MlpForwardBackward(benchmark::State& state) {
  pr2::Rng rng(1);
  const pr2::Mlp net = pr2::Mlp::Uniform(pr2::MlpLayout(3, 1), rng);
  const Eigen::MatrixXd x = Eigen::MatrixXd::Random(3, state.range(0));
  const Eigen::MatrixXd seed = Eigen::MatrixXd::Ones(1, state.range(0));
  for (auto _ : state) {
    pr2::MlpTape tape;
    net.Forward(x, &tape);
    benchmark::DoNotOptimize(net.Backward(tape, seed));
  }
}

BENCHMARK(BM_SvgdSerial)->Args({32, 8})->Args({64, 32})->Args({256, 32});
BENCHMARK(BM_SvgdParallel)->Args({32, 8})->Args({64, 32})->Args({256, 32});
BENCHMARK(BM_RowLseSerial)->Arg(1024)->Arg(16384);
BENCHMARK(BM_RowLseParallel)->Arg(1024)->Arg(16384);
BENCHMARK(BM_MlpForwardBackward)->Arg(256)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
