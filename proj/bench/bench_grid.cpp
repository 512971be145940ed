/*
 * Copyright 2026 The hankelrp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference against the OpenMP path for the parallel kernels.
// The second argument selects the path: 0 serial, 1 parallel.

#include <cmath>
#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "hankelrp/grid_ops.hpp"
#include "hankelrp/hankel.hpp"
#include "hankelrp/measure.hpp"
#include "hankelrp/pick.hpp"

namespace {

using namespace hankelrp;

grid::Exec exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? grid::Exec::kSerial : grid::Exec::kParallel;
}

void BM_EvaluateSymbol(benchmark::State& state) {
  const HalfPlaneMeasure mu({}, {PowerDensity{1.0, 0.5, 0.0, 1.0}});
  const auto xs = grid::log_space(1e-3, 1e3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto v = grid::evaluate<cplx>(xs, [&mu](double p) { return symbol_h(mu, p); }, exec_of(state));
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvaluateSymbol)->ArgsProduct({{256, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_OffsetDft(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<cplx> values(m);
  for (int i = 0; i < m; ++i) values[i] = {std::cos(0.37 * i), std::sin(1.3 * i)};
  for (auto _ : state) {
    auto c = grid::offset_dft(values, -128, 256, exec_of(state));
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_OffsetDft)->ArgsProduct({{4096, 65536}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Matvec(benchmark::State& state) {
  const long n = state.range(0);
  const Eigen::MatrixXcd a = Eigen::MatrixXcd::Random(n, n);
  const Eigen::VectorXcd x = Eigen::VectorXcd::Random(n);
  Eigen::VectorXcd y(n);
  for (auto _ : state) {
    grid::matvec(a, x, y, exec_of(state));
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_Matvec)->ArgsProduct({{512, 2048}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_NormEstimate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MomentVector c;
  for (int j = 0; j < 2 * n - 1; ++j) c.values.push_back(1.0 / (j + 1));
  const HankelSection s = section_from_moments(c, n);
  for (auto _ : state) benchmark::DoNotOptimize(norm_estimate(s, 1e-10, exec_of(state)));
}
BENCHMARK(BM_NormEstimate)->ArgsProduct({{256, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
