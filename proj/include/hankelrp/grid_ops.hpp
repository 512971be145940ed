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

// Data-parallel kernels. Every kernel has an Exec::kSerial path that is the
// reference implementation; the OpenMP path writes into index-addressed
// slots and reduces serially, so both paths return bit-identical results
// for any thread count.

#pragma once

#include <complex>
#include <exception>
#include <mutex>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hankelrp::grid {

enum class Exec { kSerial, kParallel };

/// Caps the OpenMP team size; n <= 0 leaves the runtime default.
void set_max_threads(int n);
int max_threads();

std::vector<double> log_space(double lo, double hi, int n);

/// f(x_i) for every grid point, in grid order.
template <class T, class F>
std::vector<T> evaluate(std::span<const double> xs, F&& f, Exec exec = Exec::kParallel) {
  std::vector<T> out(xs.size());
  const long n = static_cast<long>(xs.size());
  if (exec == Exec::kSerial) {
    for (long i = 0; i < n; ++i) out[i] = f(xs[i]);
    return out;
  }
  std::exception_ptr failure;
  std::mutex guard;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = f(xs[i]);
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Fourier coefficients (1/M) sum_m v_m e^{-i n theta_m} on the half-step
/// grid theta_m = 2 pi (m + 1/2) / M, for n = first, ..., first + count - 1.
std::vector<std::complex<double>> offset_dft(std::span<const std::complex<double>> values,
                                             int first, int count, Exec exec = Exec::kParallel);

/// (2 pi / M) sum_m f(theta_m) on the same half-step grid.
template <class F>
std::complex<double> circle_trapezoid(F&& f, int nodes, Exec exec = Exec::kParallel) {
  std::vector<double> thetas(nodes);
  for (int m = 0; m < nodes; ++m) thetas[m] = 2.0 * std::numbers::pi * (m + 0.5) / nodes;
  const auto vals = evaluate<std::complex<double>>(thetas, f, exec);
  std::complex<double> sum{};
  for (const auto& v : vals) sum += v;
  return sum * (2.0 * std::numbers::pi / nodes);
}

/// y = A x, rows distributed over threads.
void matvec(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& x, Eigen::VectorXcd& y,
            Exec exec = Exec::kParallel);

}  // namespace hankelrp::grid
