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

#include "hankelrp/grid_ops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <omp.h>

namespace hankelrp::grid {

void set_max_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

std::vector<double> log_space(double lo, double hi, int n) {
  if (!(lo > 0.0 && hi > lo) || n < 2) throw std::invalid_argument("log_space: bad range");
  std::vector<double> out(n);
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < n; ++i) out[i] = std::pow(10.0, a + (b - a) * i / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

namespace {

std::complex<double> dft_one(std::span<const std::complex<double>> values, int freq) {
  const long m_count = static_cast<long>(values.size());
  std::complex<double> sum{};
  for (long m = 0; m < m_count; ++m) {
    // Reduce the phase index modulo 2M before scaling to keep the angle small.
    const long k = ((static_cast<long>(freq) * (2 * m + 1)) % (2 * m_count) + 2 * m_count) %
                   (2 * m_count);
    const double phase = -std::numbers::pi * static_cast<double>(k) / m_count;
    sum += values[m] * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return sum / static_cast<double>(m_count);
}

}  // namespace

std::vector<std::complex<double>> offset_dft(std::span<const std::complex<double>> values,
                                             int first, int count, Exec exec) {
  std::vector<std::complex<double>> out(count);
  if (exec == Exec::kSerial) {
    for (int i = 0; i < count; ++i) out[i] = dft_one(values, first + i);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (int i = 0; i < count; ++i) out[i] = dft_one(values, first + i);
  return out;
}

void matvec(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& x, Eigen::VectorXcd& y,
            Exec exec) {
  const long rows = a.rows();
  const long cols = a.cols();
  y.resize(rows);
  if (exec == Exec::kSerial) {
    for (long i = 0; i < rows; ++i) {
      std::complex<double> s{};
      for (long j = 0; j < cols; ++j) s += a(i, j) * x(j);
      y(i) = s;
    }
    return;
  }
#pragma omp parallel for schedule(static)
  for (long i = 0; i < rows; ++i) {
    std::complex<double> s{};
    for (long j = 0; j < cols; ++j) s += a(i, j) * x(j);
    y(i) = s;
  }
}

}  // namespace hankelrp::grid
