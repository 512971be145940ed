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

// Reference computations for the tests. They use Boost.Math quadrature and
// hand-rolled dense algebra, never the library's own integrators.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

/// int_a^b f for smooth f on a finite interval.
inline double integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 30, 1e-14);
}

/// int_a^b f with integrable endpoint singularities.
inline double integrate_singular(const std::function<double(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b, 1e-14);
}

/// int_a^inf f.
inline double integrate_to_inf(const std::function<double(double)>& f, double a) {
  boost::math::quadrature::exp_sinh<double> es;
  return es.integrate([&](double x) { return f(x + a); }, 0.0, std::numeric_limits<double>::infinity(),
                      1e-13);
}

/// int over R of a complex function, split into real and imaginary parts.
inline cplx integrate_real_line(const std::function<cplx(double)>& f) {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto part = [&](bool im) {
    auto g = [&](double t) {
      // x = tan(t)
      const double c = std::cos(t);
      const cplx v = f(std::tan(t)) / (c * c);
      return im ? v.imag() : v.real();
    };
    return ts.integrate(g, -kPi / 2, kPi / 2, 1e-13);
  };
  return {part(false), part(true)};
}

/// det(A - t I) for a real symmetric matrix of order <= 4 by cofactor
/// expansion.
inline double char_poly(const Eigen::MatrixXd& a, double t) {
  const long n = a.rows();
  Eigen::MatrixXd m = a - t * Eigen::MatrixXd::Identity(n, n);
  std::function<double(const Eigen::MatrixXd&)> det = [&](const Eigen::MatrixXd& x) -> double {
    if (x.rows() == 1) return x(0, 0);
    double sum = 0.0;
    for (long k = 0; k < x.cols(); ++k) {
      Eigen::MatrixXd minor(x.rows() - 1, x.cols() - 1);
      for (long i = 1; i < x.rows(); ++i) {
        long c = 0;
        for (long j = 0; j < x.cols(); ++j) {
          if (j == k) continue;
          minor(i - 1, c++) = x(i, j);
        }
      }
      sum += (k % 2 == 0 ? 1.0 : -1.0) * x(0, k) * det(minor);
    }
    return sum;
  };
  return det(m);
}

/// Smallest eigenvalue of a real symmetric matrix of order <= 4 by scanning
/// the characteristic polynomial for the first sign change and bisecting.
inline double min_eigenvalue(const Eigen::MatrixXd& a) {
  const double r = a.cwiseAbs().sum() + 1.0;
  const int steps = 200000;
  const double h = 2.0 * r / steps;
  double lo = -r;
  double flo = char_poly(a, lo);
  for (int i = 1; i <= steps; ++i) {
    const double x = -r + i * h;
    const double fx = char_poly(a, x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) != (flo > 0.0)) {
      double l = lo, u = x, fl = flo;
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (l + u);
        const double fm = char_poly(a, m);
        if ((fm > 0.0) == (fl > 0.0)) {
          l = m;
          fl = fm;
        } else {
          u = m;
        }
      }
      return 0.5 * (l + u);
    }
    lo = x;
    flo = fx;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

inline Eigen::MatrixXd hilbert(int n) {
  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) m(j, k) = 1.0 / (j + k + 1);
  }
  return m;
}

/// Uniform points in the open unit disc.
inline std::vector<cplx> disc_points(int n, unsigned seed, double radius = 0.95) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> r(0.0, 1.0), t(0.0, 2.0 * kPi);
  std::vector<cplx> out;
  for (int i = 0; i < n; ++i) out.push_back(std::polar(radius * std::sqrt(r(rng)), t(rng)));
  return out;
}

/// Points with Re in [-3, 3] and Im in [0.1, 3].
inline std::vector<cplx> upper_points(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.1, 3.0);
  std::vector<cplx> out;
  for (int i = 0; i < n; ++i) out.emplace_back(re(rng), im(rng));
  return out;
}

inline double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

}  // namespace oracle
