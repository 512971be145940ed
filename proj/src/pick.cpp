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

#include "hankelrp/pick.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hankelrp {

namespace {

const cplx kI{0.0, 1.0};

cplx log1p_complex(cplx w) {
  if (std::abs(w) < 1e-4) {
    // Four terms reach double precision for |w| < 1e-4.
    const cplx w2 = w * w;
    return w - w2 / 2.0 + w2 * w / 3.0 - w2 * w2 / 4.0;
  }
  return std::log(1.0 + w);
}

// F(lambda) = log(1 + lambda^2)/2 - log(z + lambda), an antiderivative of
// the Pick integrand with F(inf) = 0.
cplx kappa_antiderivative(cplx z, double lambda) {
  if (std::isinf(lambda)) return {};
  if (lambda > 1.0) {
    return 0.5 * std::log1p(1.0 / (lambda * lambda)) - log1p_complex(z / lambda);
  }
  return 0.5 * std::log1p(lambda * lambda) - std::log(z + lambda);
}

// int_lo^hi p/(lambda^2 + p^2) dlambda = atan(hi/p) - atan(lo/p).
double symbol_lebesgue(double p, double lo, double hi) {
  if (std::isinf(hi)) return lo == 0.0 ? std::copysign(std::numbers::pi / 2, p) : std::atan(p / lo);
  return std::atan((hi - lo) * p / (p * p + lo * hi));
}

}  // namespace

cplx kappa(const HalfPlaneMeasure& mu, cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0) throw std::domain_error("kappa: z lies on the cut");
  for (const auto& a : mu.atoms()) {
    if (std::abs(z + a.position) < 1e-14) throw std::domain_error("kappa: z hits an atom pole");
  }
  // lambda/(1+lambda^2) - 1/(z+lambda) over a common denominator.
  auto kernel = [z](double lambda) -> cplx {
    return (lambda * z - 1.0) / ((1.0 + lambda * lambda) * (z + lambda));
  };
  auto lebesgue = [z](double lo, double hi) -> cplx {
    return kappa_antiderivative(z, hi) - kappa_antiderivative(z, lo);
  };
  return integrate<cplx>(mu, kernel, lebesgue);
}

cplx symbol_h(const HalfPlaneMeasure& mu, double p) {
  if (p == 0.0 || !std::isfinite(p)) throw std::domain_error("symbol_h: p must be finite and nonzero");
  auto kernel = [p](double lambda) { return p / (lambda * lambda + p * p); };
  auto lebesgue = [p](double lo, double hi) { return symbol_lebesgue(p, lo, hi); };
  return kI * (integrate<double>(mu, kernel, lebesgue) / std::numbers::pi);
}

double symbol_bound(const WidomReport& report) {
  if (report.verdict != Verdict::kBounded) {
    throw NotBoundedError(std::string("symbol_bound requires a bounded measure, verdict is ") +
                          to_string(report.verdict));
  }
  return report.rho_total / std::numbers::pi + 0.5 * std::max(report.beta, report.gamma);
}

double symbol_bound(const HalfPlaneMeasure& mu) { return symbol_bound(widom_check(mu)); }

double psi_mu(const HalfPlaneMeasure& mu, double x) {
  if (!mu.finite_mass()) throw InvalidMeasure("psi_mu requires a measure of finite total mass");
  auto kernel = [x](double lambda) { return lambda / (lambda * lambda + x * x); };
  auto lebesgue = [x](double lo, double hi) {
    return 0.5 * std::log((hi * hi + x * x) / (lo * lo + x * x));
  };
  return integrate<double>(mu, kernel, lebesgue) / std::numbers::pi;
}

SymbolSamples sample_symbol(const HalfPlaneMeasure& mu, const SymbolGrid& g, grid::Exec exec) {
  const double span = std::pow(10.0, g.decades);
  std::vector<double> positive = grid::log_space(1.0 / span, span, g.points);
  for (double b : mu.breakpoints()) positive.push_back(b);
  std::sort(positive.begin(), positive.end());
  positive.erase(std::unique(positive.begin(), positive.end()), positive.end());

  const auto magnitudes = grid::evaluate<double>(
      positive, [&mu](double p) { return symbol_h(mu, p).imag(); }, exec);

  SymbolSamples s;
  s.domain = Domain::kHalfPlane;
  s.sharp_symmetric = true;
  const std::size_t n = positive.size();
  s.grid.resize(2 * n);
  s.values.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    // Oddness is exact, so the negative half is filled by reflection.
    s.grid[n - 1 - i] = -positive[i];
    s.values[n - 1 - i] = cplx(0.0, -magnitudes[i]);
    s.grid[n + i] = positive[i];
    s.values[n + i] = cplx(0.0, magnitudes[i]);
  }

  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(magnitudes[i]) > std::abs(magnitudes[best])) best = i;
  }
  double sup = n ? std::abs(magnitudes[best]) : 0.0;
  if (n >= 3 && sup > 0.0) {
    // Golden-section search in log p between the neighbours of the best node.
    double lo = std::log(positive[best == 0 ? 0 : best - 1]);
    double hi = std::log(positive[std::min(best + 1, n - 1)]);
    auto f = [&mu](double t) { return std::abs(symbol_h(mu, std::exp(t)).imag()); };
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - r * (hi - lo);
    double x2 = lo + r * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + r * (hi - lo);
        f2 = f(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - r * (hi - lo);
        f1 = f(x1);
      }
    }
    sup = std::max({sup, f1, f2});
  }
  s.sup_estimate = sup;
  return s;
}

double sharp_symmetry_defect(const SymbolSamples& s) {
  double worst = 0.0;
  const std::size_t n = s.grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    const bool mirrored = s.domain == Domain::kHalfPlane
                              ? s.grid[j] == -s.grid[i]
                              : std::abs(s.grid[i] + s.grid[j] - 2.0 * std::numbers::pi) < 1e-12;
    if (!mirrored) throw std::invalid_argument("sharp_symmetry_defect: grid not symmetric");
    worst = std::max(worst, std::abs(s.values[j] - std::conj(s.values[i])));
  }
  return worst;
}

}  // namespace hankelrp
