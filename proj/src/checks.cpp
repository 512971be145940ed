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

#include "hankelrp/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hankelrp/hankel.hpp"
#include "hankelrp/outer.hpp"
#include "hankelrp/pick.hpp"

namespace hankelrp {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

// psi is itself a quadrature, so the outer rule only has to resolve it well
// below the 1e-6 level its residuals are compared against.
constexpr quad::Tolerance kPsiOuter{1e-13, 1e-8, 4000};

std::vector<double> mirrored_breaks(const HalfPlaneMeasure& mu) {
  std::vector<double> out{0.0};
  for (double b : mu.breakpoints()) {
    out.push_back(b);
    out.push_back(-b);
  }
  return out;
}

std::vector<double> indices(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(i);
  return out;
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

// mu((0, a]).
double mass_up_to(const HalfPlaneMeasure& mu, double a) {
  double sum = 0.0;
  for (const auto& atom : mu.atoms()) {
    if (atom.position <= a) sum += atom.mass;
  }
  for (const auto& d : mu.densities()) {
    const double hi = std::min(d.hi, a);
    if (!(d.lo < hi)) continue;
    const double e1 = d.exponent + 1.0;
    sum += d.coeff * (e1 == 0.0 ? std::log(hi / d.lo) : (std::pow(hi, e1) - std::pow(d.lo, e1)) / e1);
  }
  return sum;
}

}  // namespace

double reconstruction_residual(const HalfPlaneMeasure& mu, std::span<const ProbePair> probes,
                               grid::Exec exec) {
  const auto breaks = mirrored_breaks(mu);
  auto h = [&mu](double x) -> cplx { return x == 0.0 ? cplx{} : symbol_h(mu, x); };
  const auto res = grid::evaluate<double>(
      indices(probes.size()),
      [&](double di) {
        const ProbePair& p = probes[static_cast<std::size_t>(di)];
        const cplx m = symbol_kernel_measure(mu, p.z, p.w);
        const cplx b = symbol_kernel_boundary(h, p.z, p.w, breaks);
        return std::abs(b - m) / std::max(std::abs(m), 1e-12);
      },
      exec);
  return max_of(res);
}

std::vector<ProbePair> right_half_plane_pairs(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(0.05, 3.0);
  std::uniform_real_distribution<double> im(-3.0, 3.0);
  std::vector<ProbePair> out;
  while (static_cast<int>(out.size()) < count) {
    const cplx z(re(rng), im(rng));
    const cplx w(re(rng), im(rng));
    if (std::abs(z - w) > 1e-3) out.push_back({z, w});
  }
  return out;
}

double difference_quotient_residual(const HalfPlaneMeasure& mu, std::span<const ProbePair> pairs,
                                    grid::Exec exec) {
  const auto res = grid::evaluate<double>(
      indices(pairs.size()),
      [&](double di) {
        const ProbePair& p = pairs[static_cast<std::size_t>(di)];
        const cplx lhs = (kappa(mu, p.z) - kappa(mu, p.w)) / (p.z - p.w);
        const cplx rhs = 4.0 * kPi * kPi * symbol_kernel_measure(mu, kI * p.z, kI * std::conj(p.w));
        return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
      },
      exec);
  return max_of(res);
}

double superposition_residual(const HalfPlaneMeasure& mu, std::span<const ProbePair> probes) {
  if (mu.atoms().empty()) return 0.0;
  const HalfPlaneMeasure atomic(mu.atoms(), {});
  double worst = 0.0;
  for (const auto& p : probes) {
    const cplx m = symbol_kernel_measure(atomic, p.z, p.w);
    cplx sum{};
    for (const auto& a : mu.atoms()) sum += a.mass * symbol_kernel_rank_one(a.position, p.z, p.w);
    worst = std::max(worst, std::abs(m - sum) / std::abs(sum));
  }
  return worst;
}

double lower_bound_shortfall(const HalfPlaneMeasure& mu, std::span<const double> ps) {
  double worst = 0.0;
  for (const auto& atom : mu.atoms()) {
    const double a = atom.position;
    const double head = mass_up_to(mu, a) / kPi;
    for (double p : ps) {
      const double bound = head * std::abs(p) / (a * a + p * p);
      const double value = std::abs(symbol_h(mu, p));
      worst = std::max(worst, (bound - value) / bound);
    }
  }
  return worst;
}

double kappa_envelope_excess(const HalfPlaneMeasure& mu, double alpha, std::span<const double> ps) {
  double worst = 0.0;
  for (double p : ps) {
    const double lhs = std::abs(kappa(mu, kI * p).real());
    const double rhs = 8.0 * alpha * std::abs(std::log(std::abs(p)));
    worst = std::max(worst, lhs - rhs);
  }
  return worst;
}

ChainComparison cayley_chain(const HalfPlaneMeasure& mu, double c, int order, int nodes,
                             grid::Exec exec) {
  auto delta = [&mu, c](double x) { return delta_value(mu, c, x); };
  const SymbolSamples k = hp_to_disc_symbol(delta, nodes, true, exec);
  const HankelSection sym = section_from_symbol_disc(k, order, Reflection::kPlain, exec);
  const HankelSection mom = section_from_moments(moments(cayley_pushforward(mu), 2 * order - 1), order);
  ChainComparison out;
  out.symbol_side = sym.to_monomial();
  out.moment_side = mom.to_monomial();
  out.max_entry_error = (out.symbol_side - out.moment_side).cwiseAbs().maxCoeff();
  return out;
}

double integration_by_parts_residual(const DiscMeasure& mu, int j) {
  const double direct = moment(mu, j);
  const double total = mu.total_mass();
  const double sign = j % 2 == 0 ? 1.0 : -1.0;
  double rhs = total * sign;
  if (j > 0) {
    std::vector<double> breaks{-1.0, 0.0, 1.0};
    for (double b : mu.breakpoints()) breaks.push_back(b);
    auto f = [&mu, j](double t) {
      return mu.mass(Endpoint::at(t), Endpoint::at(1.0)) * j * std::pow(t, j - 1);
    };
    rhs += quad::adaptive_pieces<double>(f, breaks, quad::Tolerance{1e-300, 1e-13, 200000});
  }
  const double scale = abs_moment(mu, j);
  return scale > 0.0 ? std::abs(direct - rhs) / scale : std::abs(direct - rhs);
}

double psi_mass_residual(const HalfPlaneMeasure& mu) {
  const double total = mu.total_mass();
  auto psi = [&mu](double x) { return psi_mu(mu, x); };
  const auto breaks = mu.breakpoints();
  const double integral = 2.0 * quad::half_line<double>(psi, 0.0, breaks, kPsiOuter);
  return std::abs(integral - total) / total;
}

double psi_fourier_residual(const HalfPlaneMeasure& mu, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("psi_fourier_residual: t must be > 0");
  // psi is even, so the transform is 2 int_0^inf cos(tx) psi(x) dx. Integrate
  // over whole periods; the remaining tail is O(psi'(X)/t^2).
  const int periods = 4000;
  const double period = 2.0 * kPi / t;
  std::vector<double> breaks;
  for (int k = 0; k <= periods; ++k) breaks.push_back(k * period);
  for (double b : mu.breakpoints()) {
    if (b < periods * period) breaks.push_back(b);
  }
  auto f = [&mu, t](double x) { return std::cos(t * x) * psi_mu(mu, x); };
  const double lhs = 2.0 * quad::adaptive_pieces<double>(f, breaks, kPsiOuter);
  const double rhs = laplace_transform(mu, t);
  return std::abs(lhs - rhs) / rhs;
}

double outer_inverse_residual(const HalfPlaneMeasure& mu, double c, std::span<const cplx> zs) {
  const BoundaryWeight inv = BoundaryWeight::delta_modulus(mu, c, -0.5);
  double worst = 0.0;
  for (const auto& z : zs) {
    worst = std::max(worst, std::abs(g_from_delta(mu, c, z) * outer_eval(inv, z) - 1.0));
  }
  return worst;
}

}  // namespace hankelrp
