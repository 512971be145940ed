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

#include "hankelrp/transport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hankelrp/hankel.hpp"
#include "hankelrp/outer.hpp"

namespace hankelrp {

std::vector<ProbePair> default_probe_pairs() {
  const std::vector<cplx> pts{{0.0, 0.5}, {0.0, 1.0}, {0.0, 2.0}, {1.0, 1.0}, {-1.0, 2.0}};
  std::vector<ProbePair> out;
  for (const auto& z : pts) {
    for (const auto& w : pts) out.push_back({z, w});
  }
  return out;
}

namespace {

std::vector<double> symbol_breaks(const HalfPlaneMeasure& mu) {
  std::vector<double> out{0.0};
  for (double b : mu.breakpoints()) {
    out.push_back(b);
    out.push_back(-b);
  }
  return out;
}

}  // namespace

TransportReport verify_rp_transport(const HalfPlaneMeasure& mu, double c,
                                    std::span<const ProbePair> probes, grid::Exec exec) {
  if (c == 0.0 || !std::isfinite(c)) throw std::invalid_argument("verify_rp_transport needs c != 0");
  const auto breaks = symbol_breaks(mu);
  // u |delta| with u = delta / |delta|, minus the constant c. The constant's
  // contribution is integrated on its own below and must vanish.
  auto weighted = [&mu, c](double x) -> cplx {
    const cplx d = delta_value(mu, c, x);
    const double m = std::abs(d);
    return (d / m) * m - c;
  };
  auto constant = [c](double) -> cplx { return c; };

  std::vector<double> index(probes.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = static_cast<double>(i);
  const auto rows = grid::evaluate<TransportProbe>(
      index,
      [&](double di) {
        const ProbePair& p = probes[static_cast<std::size_t>(di)];
        TransportProbe r{p, {}, {}, {}, 0.0};
        r.measure_side = symbol_kernel_measure(mu, p.z, p.w);
        r.weighted_side = symbol_kernel_boundary(weighted, p.z, p.w, breaks);
        r.constant_part = symbol_kernel_boundary(constant, p.z, p.w, breaks);
        r.residual =
            std::abs(r.weighted_side - r.measure_side) / std::max(std::abs(r.measure_side), 1e-12);
        return r;
      },
      exec);

  TransportReport out;
  out.probes = rows;
  for (const auto& r : rows) {
    out.max_residual = std::max(out.max_residual, r.residual);
    out.max_constant_integral = std::max(out.max_constant_integral, std::abs(r.constant_part));
  }
  return out;
}

PolarReport polar_decomposition_check(const HalfPlaneMeasure& mu, double c,
                                      std::span<const double> points, grid::Exec exec) {
  if (c == 0.0 || !std::isfinite(c)) throw std::invalid_argument("polar check needs c != 0");
  std::vector<double> xs;
  for (double x : points) {
    if (!(x > 0.0)) throw std::invalid_argument("polar check points must be positive");
    xs.push_back(x);
    xs.push_back(-x);
  }
  const BoundaryWeight root = BoundaryWeight::delta_modulus(mu, c, 0.5);
  const auto g = grid::evaluate<cplx>(
      xs, [&root](double x) { return outer_eval(root, cplx(x, kBoundaryOffset)); }, exec);

  PolarReport r;
  r.points.assign(points.begin(), points.end());
  std::vector<cplx> h(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const cplx d = delta_value(mu, c, xs[i]);
    const double md = std::abs(d);
    r.modulus_residual = std::max(r.modulus_residual, std::abs(md - std::norm(g[i])) / md);
    const cplx gc = std::conj(g[i]);
    h[i] = d / (gc * gc);
    r.unimodular_residual = std::max(r.unimodular_residual, std::abs(std::abs(h[i]) - 1.0));
  }
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
    r.sharp_defect = std::max(r.sharp_defect, std::abs(h[i + 1] - std::conj(h[i])));
  }
  r.max_residual = std::max({r.modulus_residual, r.unimodular_residual, r.sharp_defect});
  return r;
}

}  // namespace hankelrp
