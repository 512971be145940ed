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

#include "hankelrp/widom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hankelrp {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kBounded:
      return "bounded";
    case Verdict::kUnbounded:
      return "unbounded";
    default:
      return "inconclusive";
  }
}

Verdict stability_verdict(const std::vector<double>& coarse, const std::vector<double>& fine) {
  double worst_change = 0.0;
  double worst_growth = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const double c = coarse[i];
    const double f = fine[i];
    if (!std::isfinite(c) || !std::isfinite(f)) return Verdict::kUnbounded;
    double rel = 0.0;
    if (c > 0.0) {
      rel = (f - c) / c;
    } else if (f > 0.0) {
      return Verdict::kUnbounded;
    }
    worst_change = std::max(worst_change, std::abs(rel));
    worst_growth = std::max(worst_growth, rel);
  }
  if (worst_growth >= 0.10) return Verdict::kUnbounded;
  if (worst_change < 0.01) return Verdict::kBounded;
  return Verdict::kInconclusive;
}

namespace {

void check_grid(const WidomGrid& g) {
  if (g.coarse.probes < 16 || g.fine.probes < 16) {
    throw std::invalid_argument("widom grid needs at least 16 probes per level");
  }
  if (!(g.coarse.decades > 0.0 && g.fine.decades >= g.coarse.decades)) {
    throw std::invalid_argument("widom fine level must span at least the coarse level");
  }
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

std::vector<double> with_extra(std::vector<double> base, const std::vector<double>& extra) {
  for (double x : extra) {
    if (x > 0.0 && std::isfinite(x)) base.push_back(x);
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return base;
}

std::vector<double> exponent_grid(double hi, int probes) {
  std::vector<double> js{0.0};
  for (double x : grid::log_space(1.0, hi, probes)) js.push_back(std::round(x));
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  return js;
}

double moment_sup(const DiscMeasure& mu, double max_exponent, int probes, grid::Exec exec) {
  const auto js = exponent_grid(max_exponent, probes);
  const auto vals = grid::evaluate<double>(
      js, [&mu](double j) { return (j + 1.0) * abs_moment(mu, static_cast<long>(j)); }, exec);
  return max_of(vals);
}

WidomLevelValues half_plane_level(const HalfPlaneMeasure& mu, const GridLevel& level,
                                  grid::Exec exec) {
  const double span = std::pow(10.0, level.decades);
  const auto probes = with_extra(grid::log_space(1.0 / span, span, level.probes), mu.breakpoints());
  const auto head = grid::evaluate<double>(
      probes, [&mu](double e) { return rho_head(mu, e) / e; }, exec);
  const auto tail = grid::evaluate<double>(
      probes, [&mu](double t) { return t * rho_tail(mu, t); }, exec);
  return {max_of(head), max_of(tail), 0.0};
}

WidomLevelValues disc_level(const DiscMeasure& mu, const GridLevel& level, grid::Exec exec) {
  const double span = std::pow(10.0, level.decades);
  const auto base = grid::log_space(1.0 / span, 2.0, level.probes);
  std::vector<double> from_top;
  std::vector<double> from_bottom;
  for (double x : mu.breakpoints()) {
    from_top.push_back(1.0 - x);
    from_bottom.push_back(1.0 + x);
  }
  const auto tail_probes = with_extra(base, from_top);
  const auto head_probes = with_extra(base, from_bottom);
  const auto tail = grid::evaluate<double>(
      tail_probes,
      [&mu](double s) { return mu.mass(Endpoint::below_one(s), Endpoint::at(1.0)) / s; }, exec);
  const auto head = grid::evaluate<double>(
      head_probes,
      [&mu](double s) { return mu.mass(Endpoint::at(-1.0), Endpoint::above_minus_one(s)) / s; },
      exec);
  return {max_of(head), max_of(tail), moment_sup(mu, span, level.probes, exec)};
}

}  // namespace

WidomReport widom_check(const HalfPlaneMeasure& mu, const WidomGrid& grid, grid::Exec exec) {
  check_grid(grid);
  WidomReport r;
  r.domain = Domain::kHalfPlane;
  r.grid = grid;
  r.coarse = half_plane_level(mu, grid.coarse, exec);
  r.fine = half_plane_level(mu, grid.fine, exec);
  r.beta = r.fine.beta;
  r.gamma = r.fine.gamma;
  r.rho_total = rho_total(mu);
  const DiscMeasure pushed = cayley_pushforward(mu);
  r.moment_sup = moment_sup(pushed, static_cast<double>(grid.alpha_max_exponent), grid.alpha_probes,
                            exec);
  r.alpha_estimate = 0.5 * r.moment_sup;
  r.verdict = stability_verdict({r.coarse.beta, r.coarse.gamma}, {r.fine.beta, r.fine.gamma});
  return r;
}

WidomReport widom_check(const DiscMeasure& mu, const WidomGrid& grid, grid::Exec exec) {
  check_grid(grid);
  WidomReport r;
  r.domain = Domain::kDisc;
  r.grid = grid;
  r.coarse = disc_level(mu, grid.coarse, exec);
  r.fine = disc_level(mu, grid.fine, exec);
  r.beta = r.fine.beta;
  r.gamma = r.fine.gamma;
  r.moment_sup = r.fine.moment_sup;
  r.alpha_estimate = 0.5 * r.moment_sup;
  r.rho_total = mu.total_mass();
  r.verdict = stability_verdict({r.coarse.beta, r.coarse.gamma, r.coarse.moment_sup},
                                {r.fine.beta, r.fine.gamma, r.fine.moment_sup});
  return r;
}

}  // namespace hankelrp
