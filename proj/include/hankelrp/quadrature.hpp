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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankelrp::quad {

/// Thrown when an adaptive rule cannot meet its tolerance within the panel
/// budget. Callers never see a silently truncated value.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-10;
  int max_panels = 40000;
};

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule make_gauss_legendre(int order);

/// The 20-point rule used by the adaptive integrator (built once).
const GaussLegendreRule& panel_rule();

template <class T, class F>
T apply_rule(const GaussLegendreRule& rule, F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  T sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * static_cast<T>(f(mid + half * rule.nodes[i]));
  }
  return half * sum;
}

namespace detail {

template <class T>
struct Panel {
  double a;
  double b;
  T left;   // rule on [a, m]
  T right;  // rule on [m, b]
  double err;
  std::size_t id;
};

template <class T>
struct PanelOrder {
  bool operator()(const Panel<T>& x, const Panel<T>& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.id > y.id;
  }
};

}  // namespace detail

/// Globally adaptive Gauss-Legendre integration of f over [a, b] with
/// dyadic panel splitting. The panel error is the difference between the
/// rule on the panel and the rule on its two halves; the panel with the
/// largest error is bisected until the summed error meets
/// max(tol.abs, tol.rel * |I|).
template <class T, class F>
T adaptive(F&& f, double a, double b, const Tolerance& tol = {}) {
  if (!(a < b)) {
    if (a == b) return T{};
    throw std::invalid_argument("quad::adaptive: reversed interval");
  }
  const auto& rule = panel_rule();
  using Panel = detail::Panel<T>;
  std::priority_queue<Panel, std::vector<Panel>, detail::PanelOrder<T>> open;
  std::vector<Panel> frozen;
  std::size_t next_id = 0;

  auto make_panel = [&](double lo, double hi, const T& whole) {
    const double m = 0.5 * (lo + hi);
    T l = apply_rule<T>(rule, f, lo, m);
    T r = apply_rule<T>(rule, f, m, hi);
    return Panel{lo, hi, l, r, std::abs(whole - (l + r)), next_id++};
  };

  open.push(make_panel(a, b, apply_rule<T>(rule, f, a, b)));
  T total = open.top().left + open.top().right;
  double total_err = open.top().err;
  int panels = 1;

  while (!open.empty()) {
    const double target = std::max(tol.abs, tol.rel * std::abs(total));
    if (total_err <= target) break;
    Panel p = open.top();
    open.pop();
    const double m = 0.5 * (p.a + p.b);
    if (!(p.a < m && m < p.b) || (p.b - p.a) <= 1e-15 * std::max(1.0, std::abs(m))) {
      frozen.push_back(p);
      continue;
    }
    if (++panels > tol.max_panels) {
      throw QuadratureError("adaptive quadrature did not converge on [" + std::to_string(a) +
                            ", " + std::to_string(b) + "], error estimate " +
                            std::to_string(total_err));
    }
    Panel lp = make_panel(p.a, m, p.left);
    Panel rp = make_panel(m, p.b, p.right);
    total += (lp.left + lp.right + rp.left + rp.right) - (p.left + p.right);
    total_err += lp.err + rp.err - p.err;
    open.push(lp);
    open.push(rp);
  }

  // Re-sum in a fixed order so the result does not carry the drift of the
  // running update.
  std::vector<Panel> all = std::move(frozen);
  while (!open.empty()) {
    all.push_back(open.top());
    open.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  T sum{};
  double err_sum = 0.0;
  for (const auto& p : all) {
    sum += p.left + p.right;
    err_sum += p.err;
  }
  if (err_sum > std::max(tol.abs, tol.rel * std::abs(sum)) * 16.0) {
    throw QuadratureError("adaptive quadrature stalled on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "], error estimate " + std::to_string(err_sum));
  }
  return sum;
}

/// Sum of adaptive integrals over consecutive breakpoints (sorted, deduplicated).
template <class T, class F>
T adaptive_pieces(F&& f, std::vector<double> breaks, const Tolerance& tol = {}) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  T sum{};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    sum += adaptive<T>(f, breaks[i], breaks[i + 1], tol);
  }
  return sum;
}

/// Integral over the real line via x = tan(theta). `breaks` are real points
/// where the integrand is not smooth (jumps, kinks, near-poles).
template <class T, class F>
T real_line(F&& f, std::span<const double> breaks, const Tolerance& tol = {}) {
  constexpr double kHalfPi = std::numbers::pi / 2;
  std::vector<double> thetas{-kHalfPi, kHalfPi};
  for (double x : breaks) {
    if (std::isfinite(x)) thetas.push_back(std::atan(x));
  }
  auto mapped = [&f](double theta) -> T {
    const double c = std::cos(theta);
    return static_cast<T>(f(std::tan(theta))) / (c * c);
  };
  return adaptive_pieces<T>(mapped, std::move(thetas), tol);
}

/// Integral over [a, +inf) via x = tan(theta); requires a >= 0 is not needed
/// but the integrand must decay at least like |x|^{-1-eps}.
template <class T, class F>
T half_line(F&& f, double a, std::span<const double> breaks, const Tolerance& tol = {}) {
  constexpr double kHalfPi = std::numbers::pi / 2;
  std::vector<double> thetas{std::atan(a), kHalfPi};
  for (double x : breaks) {
    if (std::isfinite(x) && x > a) thetas.push_back(std::atan(x));
  }
  auto mapped = [&f](double theta) -> T {
    const double c = std::cos(theta);
    return static_cast<T>(f(std::tan(theta))) / (c * c);
  };
  return adaptive_pieces<T>(mapped, std::move(thetas), tol);
}

/// Integral of x^e g(x) over [0, b] for e > -1, with the endpoint power
/// absorbed by u = x^{e+1}.
template <class T, class G>
T power_weighted_from_zero(G&& g, double e, double b, const Tolerance& tol = {}) {
  if (!(e > -1.0)) throw std::invalid_argument("power weight exponent must exceed -1");
  const double q = e + 1.0;
  auto mapped = [&g, q](double u) -> T { return static_cast<T>(g(std::pow(u, 1.0 / q))); };
  return adaptive<T>(mapped, 0.0, std::pow(b, q), tol) / q;
}

}  // namespace hankelrp::quad
