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

// Finitely presented positive measures on the half-line (0, inf) and on the
// interval (-1, 1): atoms plus power-law density pieces.

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankelrp/quadrature.hpp"

namespace hankelrp {

enum class Domain { kDisc, kHalfPlane };

const char* to_string(Domain d);

class InvalidMeasure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Atom {
  double position;
  double mass;
};

/// coeff * lambda^exponent on [lo, hi], 0 <= lo < hi <= inf.
struct PowerDensity {
  double coeff;
  double exponent;
  double lo;
  double hi;
};

/// Positive measure on (0, inf) with finite rho = mu / (1 + lambda^2).
class HalfPlaneMeasure {
 public:
  HalfPlaneMeasure() = default;
  HalfPlaneMeasure(std::vector<Atom> atoms, std::vector<PowerDensity> densities);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<PowerDensity>& densities() const { return densities_; }
  bool empty() const { return atoms_.empty() && densities_.empty(); }
  bool finite_mass() const;
  /// Throws InvalidMeasure when the mass is infinite.
  double total_mass() const;
  /// Atom positions and finite nonzero support endpoints, sorted.
  std::vector<double> breakpoints() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<PowerDensity> densities_;
};

/// coeff * (1 - x)^a (1 + x)^b x^s on [lo, hi] within [-1, 1]. The JSON
/// format only produces single-factor pieces; products arise from the
/// Cayley pushforward.
struct JacobiDensity {
  double coeff;
  double a = 0.0;
  double b = 0.0;
  double s = 0.0;
  double lo;
  double hi;
};

/// A point of [-1, 1] carried together with 1 - x and 1 + x so that masses
/// of short intervals at the ends are computed without cancellation.
struct Endpoint {
  double x;
  double one_minus;
  double one_plus;

  static Endpoint at(double x) { return {x, 1.0 - x, 1.0 + x}; }
  static Endpoint below_one(double s) { return {1.0 - s, s, 2.0 - s}; }
  static Endpoint above_minus_one(double s) { return {s - 1.0, 2.0 - s, s}; }
};

/// Finite positive measure on [-1, 1] without atoms at the ends.
class DiscMeasure {
 public:
  DiscMeasure() = default;
  DiscMeasure(std::vector<Atom> atoms, std::vector<JacobiDensity> densities);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<JacobiDensity>& densities() const { return densities_; }
  bool empty() const { return atoms_.empty() && densities_.empty(); }
  double total_mass() const;
  /// mu([lo, hi]).
  double mass(const Endpoint& lo, const Endpoint& hi) const;
  std::vector<double> breakpoints() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<JacobiDensity> densities_;
};

inline constexpr int kDefaultMomentCap = 4096;

/// c_j = int x^j dmu. Rejects j outside [0, cap].
double moment(const DiscMeasure& mu, int j, int cap = kDefaultMomentCap);
/// int |x|^j dmu, uncapped; used by the Widom scans.
double abs_moment(const DiscMeasure& mu, long j);

struct MomentVector {
  std::vector<double> values;
  std::optional<DiscMeasure> source;
};

/// c_0 ... c_{count-1}.
MomentVector moments(const DiscMeasure& mu, int count, int cap = kDefaultMomentCap);

/// phi(t) = int exp(-lambda t) dmu.
double laplace_transform(const HalfPlaneMeasure& mu, double t);

/// Interval of (0, inf] with independently open or closed ends.
struct Interval {
  double lo;
  double hi;
  bool lo_closed = false;
  bool hi_closed = true;
};

/// rho(I) = int_I dmu / (1 + lambda^2).
double rho_interval(const HalfPlaneMeasure& mu, const Interval& interval);
/// rho((0, eps]).
double rho_head(const HalfPlaneMeasure& mu, double eps);
/// rho([t, inf)).
double rho_tail(const HalfPlaneMeasure& mu, double t);
double rho_total(const HalfPlaneMeasure& mu);

/// Image under gamma(lambda) = (lambda - 1)/(lambda + 1) with density
/// (1 - t)^2 / 2 against the pushed-forward measure.
DiscMeasure cayley_pushforward(const HalfPlaneMeasure& mu);

namespace detail {

/// int_lo^hi lambda^e f(lambda) dlambda for 0 <= lo < hi <= inf with an
/// integrable power singularity at 0 and decay at infinity. The tail is
/// mapped by lambda = 1/u, so f must be written to stay finite for very
/// large arguments.
template <class T, class F>
T power_piece(F&& f, double e, double lo, double hi, const quad::Tolerance& tol) {
  T sum{};
  const double split = 1.0;
  const double a = lo;
  const double b = std::min(hi, split);
  if (a < b) {
    if (a == 0.0) {
      sum += quad::power_weighted_from_zero<T>(f, e, b, tol);
    } else {
      auto g = [&f, e](double x) -> T { return std::pow(x, e) * static_cast<T>(f(x)); };
      sum += quad::adaptive<T>(g, a, b, tol);
    }
  }
  const double c = std::max(lo, split);
  if (c < hi) {
    if (std::isfinite(hi)) {
      auto g = [&f, e](double x) -> T { return std::pow(x, e) * static_cast<T>(f(x)); };
      sum += quad::adaptive<T>(g, c, hi, tol);
    } else {
      // lambda = 1/u: int_0^{1/c} u^{-e} f(1/u) u^{-2} du.
      auto g = [&f](double u) -> T { return static_cast<T>(f(1.0 / u)) / (u * u); };
      sum += quad::power_weighted_from_zero<T>(g, -e, 1.0 / c, tol);
    }
  }
  return sum;
}

}  // namespace detail

/// int K dmu: atoms exactly, pieces with exponent 0 through the closed form
/// `lebesgue(lo, hi)` = int_lo^hi K, all other pieces by quadrature.
template <class T, class K, class L>
T integrate(const HalfPlaneMeasure& mu, K&& kernel, L&& lebesgue,
            const quad::Tolerance& tol = {}) {
  T sum{};
  for (const auto& atom : mu.atoms()) sum += atom.mass * static_cast<T>(kernel(atom.position));
  for (const auto& d : mu.densities()) {
    if (d.exponent == 0.0) {
      sum += d.coeff * static_cast<T>(lebesgue(d.lo, d.hi));
    } else {
      sum += d.coeff * detail::power_piece<T>(kernel, d.exponent, d.lo, d.hi, tol);
    }
  }
  return sum;
}

}  // namespace hankelrp
