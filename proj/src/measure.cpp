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

#include "hankelrp/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/beta.hpp>

namespace hankelrp {

const char* to_string(Domain d) { return d == Domain::kDisc ? "disc" : "halfplane"; }

namespace {

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }
bool whole(double v) { return v == std::floor(v); }
bool nonneg_whole(double v) { return v >= 0.0 && whole(v); }

// Disc pieces use a tighter relative tolerance than the default so that the
// quadrature fallback matches the closed forms to near machine precision.
const quad::Tolerance kPieceTol{1e-300, 1e-13, 200000};

}  // namespace

// ---------------------------------------------------------------------------
// Half-plane measures

HalfPlaneMeasure::HalfPlaneMeasure(std::vector<Atom> atoms, std::vector<PowerDensity> densities)
    : atoms_(std::move(atoms)), densities_(std::move(densities)) {
  for (const auto& a : atoms_) {
    if (!finite_positive(a.position)) throw InvalidMeasure("atom position must be > 0");
    if (!finite_positive(a.mass)) throw InvalidMeasure("atom mass must be > 0");
  }
  for (const auto& d : densities_) {
    if (!finite_positive(d.coeff)) throw InvalidMeasure("density coefficient must be > 0");
    if (!std::isfinite(d.exponent)) throw InvalidMeasure("density exponent must be finite");
    if (!(std::isfinite(d.lo) && d.lo >= 0.0 && d.hi > d.lo && !std::isnan(d.hi))) {
      throw InvalidMeasure("density support must satisfy 0 <= lo < hi <= inf");
    }
    if (d.lo == 0.0 && !(d.exponent > -1.0)) {
      throw InvalidMeasure("density exponent must exceed -1 on a support touching 0");
    }
    if (std::isinf(d.hi) && !(d.exponent < 1.0)) {
      throw InvalidMeasure("density exponent must be below 1 on an unbounded support");
    }
  }
}

bool HalfPlaneMeasure::finite_mass() const {
  return std::all_of(densities_.begin(), densities_.end(), [](const PowerDensity& d) {
    return std::isfinite(d.hi) || d.exponent < -1.0;
  });
}

double HalfPlaneMeasure::total_mass() const {
  if (!finite_mass()) throw InvalidMeasure("measure has infinite total mass");
  double sum = 0.0;
  for (const auto& a : atoms_) sum += a.mass;
  for (const auto& d : densities_) {
    const double e1 = d.exponent + 1.0;
    double piece;
    if (std::isinf(d.hi)) {
      piece = -std::pow(d.lo, e1) / e1;
    } else if (e1 == 0.0) {
      piece = std::log(d.hi / d.lo);
    } else {
      piece = (std::pow(d.hi, e1) - std::pow(d.lo, e1)) / e1;
    }
    sum += d.coeff * piece;
  }
  return sum;
}

std::vector<double> HalfPlaneMeasure::breakpoints() const {
  std::vector<double> out;
  for (const auto& a : atoms_) out.push_back(a.position);
  for (const auto& d : densities_) {
    if (d.lo > 0.0) out.push_back(d.lo);
    if (std::isfinite(d.hi)) out.push_back(d.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double laplace_transform(const HalfPlaneMeasure& mu, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("laplace_transform: t must be > 0");
  auto kernel = [t](double lambda) { return std::exp(-lambda * t); };
  auto lebesgue = [t](double lo, double hi) {
    if (std::isinf(hi)) return std::exp(-lo * t) / t;
    return -std::expm1(-(hi - lo) * t) * std::exp(-lo * t) / t;
  };
  const double value = integrate<double>(mu, kernel, lebesgue);
  if (!std::isfinite(value)) throw std::domain_error("laplace_transform diverges");
  return value;
}

namespace {

// int_lo^hi dlambda / (1 + lambda^2) without cancellation for large bounds.
double atan_difference(double lo, double hi) {
  if (std::isinf(hi)) return lo == 0.0 ? std::numbers::pi / 2 : std::atan(1.0 / lo);
  return std::atan2(hi - lo, 1.0 + lo * hi);
}

bool contains(const Interval& in, double x) {
  const bool above = in.lo_closed ? x >= in.lo : x > in.lo;
  const bool below = in.hi_closed ? x <= in.hi : x < in.hi;
  return above && below;
}

}  // namespace

double rho_interval(const HalfPlaneMeasure& mu, const Interval& in) {
  if (!(in.lo >= 0.0 && in.hi >= in.lo) || std::isnan(in.hi)) {
    throw std::invalid_argument("rho_interval: bad interval");
  }
  double sum = 0.0;
  for (const auto& a : mu.atoms()) {
    if (contains(in, a.position)) sum += a.mass / (1.0 + a.position * a.position);
  }
  for (const auto& d : mu.densities()) {
    const double lo = std::max(d.lo, in.lo);
    const double hi = std::min(d.hi, in.hi);
    if (!(lo < hi)) continue;
    if (d.exponent == 0.0) {
      sum += d.coeff * atan_difference(lo, hi);
    } else {
      auto f = [](double x) { return 1.0 / (1.0 + x * x); };
      sum += d.coeff * detail::power_piece<double>(f, d.exponent, lo, hi, quad::Tolerance{});
    }
  }
  return sum;
}

double rho_head(const HalfPlaneMeasure& mu, double eps) {
  return rho_interval(mu, Interval{0.0, eps, false, true});
}

double rho_tail(const HalfPlaneMeasure& mu, double t) {
  return rho_interval(mu, Interval{t, kInf, true, true});
}

double rho_total(const HalfPlaneMeasure& mu) {
  return rho_interval(mu, Interval{0.0, kInf, false, true});
}

DiscMeasure cayley_pushforward(const HalfPlaneMeasure& mu) {
  std::vector<Atom> atoms;
  for (const auto& a : mu.atoms()) {
    const double x = (a.position - 1.0) / (a.position + 1.0);
    // (1 - x)^2 / 2 = 2 / (lambda + 1)^2.
    const double w = 2.0 / ((a.position + 1.0) * (a.position + 1.0));
    atoms.push_back({x, a.mass * w});
  }
  std::vector<JacobiDensity> densities;
  for (const auto& d : mu.densities()) {
    // lambda^e dlambda becomes ((1 + t)/(1 - t))^e dt after the weight.
    const double lo = (d.lo - 1.0) / (d.lo + 1.0);
    const double hi = std::isinf(d.hi) ? 1.0 : (d.hi - 1.0) / (d.hi + 1.0);
    densities.push_back({d.coeff, -d.exponent, d.exponent, 0.0, lo, hi});
  }
  return DiscMeasure(std::move(atoms), std::move(densities));
}

// ---------------------------------------------------------------------------
// Disc measures

DiscMeasure::DiscMeasure(std::vector<Atom> atoms, std::vector<JacobiDensity> densities)
    : atoms_(std::move(atoms)), densities_(std::move(densities)) {
  for (const auto& a : atoms_) {
    if (!(std::isfinite(a.position) && a.position > -1.0 && a.position < 1.0)) {
      throw InvalidMeasure("disc atom position must lie in (-1, 1)");
    }
    if (!finite_positive(a.mass)) throw InvalidMeasure("atom mass must be > 0");
  }
  for (const auto& d : densities_) {
    if (!finite_positive(d.coeff)) throw InvalidMeasure("density coefficient must be > 0");
    if (!(std::isfinite(d.a) && std::isfinite(d.b) && std::isfinite(d.s))) {
      throw InvalidMeasure("density exponents must be finite");
    }
    if (!(d.lo >= -1.0 && d.hi <= 1.0 && d.lo < d.hi)) {
      throw InvalidMeasure("disc density support must satisfy -1 <= lo < hi <= 1");
    }
    if (d.hi == 1.0 && !(d.a > -1.0)) {
      throw InvalidMeasure("exponent of (1 - x) must exceed -1 on a support touching 1");
    }
    if (d.lo == -1.0 && !(d.b > -1.0)) {
      throw InvalidMeasure("exponent of (1 + x) must exceed -1 on a support touching -1");
    }
    if (d.lo < 0.0 && !whole(d.s)) {
      throw InvalidMeasure("fractional powers of x need a support in [0, 1]");
    }
    if (d.lo < 0.0 && whole(d.s) && std::fmod(d.s, 2.0) != 0.0) {
      throw InvalidMeasure("odd powers of x are negative on a support reaching below 0");
    }
    if (d.lo <= 0.0 && d.hi >= 0.0 && !(d.s > -1.0)) {
      throw InvalidMeasure("exponent of x must exceed -1 on a support touching 0");
    }
  }
}

namespace {

double piece_weight(const JacobiDensity& d, double x) {
  double w = d.coeff;
  if (d.a != 0.0) w *= std::pow(1.0 - x, d.a);
  if (d.b != 0.0) w *= std::pow(1.0 + x, d.b);
  if (d.s != 0.0) w *= std::pow(x, d.s);
  return w;
}

// int_lo^hi |x|^j w(x) dx by quadrature; [lo, hi] lies on one side of 0.
// Integrable endpoint singularities at -1, 0 and 1 are absorbed by a power
// substitution on the half of the interval touching them.
double quadrature_abs_piece(const JacobiDensity& d, double j, double lo, double hi) {
  auto f = [&d, j](double x) { return std::pow(std::abs(x), j) * piece_weight(d, x); };
  const bool sing_minus_one = lo == -1.0 && !nonneg_whole(d.b);
  const bool sing_zero = lo == 0.0 && !nonneg_whole(d.s);
  const bool sing_one = hi == 1.0 && !nonneg_whole(d.a);
  if (!sing_minus_one && !sing_zero && !sing_one) return quad::adaptive<double>(f, lo, hi, kPieceTol);

  const double m = 0.5 * (lo + hi);
  double sum = 0.0;
  if (sing_minus_one) {
    JacobiDensity rest = d;
    rest.b = 0.0;
    auto g = [&rest, j](double t) {
      const double x = t - 1.0;
      return std::pow(std::abs(x), j) * piece_weight(rest, x);
    };
    sum += quad::power_weighted_from_zero<double>(g, d.b, m + 1.0, kPieceTol);
  } else if (sing_zero) {
    JacobiDensity rest = d;
    rest.s = 0.0;
    auto g = [&rest, j](double x) { return std::pow(x, j) * piece_weight(rest, x); };
    sum += quad::power_weighted_from_zero<double>(g, d.s, m, kPieceTol);
  } else {
    sum += quad::adaptive<double>(f, lo, m, kPieceTol);
  }
  if (sing_one) {
    JacobiDensity rest = d;
    rest.a = 0.0;
    auto g = [&rest, j](double t) {
      const double x = 1.0 - t;
      return std::pow(std::abs(x), j) * piece_weight(rest, x);
    };
    sum += quad::power_weighted_from_zero<double>(g, d.a, 1.0 - m, kPieceTol);
  } else {
    sum += quad::adaptive<double>(f, m, hi, kPieceTol);
  }
  return sum;
}

// int_u^v y^n dy for 0 <= u < v.
double power_antiderivative_difference(double n, double u, double v) {
  if (n == -1.0) return std::log(v / u);
  return (std::pow(v, n + 1.0) - std::pow(u, n + 1.0)) / (n + 1.0);
}

// Non-normalized incomplete beta B(x; p, q) = int_0^x y^{p-1} (1 - y)^{q-1} dy.
double incomplete_beta(double p, double q, double x) {
  if (x <= 0.0) return 0.0;
  return boost::math::beta(p, q, std::min(x, 1.0));
}

// int_lo^hi |x|^j w(x) dx for a sub-interval on one side of 0. Closed forms:
//   x^s alone:        int |x|^{j+s} dx (elementary);
//   (1 - x)^a on x>0: B(hi; j+1, a+1) - B(lo; j+1, a+1);
//   (1 + x)^b on x<0: mirror image of the previous case.
double abs_piece(const JacobiDensity& d, double j, double lo, double hi) {
  if (!(lo < hi)) return 0.0;
  const bool positive = lo >= 0.0;
  const double u = positive ? lo : -hi;
  const double v = positive ? hi : -lo;
  if (d.a == 0.0 && d.b == 0.0) {
    return d.coeff * power_antiderivative_difference(j + d.s, u, v);
  }
  if (d.b == 0.0 && d.s == 0.0 && positive && d.a > -1.0) {
    return d.coeff * (incomplete_beta(j + 1.0, d.a + 1.0, v) - incomplete_beta(j + 1.0, d.a + 1.0, u));
  }
  if (d.a == 0.0 && d.s == 0.0 && !positive && d.b > -1.0) {
    return d.coeff * (incomplete_beta(j + 1.0, d.b + 1.0, v) - incomplete_beta(j + 1.0, d.b + 1.0, u));
  }
  return quadrature_abs_piece(d, j, lo, hi);
}

// Signed and absolute moments of one piece, split at 0.
double piece_moment(const JacobiDensity& d, long j, bool absolute) {
  double sum = 0.0;
  if (d.hi > 0.0) sum += abs_piece(d, static_cast<double>(j), std::max(d.lo, 0.0), d.hi);
  if (d.lo < 0.0) {
    const double neg = abs_piece(d, static_cast<double>(j), d.lo, std::min(d.hi, 0.0));
    sum += (absolute || j % 2 == 0) ? neg : -neg;
  }
  return sum;
}

double atom_power(double x, long j) {
  if (j == 0) return 1.0;
  return std::pow(x, static_cast<double>(j));
}

// Mass of a piece between two endpoints already clipped to its support.
double piece_mass(const JacobiDensity& d, const Endpoint& lo, const Endpoint& hi) {
  if (d.a == 0.0 && d.b == 0.0) {
    if (d.s == 0.0) {
      return d.coeff * (lo.x >= 0.0 ? lo.one_minus - hi.one_minus : hi.one_plus - lo.one_plus);
    }
    if (lo.x >= 0.0) return d.coeff * power_antiderivative_difference(d.s, lo.x, hi.x);
    // Even integer s on a support reaching below 0.
    return d.coeff * (std::pow(hi.x, d.s + 1.0) - std::pow(lo.x, d.s + 1.0)) / (d.s + 1.0);
  }
  if (d.b == 0.0 && d.s == 0.0) {
    const double e = d.a + 1.0;
    if (e == 0.0) return d.coeff * std::log(lo.one_minus / hi.one_minus);
    return d.coeff * (std::pow(lo.one_minus, e) - std::pow(hi.one_minus, e)) / e;
  }
  if (d.a == 0.0 && d.s == 0.0) {
    const double e = d.b + 1.0;
    if (e == 0.0) return d.coeff * std::log(hi.one_plus / lo.one_plus);
    return d.coeff * (std::pow(hi.one_plus, e) - std::pow(lo.one_plus, e)) / e;
  }
  double sum = 0.0;
  if (hi.x > 0.0) sum += abs_piece(d, 0.0, std::max(lo.x, 0.0), hi.x);
  if (lo.x < 0.0) sum += abs_piece(d, 0.0, lo.x, std::min(hi.x, 0.0));
  return sum;
}

}  // namespace

double DiscMeasure::mass(const Endpoint& lo, const Endpoint& hi) const {
  double sum = 0.0;
  for (const auto& a : atoms_) {
    // Compare in the end-relative coordinates the endpoints were built from.
    if (1.0 - a.position <= lo.one_minus && 1.0 + a.position <= hi.one_plus) sum += a.mass;
  }
  for (const auto& d : densities_) {
    const Endpoint l = lo.x < d.lo ? Endpoint::at(d.lo) : lo;
    const Endpoint h = hi.x > d.hi ? Endpoint::at(d.hi) : hi;
    if (!(l.x < h.x)) continue;
    sum += piece_mass(d, l, h);
  }
  return sum;
}

double DiscMeasure::total_mass() const { return mass(Endpoint::at(-1.0), Endpoint::at(1.0)); }

std::vector<double> DiscMeasure::breakpoints() const {
  std::vector<double> out;
  for (const auto& a : atoms_) out.push_back(a.position);
  for (const auto& d : densities_) {
    out.push_back(d.lo);
    out.push_back(d.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double moment(const DiscMeasure& mu, int j, int cap) {
  if (j < 0) throw std::invalid_argument("moment: j must be >= 0");
  if (j > cap) throw std::out_of_range("moment: j exceeds the configured cap");
  double sum = 0.0;
  for (const auto& a : mu.atoms()) sum += a.mass * atom_power(a.position, j);
  for (const auto& d : mu.densities()) sum += piece_moment(d, j, false);
  return sum;
}

double abs_moment(const DiscMeasure& mu, long j) {
  if (j < 0) throw std::invalid_argument("abs_moment: j must be >= 0");
  double sum = 0.0;
  for (const auto& a : mu.atoms()) sum += a.mass * atom_power(std::abs(a.position), j);
  for (const auto& d : mu.densities()) sum += piece_moment(d, j, true);
  return sum;
}

MomentVector moments(const DiscMeasure& mu, int count, int cap) {
  MomentVector out;
  out.values.reserve(count);
  for (int j = 0; j < count; ++j) out.values.push_back(moment(mu, j, cap));
  out.source = mu;
  return out;
}

}  // namespace hankelrp
