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

#include "hankelrp/outer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hankelrp/hardy_kernels.hpp"
#include "hankelrp/pick.hpp"

namespace hankelrp {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

}  // namespace

BoundaryWeight BoundaryWeight::constant(Domain d, double k) {
  if (!(k > 0.0 && std::isfinite(k))) throw std::invalid_argument("constant weight must be > 0");
  BoundaryWeight w(d);
  Factor f;
  f.kind = Kind::kConstant;
  f.log_constant = std::log(k);
  w.factors_.push_back(f);
  return w;
}

BoundaryWeight BoundaryWeight::rational_factor(Domain d, cplx root, double power) {
  const bool on_boundary = d == Domain::kHalfPlane ? root.imag() == 0.0
                                                   : std::abs(std::abs(root) - 1.0) < 1e-12;
  if (on_boundary) throw std::invalid_argument("rational weight has a zero or pole on the boundary");
  BoundaryWeight w(d);
  Factor f;
  f.kind = Kind::kRational;
  f.root = root;
  f.power = power;
  w.factors_.push_back(f);
  return w;
}

BoundaryWeight BoundaryWeight::delta_modulus(const HalfPlaneMeasure& mu, double c, double power) {
  if (c == 0.0 || !std::isfinite(c)) throw std::invalid_argument("delta weight needs c != 0");
  BoundaryWeight w(Domain::kHalfPlane);
  Factor f;
  f.kind = Kind::kDelta;
  f.measure = std::make_shared<const HalfPlaneMeasure>(mu);
  f.offset = c;
  f.power = power;
  w.factors_.push_back(f);
  return w;
}

BoundaryWeight BoundaryWeight::operator*(const BoundaryWeight& other) const {
  if (domain_ != other.domain_) throw std::invalid_argument("weights live on different domains");
  BoundaryWeight w = *this;
  w.factors_.insert(w.factors_.end(), other.factors_.begin(), other.factors_.end());
  return w;
}

BoundaryWeight BoundaryWeight::inverse() const { return pow(-1.0); }

BoundaryWeight BoundaryWeight::pow(double e) const {
  BoundaryWeight w = *this;
  for (auto& f : w.factors_) f.power *= e;
  return w;
}

BoundaryWeight BoundaryWeight::reflected() const {
  BoundaryWeight w = *this;
  for (auto& f : w.factors_) f.reflect = !f.reflect;
  return w;
}

double BoundaryWeight::factor_log(const Factor& f, double x) const {
  const double arg = f.reflect ? -x : x;
  switch (f.kind) {
    case Kind::kConstant:
      return f.power * f.log_constant;
    case Kind::kRational: {
      const cplx point = domain_ == Domain::kHalfPlane ? cplx(arg, 0.0) : std::polar(1.0, arg);
      return f.power * std::log(std::abs(point - f.root));
    }
    case Kind::kDelta:
      return f.power * std::log(std::abs(delta_value(*f.measure, f.offset, arg)));
  }
  return 0.0;
}

double BoundaryWeight::log_value(double x) const {
  double s = 0.0;
  for (const auto& f : factors_) s += factor_log(f, x);
  return s;
}

double BoundaryWeight::operator()(double x) const { return std::exp(log_value(x)); }

bool BoundaryWeight::bounded() const {
  if (domain_ == Domain::kDisc) return true;
  double degree = 0.0;
  for (const auto& f : factors_) {
    if (f.kind == Kind::kRational) degree += f.power;
  }
  return degree <= 0.0;
}

bool BoundaryWeight::inverse_bounded() const {
  if (domain_ == Domain::kDisc) return true;
  double degree = 0.0;
  for (const auto& f : factors_) {
    if (f.kind == Kind::kRational) degree += f.power;
  }
  return degree >= 0.0;
}

std::vector<double> BoundaryWeight::features() const {
  std::vector<double> out;
  for (const auto& f : factors_) {
    const double sign = f.reflect ? -1.0 : 1.0;
    if (f.kind == Kind::kRational) {
      out.push_back(sign * (domain_ == Domain::kHalfPlane ? f.root.real() : std::arg(f.root)));
    } else if (f.kind == Kind::kDelta) {
      out.push_back(0.0);
      for (double b : f.measure->breakpoints()) {
        out.push_back(b);
        out.push_back(-b);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Points at geometric distances from `centre`, so the adaptive rule sees the
// scale `width` of the kernel peak.
void add_ladder(std::vector<double>& out, double centre, double width, double reach) {
  out.push_back(centre);
  for (double d = width; d < reach; d *= 10.0) {
    out.push_back(centre - d);
    out.push_back(centre + d);
  }
}

cplx outer_exponent_half_plane(const BoundaryWeight& k, cplx z, const quad::Tolerance& tol) {
  const double x0 = z.real();
  const double y = z.imag();
  const double l0 = k.log_value(x0);
  // 1/(p - z) - p/(1 + p^2) = (1 + p z)/((p - z)(1 + p^2)).
  auto integrand = [&k, z, l0](double p) -> cplx {
    const double dl = k.log_value(p) - l0;
    if (dl == 0.0) return {};
    return (1.0 + p * z) / ((p - z) * (1.0 + p * p)) * dl;
  };
  std::vector<double> breaks = k.features();
  add_ladder(breaks, x0, y, 1e3);
  const cplx integral = quad::real_line<cplx>(integrand, breaks, tol);
  return l0 + integral / (kPi * kI);
}

cplx outer_exponent_disc(const BoundaryWeight& k, cplx z, const quad::Tolerance& tol) {
  const double t0 = z == cplx{} ? 0.0 : std::arg(z);
  const double l0 = k.log_value(t0);
  auto integrand = [&k, z, l0](double t) -> cplx {
    const double dl = k.log_value(t) - l0;
    if (dl == 0.0) return {};
    const cplx e = std::polar(1.0, t);
    return (e + z) / (e - z) * dl;
  };
  const double lo = t0 - kPi;
  const double hi = t0 + kPi;
  std::vector<double> breaks{lo, hi};
  add_ladder(breaks, t0, 1.0 - std::abs(z), kPi);
  for (double f : k.features()) {
    // Shift each feature angle into [lo, hi].
    const double shifted = f - 2.0 * kPi * std::floor((f - lo) / (2.0 * kPi));
    breaks.push_back(shifted);
  }
  std::vector<double> clipped;
  for (double b : breaks) {
    if (b >= lo && b <= hi) clipped.push_back(b);
  }
  const cplx integral = quad::adaptive_pieces<cplx>(integrand, std::move(clipped), tol);
  return l0 + integral / (2.0 * kPi);
}

}  // namespace

cplx outer_eval(const BoundaryWeight& k, cplx z, cplx phase, const quad::Tolerance& tol) {
  if (std::abs(std::abs(phase) - 1.0) > 1e-12) throw std::invalid_argument("outer_eval: phase must be unimodular");
  if (k.domain() == Domain::kHalfPlane) {
    if (!(z.imag() >= kMinInteriorDistance)) {
      throw DomainError("outer_eval: Im z must be at least 1e-6");
    }
    return phase * std::exp(outer_exponent_half_plane(k, z, tol));
  }
  if (!(std::abs(z) <= 1.0 - kMinInteriorDistance)) {
    throw DomainError("outer_eval: |z| must be at most 1 - 1e-6");
  }
  return phase * std::exp(outer_exponent_disc(k, z, tol));
}

cplx delta_value(const HalfPlaneMeasure& mu, double c, double p) {
  if (p == 0.0) return c;
  return c + symbol_h(mu, p);
}

cplx g_from_delta(const HalfPlaneMeasure& mu, double c, cplx z) {
  return outer_eval(BoundaryWeight::delta_modulus(mu, c, 0.5), z);
}

cplx weighted_szego(const HalfPlaneMeasure& mu, double c, cplx z, cplx w) {
  const BoundaryWeight root = BoundaryWeight::delta_modulus(mu, c, 0.5);
  const cplx gz = outer_eval(root, z);
  const cplx gw = z == w ? gz : outer_eval(root, w);
  return szego_half_plane(z, w) / (gz * std::conj(gw));
}

}  // namespace hankelrp
