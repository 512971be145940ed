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

// Outer functions from boundary moduli on C+ and D.
//
//   C+:  Out(k)(z) = C exp((1/(pi i)) int [1/(p - z) - p/(1 + p^2)] log k(p) dp)
//   D:   Out(k)(z) = C exp((1/(2 pi)) int (e^{it} + z)/(e^{it} - z) log k(e^{it}) dt)
//
// Both kernels integrate to a known constant (i pi and 2 pi), so log k at the
// point nearest z is subtracted before quadrature; the remaining integrand
// stays bounded as z approaches the boundary.

#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "hankelrp/measure.hpp"
#include "hankelrp/quadrature.hpp"

namespace hankelrp {

using cplx = std::complex<double>;

/// A positive boundary function from the closed family
///   constants, |x - r|^p for r off the boundary, |c + h(x)|^p
/// and products of these, where h is the symbol of a stored half-line
/// measure. On D the argument is the angle t of e^{it}.
class BoundaryWeight {
 public:
  static BoundaryWeight constant(Domain d, double k);
  /// |x - root|^power on R, or |e^{it} - root|^power on the circle.
  static BoundaryWeight rational_factor(Domain d, cplx root, double power);
  /// |c + h(x)|^power with h the symbol of mu (half-plane only).
  static BoundaryWeight delta_modulus(const HalfPlaneMeasure& mu, double c, double power = 1.0);

  BoundaryWeight operator*(const BoundaryWeight& other) const;
  BoundaryWeight inverse() const;
  BoundaryWeight pow(double e) const;
  /// k(-x) on R, k(conj z) on the circle.
  BoundaryWeight reflected() const;

  double log_value(double x) const;
  double operator()(double x) const;

  Domain domain() const { return domain_; }
  bool bounded() const;
  bool inverse_bounded() const;
  /// Real points (half-plane) or angles (disc) where log k varies quickly.
  std::vector<double> features() const;

 private:
  enum class Kind { kConstant, kRational, kDelta };
  struct Factor {
    Kind kind = Kind::kConstant;
    double power = 1.0;
    bool reflect = false;
    double log_constant = 0.0;
    cplx root{};
    std::shared_ptr<const HalfPlaneMeasure> measure;
    double offset = 0.0;
  };
  explicit BoundaryWeight(Domain d) : domain_(d) {}
  double factor_log(const Factor& f, double x) const;

  Domain domain_;
  std::vector<Factor> factors_;
};

inline constexpr double kMinInteriorDistance = 1e-6;

/// Out(k, phase)(z) for z at least kMinInteriorDistance inside the domain.
cplx outer_eval(const BoundaryWeight& k, cplx z, cplx phase = 1.0,
                const quad::Tolerance& tol = {1e-13, 1e-12, 100000});

/// c + h(p), the symbol shifted by a constant. h(0) is taken as 0.
cplx delta_value(const HalfPlaneMeasure& mu, double c, double p);

/// g = Out(|c + h|^{1/2}) at z in C+; requires c != 0.
cplx g_from_delta(const HalfPlaneMeasure& mu, double c, cplx z);

/// Q(z, w) / (g(z) conj(g(w))), the reproducing kernel for |c + h| dx.
cplx weighted_szego(const HalfPlaneMeasure& mu, double c, cplx z, cplx w);

}  // namespace hankelrp
