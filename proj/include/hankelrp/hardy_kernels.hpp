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

// Szego and Poisson kernels of the unit disc D and the upper half-plane C+,
// the Cayley map between them, and the induced unitary H^2(D) -> H^2(C+).
//
// Kernels carry the factor 1/(2 pi) and circle integrals use arc length
// (total 2 pi). For f = sum a_n z^n the H^2(D) norm is then
// ||f||^2 = 2 pi sum |a_n|^2.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "hankelrp/measure.hpp"

namespace hankelrp {

using cplx = std::complex<double>;

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point strictly inside D (|z| < 1) or C+ (Im z > 0).
class DomainPoint {
 public:
  static DomainPoint disc(cplx z);
  static DomainPoint half_plane(cplx z);

  cplx value() const { return value_; }
  Domain domain() const { return domain_; }

 private:
  DomainPoint(cplx v, Domain d) : value_(v), domain_(d) {}
  cplx value_;
  Domain domain_;
};

/// Raw kernel formulas; the arguments may also lie on the boundary.
cplx szego_disc(cplx z, cplx w);        // (1/2pi) / (1 - z conj(w))
cplx szego_half_plane(cplx z, cplx w);  // (1/2pi) i / (z - conj(w))

cplx szego(const DomainPoint& z, const DomainPoint& w);

/// Poisson kernel at a boundary point x (real for C+, |x| = 1 for D).
double poisson(const DomainPoint& z, cplx x);

enum class CayleyDirection { kDiscToHalfPlane, kHalfPlaneToDisc };

/// omega(z) = i (1 + z)/(1 - z) and omega^{-1}(w) = (w - i)/(w + i).
cplx cayley_map(cplx z, CayleyDirection direction);
/// omega'(z) = 2i / (1 - z)^2.
cplx cayley_derivative(cplx z);
/// (1 + i)/(1 - z): the square root of omega' that is holomorphic on D.
cplx cayley_sqrt_derivative(cplx z);

/// Taylor coefficients of a polynomial in H^2(D).
struct HardyCoeffs {
  std::vector<cplx> a;

  cplx operator()(cplx z) const;
  /// sum |a_n|^2; the H^2(D) norm squared is 2 pi times this.
  double coeff_norm_sq() const;
};

/// (Gamma_2 f)(x) = sqrt(2)/(x + i) f((x - i)/(x + i)) for Im x >= 0.
cplx gamma2_eval(const HardyCoeffs& f, cplx x);

}  // namespace hankelrp
