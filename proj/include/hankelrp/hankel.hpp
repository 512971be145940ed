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

// Finite Hankel sections, their construction from moments and from circle
// symbols, the half-plane symbol kernel, and spectral certificates.
//
// Coefficient conventions. A moment section M[j][k] = c_{j+k} is the
// quadratic form of the operator in the monomials z^j, so that
// sum conj(a_j) b_k c_{j+k} = int conj(f) g dmu. A section extracted from a
// symbol is the operator matrix in the orthonormal basis z^n / sqrt(2 pi) of
// H^2(D) with arc-length measure. The two differ by the factor 2 pi;
// HankelSection::to_monomial() converts.

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hankelrp/grid_ops.hpp"
#include "hankelrp/measure.hpp"
#include "hankelrp/pick.hpp"
#include "hankelrp/quadrature.hpp"

namespace hankelrp {

using cplx = std::complex<double>;

enum class Convention { kMonomial, kOrthonormal };

struct HankelSection {
  int order = 0;
  Eigen::MatrixXcd entries;
  Convention convention = Convention::kMonomial;

  /// Entries in the monomial convention.
  Eigen::MatrixXcd to_monomial() const;
  /// max |M[j][k+1] - M[j+1][k]|.
  double hankel_defect() const;
  /// max |M - M^*|.
  double hermitian_defect() const;
};

class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// M[j][k] = c_{j+k}; needs 2N - 1 moments.
HankelSection section_from_moments(const MomentVector& c, int order);

/// How the reflection acts on the circle: conj(z) F(conj z) gives
/// M[j][k] = hhat(j+k+1); F(conj z) gives M[j][k] = hhat(j+k).
enum class Reflection { kConjugateFactor, kPlain };

/// Samples of f on the half-step circle grid theta_m = 2 pi (m + 1/2)/M.
SymbolSamples circle_samples(const std::function<cplx(cplx)>& f, int nodes,
                             bool sharp_symmetric = false,
                             grid::Exec exec = grid::Exec::kParallel);

/// Operator section of P+ h R on the first N basis vectors, from a symbol
/// sampled on the half-step circle grid with at least 8N nodes.
HankelSection section_from_symbol_disc(const SymbolSamples& h, int order,
                                       Reflection reflection = Reflection::kConjugateFactor,
                                       grid::Exec exec = grid::Exec::kParallel);

/// Adjoint symbol h^#(z) = conj(h(conj z)) on the same circle grid.
SymbolSamples sharp_reflect_circle(const SymbolSamples& h);

/// k(z) = -delta(omega(z)) conj(z) on the half-step circle grid.
SymbolSamples hp_to_disc_symbol(const std::function<cplx(double)>& delta, int nodes,
                                bool sharp_symmetric, grid::Exec exec = grid::Exec::kParallel);
/// Same, resampling tabulated boundary values by linear interpolation.
SymbolSamples hp_to_disc_symbol(const SymbolSamples& delta, int nodes);
/// h(x) = k(omega^{-1}(x)) (i - x)/(i + x) at the given real points.
SymbolSamples disc_to_hp_symbol(const std::function<cplx(cplx)>& k, std::span<const double> xs,
                                bool sharp_symmetric);

/// sum conj(a_j) b_k M[j][k] in the section's own convention.
cplx quadratic_form(const HankelSection& m, std::span<const cplx> a, std::span<const cplx> b);
/// int conj(f(x)) g(x) dmu for the polynomials with coefficients a and b.
cplx quadratic_form(const DiscMeasure& mu, std::span<const cplx> a, std::span<const cplx> b);

/// Q_H(z, w) = (1/4 pi^2) int dmu(lambda) / ((lambda - i z)(lambda + i conj w)).
cplx symbol_kernel_measure(const HalfPlaneMeasure& mu, cplx z, cplx w);
/// <Q_z, h R Q_w> = int conj(Q_z(x)) h(x) Q_w(-x) dx for a bounded boundary
/// function h; `breaks` lists points where h is not smooth.
cplx symbol_kernel_boundary(const std::function<cplx(double)>& h, cplx z, cplx w,
                            std::span<const double> breaks,
                            const quad::Tolerance& tol = {1e-15, 1e-11, 200000});
/// Q(z, i lambda) Q(i lambda, w), the kernel of the rank-one operator at lambda.
cplx symbol_kernel_rank_one(double lambda, cplx z, cplx w);

struct PositivityCertificate {
  int order = 0;
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  double tolerance = 1e-10;
  bool positive = true;
};

/// Smallest eigenvalue of the hermitian part; positive iff it is at least
/// -tolerance (1 + |trace|).
PositivityCertificate positivity_certificate(const Eigen::MatrixXcd& m, double tolerance = 1e-10);
PositivityCertificate positivity_certificate(const HankelSection& s, double tolerance = 1e-10);

/// Spectral norm by power iteration on M^* M.
double norm_estimate(const HankelSection& s, double rel_tol = 1e-10,
                     grid::Exec exec = grid::Exec::kParallel);

enum class ContractionMode { kDiscShift, kHalfPlaneGram };

struct OSContractionReport {
  ContractionMode mode = ContractionMode::kDiscShift;
  int order = 0;
  std::vector<double> t_grid;
  double shift = 0.0;
  double min_eigenvalue = 0.0;
  double tolerance = 1e-10;
  bool contraction = true;
};

/// Defect c_{j+k} - c_{j+k+2}: H_N minus the shift compressed through H_{N+1}.
OSContractionReport contraction_check(const MomentVector& c, int order, double tolerance = 1e-10);
/// Defect phi(t_j + t_k) - phi(t_j + t_k + 2s) with phi the Laplace transform.
OSContractionReport contraction_check(const HalfPlaneMeasure& mu, std::span<const double> t_grid,
                                      double shift, double tolerance = 1e-10);

enum class SupportVerdict { kSupportedInUnitInterval, kMassOnNegative, kInconclusive };

const char* to_string(SupportVerdict v);

/// Compares [c_{j+k}] and the shifted [c_{j+k+1}] at order N.
SupportVerdict support_sign_test(const MomentVector& c, int order, double tolerance = 1e-10);

}  // namespace hankelrp
