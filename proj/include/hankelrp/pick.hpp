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

// The Pick function of a half-line measure, the bounded Hankel symbol it
// determines, and the Poisson superposition psi_mu.

#pragma once

#include <complex>
#include <vector>

#include "hankelrp/grid_ops.hpp"
#include "hankelrp/measure.hpp"
#include "hankelrp/widom.hpp"

namespace hankelrp {

using cplx = std::complex<double>;

/// kappa(z) = int [lambda/(1 + lambda^2) - 1/(z + lambda)] dmu, z off (-inf, 0].
cplx kappa(const HalfPlaneMeasure& mu, cplx z);

/// h(p) = (i/pi) int p/(lambda^2 + p^2) dmu, p != 0. Purely imaginary, odd.
cplx symbol_h(const HalfPlaneMeasure& mu, double p);

/// (1/pi) rho(R+) + max(beta, gamma)/2; throws NotBoundedError unless the
/// report's verdict is bounded.
double symbol_bound(const WidomReport& report);
double symbol_bound(const HalfPlaneMeasure& mu);

/// psi(x) = (1/pi) int lambda/(lambda^2 + x^2) dmu; finite-mass measures only.
double psi_mu(const HalfPlaneMeasure& mu, double x);

/// Boundary samples of a symbol. On R the grid holds points p; on the
/// circle it holds angles theta.
struct SymbolSamples {
  Domain domain = Domain::kHalfPlane;
  std::vector<double> grid;
  std::vector<cplx> values;
  /// h(-p) = conj(h(p)) on R, or h(conj z) = conj(h(z)) on the circle.
  bool sharp_symmetric = false;
  double sup_estimate = 0.0;
};

struct SymbolGrid {
  int points = 1024;
  double decades = 6.0;
};

/// h on the symmetrized log grid plus the measure's breakpoints.
/// sup_estimate also includes a golden-section refinement around the best
/// grid point.
SymbolSamples sample_symbol(const HalfPlaneMeasure& mu, const SymbolGrid& g = {},
                            grid::Exec exec = grid::Exec::kParallel);

/// Largest deviation from h(-p) = conj(h(p)) over mirrored grid pairs.
double sharp_symmetry_defect(const SymbolSamples& s);

}  // namespace hankelrp
