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

// Identity checks that tie the modules together. Each returns the worst
// residual it observed so callers can compare against their own threshold.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hankelrp/grid_ops.hpp"
#include "hankelrp/measure.hpp"
#include "hankelrp/transport.hpp"

namespace hankelrp {

/// Boundary-mode kernel of the reconstructed symbol against the measure-mode
/// kernel: max |boundary - measure| / max(|measure|, 1e-12).
double reconstruction_residual(const HalfPlaneMeasure& mu, std::span<const ProbePair> probes,
                               grid::Exec exec = grid::Exec::kParallel);

/// `count` pairs z != w with Re z, Re w in [0.05, 3] and Im in [-3, 3].
std::vector<ProbePair> right_half_plane_pairs(int count, std::uint64_t seed);

/// (kappa(z) - kappa(w))/(z - w) against 4 pi^2 Q_H(iz, i conj w), relative.
double difference_quotient_residual(const HalfPlaneMeasure& mu, std::span<const ProbePair> pairs,
                                    grid::Exec exec = grid::Exec::kParallel);

/// Measure-mode kernel of the atomic part against the mass-weighted sum of
/// rank-one kernels, relative.
double superposition_residual(const HalfPlaneMeasure& mu, std::span<const ProbePair> probes);

/// Largest amount by which |h(p)| falls below (mu((0,a])/pi) |p|/(a^2+p^2)
/// over the atoms a and grid points p, relative to the bound.
double lower_bound_shortfall(const HalfPlaneMeasure& mu, std::span<const double> ps);

/// Largest excess of |Re kappa(ip)| over 8 alpha |log p| on the grid.
double kappa_envelope_excess(const HalfPlaneMeasure& mu, double alpha, std::span<const double> ps);

struct ChainComparison {
  Eigen::MatrixXcd symbol_side;
  Eigen::MatrixXcd moment_side;
  double max_entry_error = 0.0;
};

/// Circle symbol of delta = c + h pushed through the Cayley map, its section
/// (plain reflection, monomial convention) against the moment section of the
/// pushed-forward measure.
ChainComparison cayley_chain(const HalfPlaneMeasure& mu, double c, int order, int nodes = 1 << 16,
                             grid::Exec exec = grid::Exec::kParallel);

/// int x^j dmu against mu([-1,1]) (-1)^j + int_{-1}^{1} mu([t,1]) j t^{j-1} dt,
/// relative to int |x|^j dmu.
double integration_by_parts_residual(const DiscMeasure& mu, int j);

/// |int psi dx - mu(R+)| / mu(R+).
double psi_mass_residual(const HalfPlaneMeasure& mu);
/// |int e^{itx} psi(x) dx - phi(t)| / phi(t).
double psi_fourier_residual(const HalfPlaneMeasure& mu, double t);

/// max |g(z) Out(|delta|^{-1/2})(z) - 1| over the points.
double outer_inverse_residual(const HalfPlaneMeasure& mu, double c, std::span<const cplx> zs);

}  // namespace hankelrp
