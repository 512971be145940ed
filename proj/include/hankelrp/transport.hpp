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

// Checks that a positive Hankel form rewritten against the weight
// |delta| dx, delta = c + h, with the unimodular multiplier u = delta/|delta|
// reproduces the measure-side symbol kernel.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hankelrp/grid_ops.hpp"
#include "hankelrp/measure.hpp"

namespace hankelrp {

using cplx = std::complex<double>;

struct ProbePair {
  cplx z;
  cplx w;
};

/// All pairs from {0.5i, i, 2i, 1+i, -1+2i}.
std::vector<ProbePair> default_probe_pairs();

struct TransportProbe {
  ProbePair probe;
  /// Measure-mode symbol kernel at (z, w).
  cplx measure_side;
  /// int conj(Q_z(x)) (u(x) |delta(x)| - c) Q_w(-x) dx.
  cplx weighted_side;
  /// int conj(Q_z(x)) c Q_w(-x) dx, zero in exact arithmetic.
  cplx constant_part;
  double residual;
};

struct TransportReport {
  std::vector<TransportProbe> probes;
  /// max |weighted - measure| / max(|measure|, 1e-12).
  double max_residual = 0.0;
  /// max |int conj(Q_z(x)) c Q_w(-x) dx|.
  double max_constant_integral = 0.0;
};

TransportReport verify_rp_transport(const HalfPlaneMeasure& mu, double c,
                                    std::span<const ProbePair> probes,
                                    grid::Exec exec = grid::Exec::kParallel);

struct PolarReport {
  std::vector<double> points;
  /// max ||delta(x)| - |g(x + i eps)|^2| / |delta(x)|.
  double modulus_residual = 0.0;
  /// max ||h(x)| - 1| for h = delta / conj(g)^2.
  double unimodular_residual = 0.0;
  /// max |h(-x) - conj(h(x))|.
  double sharp_defect = 0.0;
  double max_residual = 0.0;
};

inline constexpr double kBoundaryOffset = 1e-4;

/// Evaluates on +-x for every x in `points` (x > 0).
PolarReport polar_decomposition_check(const HalfPlaneMeasure& mu, double c,
                                      std::span<const double> points,
                                      grid::Exec exec = grid::Exec::kParallel);

}  // namespace hankelrp
