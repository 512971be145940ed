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

// Grid estimates of the head/tail growth constants of a measure and a
// boundedness verdict from their behaviour under grid refinement.

#pragma once

#include <stdexcept>
#include <vector>

#include "hankelrp/grid_ops.hpp"
#include "hankelrp/measure.hpp"

namespace hankelrp {

/// `probes` log-spaced points over [10^-decades, 10^decades]. Disc scans use
/// [10^-decades, 2] for interval lengths and [1, 10^decades] for exponents.
struct GridLevel {
  int probes;
  double decades;
};

struct WidomGrid {
  GridLevel coarse{64, 3.0};
  GridLevel fine{128, 6.0};
  /// Exponent probes for the embedding estimate (half-plane, via pushforward).
  int alpha_probes = 48;
  long alpha_max_exponent = kDefaultMomentCap;
};

enum class Verdict { kBounded, kUnbounded, kInconclusive };

const char* to_string(Verdict v);

/// Raised by operations that require a bounded verdict.
class NotBoundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WidomLevelValues {
  double beta = 0.0;
  double gamma = 0.0;
  /// sup (j+1) int |x|^j dmu; disc only.
  double moment_sup = 0.0;
};

struct WidomReport {
  Domain domain = Domain::kHalfPlane;
  /// Fine-level values. Half-plane: sup rho((0,e])/e and sup t rho([t,inf)).
  /// Disc: sup mu([-1,-1+s])/s and sup mu([1-s,1])/s.
  double beta = 0.0;
  double gamma = 0.0;
  double moment_sup = 0.0;
  double alpha_estimate = 0.0;
  /// rho of the half-line, or the total mass of a disc measure.
  double rho_total = 0.0;
  Verdict verdict = Verdict::kInconclusive;
  WidomGrid grid;
  WidomLevelValues coarse;
  WidomLevelValues fine;
};

WidomReport widom_check(const HalfPlaneMeasure& mu, const WidomGrid& grid = {},
                        grid::Exec exec = grid::Exec::kParallel);
WidomReport widom_check(const DiscMeasure& mu, const WidomGrid& grid = {},
                        grid::Exec exec = grid::Exec::kParallel);

/// Verdict from coarse/fine pairs: bounded if every value moves by < 1%,
/// unbounded if any grows by >= 10% or is not finite.
Verdict stability_verdict(const std::vector<double>& coarse, const std::vector<double>& fine);

}  // namespace hankelrp
