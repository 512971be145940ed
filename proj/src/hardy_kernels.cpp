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

#include "hankelrp/hardy_kernels.hpp"

#include <cmath>
#include <numbers>

namespace hankelrp {

namespace {

constexpr double kInvTwoPi = 0.5 / std::numbers::pi;
const cplx kI{0.0, 1.0};

}  // namespace

DomainPoint DomainPoint::disc(cplx z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("disc point must satisfy |z| < 1");
  return DomainPoint(z, Domain::kDisc);
}

DomainPoint DomainPoint::half_plane(cplx z) {
  if (!(z.imag() > 0.0) || !std::isfinite(z.real())) {
    throw DomainError("half-plane point must satisfy Im z > 0");
  }
  return DomainPoint(z, Domain::kHalfPlane);
}

cplx szego_disc(cplx z, cplx w) { return kInvTwoPi / (1.0 - z * std::conj(w)); }

cplx szego_half_plane(cplx z, cplx w) { return kInvTwoPi * kI / (z - std::conj(w)); }

cplx szego(const DomainPoint& z, const DomainPoint& w) {
  if (z.domain() != w.domain()) throw DomainError("szego: points lie in different domains");
  return z.domain() == Domain::kDisc ? szego_disc(z.value(), w.value())
                                     : szego_half_plane(z.value(), w.value());
}

double poisson(const DomainPoint& z, cplx x) {
  const cplx v = z.value();
  if (z.domain() == Domain::kHalfPlane) {
    if (x.imag() != 0.0) throw DomainError("poisson: boundary point of C+ must be real");
    return v.imag() / (std::numbers::pi * std::norm(v - x));
  }
  if (std::abs(std::abs(x) - 1.0) > 1e-12) throw DomainError("poisson: boundary point must be unimodular");
  return (1.0 - std::norm(v)) * kInvTwoPi / std::norm(1.0 - v * std::conj(x));
}

cplx cayley_map(cplx z, CayleyDirection direction) {
  if (direction == CayleyDirection::kDiscToHalfPlane) {
    if (z == cplx(1.0, 0.0)) throw DomainError("cayley_map: z = 1 is singular");
    return kI * (1.0 + z) / (1.0 - z);
  }
  if (z == -kI) throw DomainError("cayley_map: w = -i is singular");
  return (z - kI) / (z + kI);
}

cplx cayley_derivative(cplx z) {
  if (z == cplx(1.0, 0.0)) throw DomainError("cayley_derivative: z = 1 is singular");
  return 2.0 * kI / ((1.0 - z) * (1.0 - z));
}

cplx cayley_sqrt_derivative(cplx z) {
  if (z == cplx(1.0, 0.0)) throw DomainError("cayley_sqrt_derivative: z = 1 is singular");
  return cplx(1.0, 1.0) / (1.0 - z);
}

cplx HardyCoeffs::operator()(cplx z) const {
  cplx acc{};
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double HardyCoeffs::coeff_norm_sq() const {
  double s = 0.0;
  for (const auto& c : a) s += std::norm(c);
  return s;
}

cplx gamma2_eval(const HardyCoeffs& f, cplx x) {
  if (x.imag() < 0.0) throw DomainError("gamma2_eval: argument must satisfy Im x >= 0");
  const cplx den = x + kI;
  return std::sqrt(2.0) / den * f((x - kI) / den);
}

}  // namespace hankelrp
