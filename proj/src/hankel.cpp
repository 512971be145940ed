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

#include "hankelrp/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "hankelrp/hardy_kernels.hpp"

namespace hankelrp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPiSq = 4.0 * kPi * kPi;
const cplx kI{0.0, 1.0};

double half_step_angle(int m, int nodes) { return 2.0 * kPi * (m + 0.5) / nodes; }

}  // namespace

Eigen::MatrixXcd HankelSection::to_monomial() const {
  return convention == Convention::kMonomial ? entries : (2.0 * kPi) * entries;
}

double HankelSection::hankel_defect() const {
  double worst = 0.0;
  for (int j = 0; j + 1 < order; ++j) {
    for (int k = 0; k + 1 < order; ++k) {
      worst = std::max(worst, std::abs(entries(j, k + 1) - entries(j + 1, k)));
    }
  }
  return worst;
}

double HankelSection::hermitian_defect() const {
  return order == 0 ? 0.0 : (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

HankelSection section_from_moments(const MomentVector& c, int order) {
  if (order < 1) throw std::invalid_argument("section order must be >= 1");
  if (static_cast<int>(c.values.size()) < 2 * order - 1) {
    throw InsufficientData("section_from_moments needs 2N - 1 moments");
  }
  HankelSection s;
  s.order = order;
  s.convention = Convention::kMonomial;
  s.entries.resize(order, order);
  for (int j = 0; j < order; ++j) {
    for (int k = 0; k < order; ++k) s.entries(j, k) = c.values[j + k];
  }
  return s;
}

SymbolSamples circle_samples(const std::function<cplx(cplx)>& f, int nodes, bool sharp_symmetric,
                             grid::Exec exec) {
  if (nodes < 2 || nodes % 2 != 0) throw std::invalid_argument("circle grid size must be even");
  SymbolSamples s;
  s.domain = Domain::kDisc;
  s.sharp_symmetric = sharp_symmetric;
  s.grid.resize(nodes);
  for (int m = 0; m < nodes; ++m) s.grid[m] = half_step_angle(m, nodes);
  s.values = grid::evaluate<cplx>(s.grid, [&f](double t) { return f(std::polar(1.0, t)); }, exec);
  for (const auto& v : s.values) s.sup_estimate = std::max(s.sup_estimate, std::abs(v));
  return s;
}

namespace {

void check_circle_grid(const SymbolSamples& h) {
  if (h.domain != Domain::kDisc) throw std::invalid_argument("symbol must be sampled on the circle");
  const int nodes = static_cast<int>(h.grid.size());
  if (nodes == 0 || h.values.size() != h.grid.size()) throw std::invalid_argument("empty symbol grid");
  for (int m = 0; m < nodes; ++m) {
    if (std::abs(h.grid[m] - half_step_angle(m, nodes)) > 1e-12) {
      throw std::invalid_argument("symbol grid must be the uniform half-step circle grid");
    }
  }
}

}  // namespace

HankelSection section_from_symbol_disc(const SymbolSamples& h, int order, Reflection reflection,
                                       grid::Exec exec) {
  if (order < 1) throw std::invalid_argument("section order must be >= 1");
  check_circle_grid(h);
  const int nodes = static_cast<int>(h.grid.size());
  if (nodes < 8 * order) throw InsufficientData("symbol grid must have at least 8N nodes");
  const int first = reflection == Reflection::kConjugateFactor ? 1 : 0;
  const auto coeffs = grid::offset_dft(h.values, first, 2 * order - 1, exec);
  HankelSection s;
  s.order = order;
  s.convention = Convention::kOrthonormal;
  s.entries.resize(order, order);
  for (int j = 0; j < order; ++j) {
    for (int k = 0; k < order; ++k) s.entries(j, k) = coeffs[j + k];
  }
  return s;
}

SymbolSamples sharp_reflect_circle(const SymbolSamples& h) {
  check_circle_grid(h);
  SymbolSamples out = h;
  const std::size_t n = h.values.size();
  // theta_m and theta_{M-1-m} are mirror images.
  for (std::size_t m = 0; m < n; ++m) out.values[m] = std::conj(h.values[n - 1 - m]);
  return out;
}

SymbolSamples hp_to_disc_symbol(const std::function<cplx(double)>& delta, int nodes,
                                bool sharp_symmetric, grid::Exec exec) {
  auto k = [&delta](cplx z) {
    // omega(e^{it}) = -cot(t/2), real on the circle.
    const double t = std::arg(z);
    const double x = -std::cos(0.5 * t) / std::sin(0.5 * t);
    return -delta(x) * std::conj(z);
  };
  return circle_samples(k, nodes, sharp_symmetric, exec);
}

SymbolSamples hp_to_disc_symbol(const SymbolSamples& delta, int nodes) {
  if (delta.domain != Domain::kHalfPlane || delta.grid.size() < 2) {
    throw std::invalid_argument("hp_to_disc_symbol needs samples on the real line");
  }
  if (!std::is_sorted(delta.grid.begin(), delta.grid.end())) {
    throw std::invalid_argument("hp_to_disc_symbol needs an increasing grid");
  }
  const auto& xs = delta.grid;
  const auto& vs = delta.values;
  auto interp = [&xs, &vs](double x) -> cplx {
    if (x <= xs.front()) return vs.front();
    if (x >= xs.back()) return vs.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs.begin());
    const double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return (1.0 - w) * vs[i - 1] + w * vs[i];
  };
  return hp_to_disc_symbol(interp, nodes, delta.sharp_symmetric, grid::Exec::kSerial);
}

SymbolSamples disc_to_hp_symbol(const std::function<cplx(cplx)>& k, std::span<const double> xs,
                                bool sharp_symmetric) {
  SymbolSamples s;
  s.domain = Domain::kHalfPlane;
  s.sharp_symmetric = sharp_symmetric;
  s.grid.assign(xs.begin(), xs.end());
  for (double x : xs) {
    const cplx z = (x - kI) / (x + kI);
    const cplx v = k(z) * (kI - x) / (kI + x);
    s.values.push_back(v);
    s.sup_estimate = std::max(s.sup_estimate, std::abs(v));
  }
  return s;
}

cplx quadratic_form(const HankelSection& m, std::span<const cplx> a, std::span<const cplx> b) {
  if (static_cast<int>(a.size()) > m.order || static_cast<int>(b.size()) > m.order) {
    throw std::invalid_argument("quadratic_form: coefficient vector longer than the section");
  }
  cplx sum{};
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < b.size(); ++k) sum += std::conj(a[j]) * b[k] * m.entries(j, k);
  }
  return sum;
}

cplx quadratic_form(const DiscMeasure& mu, std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) return {};
  const int top = static_cast<int>(a.size() + b.size()) - 2;
  if (top > kDefaultMomentCap) throw std::invalid_argument("quadratic_form: degree overflow");
  cplx sum{};
  const HardyCoeffs f{{a.begin(), a.end()}};
  const HardyCoeffs g{{b.begin(), b.end()}};
  for (const auto& atom : mu.atoms()) sum += atom.mass * std::conj(f(atom.position)) * g(atom.position);
  if (!mu.densities().empty()) {
    const DiscMeasure dens({}, mu.densities());
    std::vector<double> c(top + 1);
    for (int n = 0; n <= top; ++n) c[n] = moment(dens, n);
    for (std::size_t j = 0; j < a.size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) sum += std::conj(a[j]) * b[k] * c[j + k];
    }
  }
  return sum;
}

namespace {

// log(1 + u)/u with its limit 1 at u = 0.
cplx log1p_ratio(cplx u) {
  if (std::abs(u) < 1e-4) return 1.0 - u / 2.0 + u * u / 3.0 - u * u * u / 4.0;
  return std::log(1.0 + u) / u;
}

// Antiderivative of 1/((lambda + A)(lambda + B)) vanishing at infinity, for
// Re A, Re B > 0: -(1/(lambda + A)) L((B - A)/(lambda + A)).
cplx pair_antiderivative(cplx a, cplx b, double lambda) {
  if (std::isinf(lambda)) return {};
  const cplx s = lambda + a;
  return -log1p_ratio((b - a) / s) / s;
}

void add_ladder(std::vector<double>& out, double centre, double width) {
  out.push_back(centre);
  for (double d = width; d < 1e3; d *= 10.0) {
    out.push_back(centre - d);
    out.push_back(centre + d);
  }
}

}  // namespace

cplx symbol_kernel_measure(const HalfPlaneMeasure& mu, cplx z, cplx w) {
  if (!(z.imag() > 0.0 && w.imag() > 0.0)) throw DomainError("symbol kernel needs z, w in C+");
  const cplx a = -kI * z;
  const cplx b = kI * std::conj(w);
  auto kernel = [a, b](double lambda) { return 1.0 / ((lambda + a) * (lambda + b)); };
  auto lebesgue = [a, b](double lo, double hi) {
    return pair_antiderivative(a, b, hi) - pair_antiderivative(a, b, lo);
  };
  return integrate<cplx>(mu, kernel, lebesgue) / kFourPiSq;
}

cplx symbol_kernel_boundary(const std::function<cplx(double)>& h, cplx z, cplx w,
                            std::span<const double> breaks, const quad::Tolerance& tol) {
  if (!(z.imag() > 0.0 && w.imag() > 0.0)) throw DomainError("symbol kernel needs z, w in C+");
  const cplx wc = std::conj(w);
  // conj(Q_z(x)) Q_w(-x) = (1/4 pi^2) / ((x - z)(-x - conj w)).
  auto integrand = [&h, z, wc](double x) -> cplx { return h(x) / ((x - z) * (-x - wc)); };
  std::vector<double> pts(breaks.begin(), breaks.end());
  add_ladder(pts, z.real(), z.imag());
  add_ladder(pts, -w.real(), w.imag());
  return quad::real_line<cplx>(integrand, pts, tol) / kFourPiSq;
}

cplx symbol_kernel_rank_one(double lambda, cplx z, cplx w) {
  const cplx node = kI * lambda;
  return szego_half_plane(z, node) * szego_half_plane(node, w);
}

PositivityCertificate positivity_certificate(const Eigen::MatrixXcd& m, double tolerance) {
  PositivityCertificate c;
  c.order = static_cast<int>(m.rows());
  c.tolerance = tolerance;
  if (m.rows() == 0) return c;
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = solver.eigenvalues().minCoeff();
  c.trace = herm.trace().real();
  c.positive = c.min_eigenvalue >= -tolerance * (1.0 + std::abs(c.trace));
  return c;
}

PositivityCertificate positivity_certificate(const HankelSection& s, double tolerance) {
  return positivity_certificate(s.entries, tolerance);
}

double norm_estimate(const HankelSection& s, double rel_tol, grid::Exec exec) {
  const long n = s.entries.rows();
  if (n == 0) return 0.0;
  const Eigen::MatrixXcd adj = s.entries.adjoint();
  Eigen::VectorXcd v = Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  Eigen::VectorXcd mv(n);
  Eigen::VectorXcd w(n);
  // Stop once the Rayleigh quotient of M^* M moves by less than rel_tol^2
  // (floored at the double-precision noise level).
  const double threshold = std::max(rel_tol * rel_tol, 1e-16);
  double q_old = 0.0;
  double q = 0.0;
  for (int it = 0; it < 100000; ++it) {
    grid::matvec(s.entries, v, mv, exec);
    grid::matvec(adj, mv, w, exec);
    q = mv.squaredNorm();
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    v = w / wn;
    if (it > 0 && std::abs(q - q_old) <= threshold * q) break;
    q_old = q;
  }
  return std::sqrt(q);
}

OSContractionReport contraction_check(const MomentVector& c, int order, double tolerance) {
  if (order < 1) throw std::invalid_argument("contraction order must be >= 1");
  if (static_cast<int>(c.values.size()) < 2 * order + 1) {
    throw InsufficientData("disc contraction check needs 2N + 1 moments");
  }
  Eigen::MatrixXcd d(order, order);
  for (int j = 0; j < order; ++j) {
    for (int k = 0; k < order; ++k) d(j, k) = c.values[j + k] - c.values[j + k + 2];
  }
  OSContractionReport r;
  r.mode = ContractionMode::kDiscShift;
  r.order = order;
  r.tolerance = tolerance;
  r.min_eigenvalue = positivity_certificate(d).min_eigenvalue;
  r.contraction = r.min_eigenvalue >= -tolerance;
  return r;
}

OSContractionReport contraction_check(const HalfPlaneMeasure& mu, std::span<const double> t_grid,
                                      double shift, double tolerance) {
  if (!(shift > 0.0)) throw std::invalid_argument("contraction shift must be > 0");
  std::vector<double> sorted(t_grid.begin(), t_grid.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || !(sorted.front() > 0.0)) throw std::invalid_argument("t grid must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("t grid has duplicate points");
  }
  const long n = static_cast<long>(t_grid.size());
  Eigen::MatrixXcd d(n, n);
  for (long j = 0; j < n; ++j) {
    for (long k = 0; k < n; ++k) {
      const double t = t_grid[j] + t_grid[k];
      d(j, k) = laplace_transform(mu, t) - laplace_transform(mu, t + 2.0 * shift);
    }
  }
  OSContractionReport r;
  r.mode = ContractionMode::kHalfPlaneGram;
  r.order = static_cast<int>(n);
  r.t_grid.assign(t_grid.begin(), t_grid.end());
  r.shift = shift;
  r.tolerance = tolerance;
  r.min_eigenvalue = positivity_certificate(d).min_eigenvalue;
  r.contraction = r.min_eigenvalue >= -tolerance;
  return r;
}

const char* to_string(SupportVerdict v) {
  switch (v) {
    case SupportVerdict::kSupportedInUnitInterval:
      return "supported_in_[0,1]";
    case SupportVerdict::kMassOnNegative:
      return "mass_on_negative";
    default:
      return "inconclusive";
  }
}

SupportVerdict support_sign_test(const MomentVector& c, int order, double tolerance) {
  if (order < 1) throw std::invalid_argument("support test order must be >= 1");
  if (static_cast<int>(c.values.size()) < 2 * order) {
    throw InsufficientData("support test needs 2N moments");
  }
  Eigen::MatrixXcd plain(order, order);
  Eigen::MatrixXcd shifted(order, order);
  for (int j = 0; j < order; ++j) {
    for (int k = 0; k < order; ++k) {
      plain(j, k) = c.values[j + k];
      shifted(j, k) = c.values[j + k + 1];
    }
  }
  const bool plain_ok = positivity_certificate(plain, tolerance).positive;
  const bool shifted_ok = positivity_certificate(shifted, tolerance).positive;
  if (plain_ok && shifted_ok) return SupportVerdict::kSupportedInUnitInterval;
  if (!shifted_ok) return SupportVerdict::kMassOnNegative;
  return SupportVerdict::kInconclusive;
}

}  // namespace hankelrp
