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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hankelrp/checks.hpp"
#include "hankelrp/hankel.hpp"
#include "hankelrp/hardy_kernels.hpp"
#include "hankelrp/measure.hpp"
#include "hankelrp/outer.hpp"
#include "hankelrp/pick.hpp"
#include "hankelrp/transport.hpp"
#include "hankelrp/widom.hpp"
#include "oracles.hpp"

namespace {

using namespace hankelrp;
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

struct TestMeasure {
  const char* name;
  HalfPlaneMeasure mu;
};

std::vector<TestMeasure> test_measures() {
  return {{"atom", HalfPlaneMeasure({{1.0, 1.0}}, {})},
          {"two_atoms", HalfPlaneMeasure({{1.0, 1.0}, {3.0, 2.0}}, {})},
          {"lebesgue", HalfPlaneMeasure({}, {PowerDensity{1.0, 0.0, 0.0, 1.0}})}};
}

MomentVector hilbert_moments(int count) {
  MomentVector c;
  for (int j = 0; j < count; ++j) c.values.push_back(1.0 / (j + 1));
  return c;
}

Outcome hilbert_norms() {
  Outcome out;
  std::vector<double> norms;
  for (int n : {1, 2, 8, 64, 512}) {
    norms.push_back(norm_estimate(section_from_moments(hilbert_moments(2 * n - 1), n)));
  }
  for (std::size_t i = 1; i < norms.size(); ++i) out.pass &= norms[i] > norms[i - 1];
  const double n2_err = std::abs(norms[1] - (4.0 + std::sqrt(13.0)) / 6.0);
  out.pass &= n2_err <= 1e-12;
  out.pass &= norms.back() > 2.8 && norms.back() < kPi;
  out.detail = fmt("N=2 error %.2e", n2_err) + fmt(", N=8 %.6f", norms[2]) + fmt(", N=64 %.6f", norms[3]) +
               fmt(", N=512 %.6f (want in (2.8, pi))", norms[4]);
  return out;
}

Outcome reconstruction() {
  Outcome out;
  double worst = 0.0;
  const auto probes = default_probe_pairs();
  for (const auto& m : test_measures()) worst = std::max(worst, reconstruction_residual(m.mu, probes));
  out.pass = worst <= 1e-6;
  out.detail = fmt("worst relative residual %.2e", worst);
  return out;
}

Outcome difference_quotient() {
  Outcome out;
  double worst = 0.0;
  const auto pairs = right_half_plane_pairs(50, 0x5eed2026);
  for (const auto& m : test_measures()) worst = std::max(worst, difference_quotient_residual(m.mu, pairs));
  out.pass = worst <= 1e-8;
  out.detail = fmt("worst relative error %.2e over 50 pairs", worst);
  return out;
}

Outcome widom_constants() {
  Outcome out;
  const WidomReport atom = widom_check(HalfPlaneMeasure({{1.0, 1.0}}, {}));
  const WidomReport edge = widom_check(DiscMeasure({}, {JacobiDensity{1.0, -0.5, 0.0, 0.0, 0.0, 1.0}}));
  out.pass = atom.beta == 0.5 && atom.gamma == 0.5 && edge.verdict == Verdict::kUnbounded;
  out.detail = fmt("atom beta %.17g", atom.beta) + fmt(" gamma %.17g", atom.gamma) +
               ", edge density verdict " + to_string(edge.verdict);
  return out;
}

Outcome symbol_bounds() {
  Outcome out;
  double worst_excess = -INFINITY;
  for (const auto& m : test_measures()) {
    const SymbolSamples s = sample_symbol(m.mu);
    worst_excess = std::max(worst_excess, s.sup_estimate - symbol_bound(m.mu));
  }
  const HalfPlaneMeasure atom({{1.0, 1.0}}, {});
  const double sup = sample_symbol(atom).sup_estimate;
  const double at_one = std::abs(symbol_h(atom, 1.0));
  const double want = 1.0 / (2.0 * kPi);
  out.pass = worst_excess <= 0.0 && std::abs(sup - want) <= 1e-12 && std::abs(at_one - want) <= 1e-12;
  out.detail = fmt("max(sup - bound) %.3e", worst_excess) + fmt(", atom sup - 1/(2pi) %.2e", sup - want) +
               fmt(", |h(1)| - 1/(2pi) %.2e", at_one - want);
  return out;
}

Outcome contraction() {
  Outcome out;
  const DiscMeasure leb({}, {JacobiDensity{1.0, 0.0, 0.0, 0.0, 0.0, 1.0}});
  const MomentVector c = moments(leb, 64);
  double worst = INFINITY;
  for (int n : {4, 8, 16}) worst = std::min(worst, contraction_check(c, n).min_eigenvalue);
  const std::vector<double> times{0.25, 0.5, 1.0, 2.0};
  const auto ms = test_measures();
  for (std::size_t i = 0; i < 2; ++i) {
    worst = std::min(worst, contraction_check(ms[i].mu, times, 0.5).min_eigenvalue);
  }
  out.pass = worst >= -1e-10;
  out.detail = fmt("smallest defect eigenvalue %.3e", worst);
  return out;
}

Outcome transport() {
  Outcome out;
  const HalfPlaneMeasure atom({{1.0, 1.0}}, {});
  const auto probes = default_probe_pairs();
  double worst = 0.0;
  double constant = 0.0;
  for (double c : {1.0, -2.0}) {
    const TransportReport r = verify_rp_transport(atom, c, probes);
    worst = std::max(worst, r.max_residual);
    constant = std::max(constant, r.max_constant_integral);
  }
  out.pass = worst <= 1e-6 && constant <= 1e-8;
  out.detail = fmt("residual %.2e", worst) + fmt(", constant integral %.2e", constant);
  return out;
}

Outcome chain() {
  Outcome out;
  double worst = 0.0;
  for (const auto& m : test_measures()) worst = std::max(worst, cayley_chain(m.mu, 1.0, 8).max_entry_error);
  out.pass = worst <= 1e-6;
  out.detail = fmt("worst entry error %.2e at N=8", worst);
  return out;
}

Outcome outer_algebra() {
  Outcome out;
  using W = BoundaryWeight;
  const W rational = W::rational_factor(Domain::kHalfPlane, -kI, 1.0) *
                     W::rational_factor(Domain::kHalfPlane, -2.0 * kI, -1.0);
  const HalfPlaneMeasure atom({{1.0, 1.0}}, {});
  const std::vector<W> hp{rational, W::delta_modulus(atom, 1.0, 0.5),
                          W::rational_factor(Domain::kHalfPlane, cplx(1.0, -0.5), 2.0)};
  const std::vector<W> disc{W::rational_factor(Domain::kDisc, 2.0, 1.0),
                            W::rational_factor(Domain::kDisc, cplx(0.0, 0.5), -1.5)};
  const std::vector<cplx> hp_pts{{0.0, 1.0}, {1.0, 0.5}, {-2.0, 2.0}, {0.3, 0.05}};
  const std::vector<cplx> disc_pts{{0.0, 0.0}, {0.5, 0.0}, {-0.3, 0.6}, {0.1, -0.9}};

  double mult = 0.0, sharp = 0.0, unit = 0.0;
  auto run = [&](const std::vector<W>& ws, const std::vector<cplx>& pts, const std::function<cplx(cplx)>& mirror) {
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const W& a = ws[i];
      const W& b = ws[(i + 1) % ws.size()];
      for (const cplx& z : pts) {
        mult = std::max(mult, oracle::rel(outer_eval(a * b, z), outer_eval(a, z) * outer_eval(b, z)));
        sharp = std::max(sharp, oracle::rel(outer_eval(a.reflected(), z), std::conj(outer_eval(a, mirror(z)))));
        unit = std::max(unit, std::abs(outer_eval(a, z) * outer_eval(a.inverse(), z) - 1.0));
      }
    }
  };
  run(hp, hp_pts, [](cplx z) { return -std::conj(z); });
  run(disc, disc_pts, [](cplx z) { return std::conj(z); });

  double modulus = 0.0;
  for (double x : {-1.0, 0.5, 3.0}) {
    modulus = std::max(modulus, std::abs(std::abs(outer_eval(rational, cplx(x, 1e-4))) - rational(x)) / rational(x));
  }
  out.pass = mult <= 1e-8 && sharp <= 1e-8 && unit <= 1e-8 && modulus <= 1e-3;
  out.detail = fmt("product %.2e", mult) + fmt(", reflection %.2e", sharp) + fmt(", inverse %.2e", unit) +
               fmt(", boundary modulus %.2e", modulus);
  return out;
}

Outcome kernel_identities() {
  Outcome out;
  using enum CayleyDirection;
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi), real(-20.0, 20.0);
  double hua = 0.0;
  for (const cplx& z : oracle::disc_points(100, 31)) {
    const cplx b = std::polar(1.0, angle(rng));
    const double want = std::norm(szego_disc(z, b)) / szego_disc(z, z).real();
    hua = std::max(hua, std::abs(poisson(DomainPoint::disc(z), b) - want) / want);
  }
  for (const cplx& z : oracle::upper_points(100, 32)) {
    const double b = real(rng);
    const double want = std::norm(szego_half_plane(z, b)) / szego_half_plane(z, z).real();
    hua = std::max(hua, std::abs(poisson(DomainPoint::half_plane(z), b) - want) / want);
  }
  double transform = 0.0;
  const auto zs = oracle::disc_points(100, 33);
  const auto ws = oracle::disc_points(100, 34);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const cplx rhs = cayley_sqrt_derivative(zs[i]) *
                     szego_half_plane(cayley_map(zs[i], kDiscToHalfPlane), cayley_map(ws[i], kDiscToHalfPlane)) *
                     std::conj(cayley_sqrt_derivative(ws[i]));
    transform = std::max(transform, oracle::rel(rhs, szego_disc(zs[i], ws[i])));
  }
  double isometry = 0.0;
  std::normal_distribution<double> g;
  for (int n : {2, 7, 16}) {
    HardyCoeffs f;
    for (int k = 0; k < n; ++k) f.a.emplace_back(g(rng), g(rng));
    const double got =
        oracle::integrate_real_line([&](double x) { return cplx(std::norm(gamma2_eval(f, x))); }).real();
    const double want = 2.0 * kPi * f.coeff_norm_sq();
    isometry = std::max(isometry, std::abs(got - want) / want);
  }
  out.pass = hua <= 1e-10 && transform <= 1e-10 && isometry <= 1e-6;
  out.detail = fmt("Hua %.2e", hua) + fmt(", kernel transformation %.2e", transform) +
               fmt(", isometry %.2e", isometry);
  return out;
}

Outcome support() {
  Outcome out;
  const int order = 8;
  const DiscMeasure leb({}, {JacobiDensity{1.0, 0.0, 0.0, 0.0, 0.0, 1.0}});
  const DiscMeasure neg({{-0.5, 1.0}}, {});
  const SupportVerdict a = support_sign_test(moments(leb, 2 * order), order);
  const SupportVerdict b = support_sign_test(moments(neg, 2 * order), order);
  out.pass = a == SupportVerdict::kSupportedInUnitInterval && b == SupportVerdict::kMassOnNegative;
  out.detail = std::string("lebesgue ") + to_string(a) + ", atom at -1/2 " + to_string(b);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "hilbert section norms", hilbert_norms},
      {2, "symbol kernel reconstruction", reconstruction},
      {3, "difference quotient identity", difference_quotient},
      {4, "widom constants", widom_constants},
      {5, "symbol bound", symbol_bounds},
      {6, "contraction defects", contraction},
      {7, "transport identity", transport},
      {8, "cayley chain", chain},
      {9, "outer function algebra", outer_algebra},
      {10, "kernel identities", kernel_identities},
      {11, "support test", support},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
