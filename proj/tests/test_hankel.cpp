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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "hankelrp/checks.hpp"
#include "hankelrp/hankel.hpp"
#include "hankelrp/hardy_kernels.hpp"
#include "hankelrp/outer.hpp"
#include "hankelrp/pick.hpp"
#include "hankelrp/transport.hpp"
#include "oracles.hpp"

namespace {

using namespace hankelrp;
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

MomentVector hilbert_moments(int count) {
  MomentVector c;
  for (int j = 0; j < count; ++j) c.values.push_back(1.0 / (j + 1));
  return c;
}

DiscMeasure lebesgue01() { return DiscMeasure({}, {JacobiDensity{1.0, 0, 0, 0, 0.0, 1.0}}); }

std::vector<HalfPlaneMeasure> hp_tests() {
  return {HalfPlaneMeasure({{1.0, 1.0}}, {}), HalfPlaneMeasure({{1.0, 1.0}, {3.0, 2.0}}, {}),
          HalfPlaneMeasure({}, {PowerDensity{1.0, 0.0, 0.0, 1.0}})};
}

// Random trigonometric polynomial sum_{n=-6}^{6} a_n z^n.
std::function<cplx(cplx)> random_symbol(unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  std::vector<cplx> a;
  for (int n = -6; n <= 6; ++n) a.emplace_back(g(rng), g(rng));
  return [a](cplx z) {
    cplx s{};
    for (int n = -6; n <= 6; ++n) s += a[n + 6] * std::pow(z, n);
    return s;
  };
}

// ---- sections ------------------------------------------------------------

TEST(Section, FromMoments) {
  const HankelSection s = section_from_moments(moments(lebesgue01(), 3), 2);
  Eigen::Matrix2d want;
  want << 1.0, 0.5, 0.5, 1.0 / 3.0;
  EXPECT_LT((s.entries.real() - want).norm(), 1e-15);
  EXPECT_EQ(s.convention, Convention::kMonomial);
  const HankelSection a = section_from_moments(moments(DiscMeasure({{0.0, 1.0}}, {}), 5), 3);
  EXPECT_EQ(a.entries(0, 0), cplx(1.0));
  EXPECT_EQ(a.entries.cwiseAbs().sum(), 1.0);
  EXPECT_THROW(section_from_moments(hilbert_moments(4), 3), InsufficientData);
}

TEST(Section, EigenvaluesOfSmallHilbert) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(section_from_moments(hilbert_moments(3), 2).entries.real());
  EXPECT_NEAR(es.eigenvalues()(0), (4 - std::sqrt(13.0)) / 6, 1e-15);
  EXPECT_NEAR(es.eigenvalues()(1), (4 + std::sqrt(13.0)) / 6, 1e-15);
}

TEST(Section, FromSymbolExamples) {
  const auto z1 = section_from_symbol_disc(circle_samples([](cplx z) { return z; }, 64), 2);
  EXPECT_NEAR(std::abs(z1.entries(0, 0) - 1.0), 0, 1e-15);
  EXPECT_NEAR(z1.entries.cwiseAbs().sum() - std::abs(z1.entries(0, 0)), 0, 1e-14);
  EXPECT_EQ(z1.convention, Convention::kOrthonormal);

  const auto zero = section_from_symbol_disc(circle_samples([](cplx z) { return -std::conj(z); }, 128), 8);
  EXPECT_LT(zero.entries.cwiseAbs().maxCoeff(), 1e-15);

  const auto z2 = section_from_symbol_disc(circle_samples([](cplx z) { return z * z; }, 64), 2);
  EXPECT_NEAR(std::abs(z2.entries(0, 1) - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(z2.entries(1, 0) - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(z2.entries(0, 0)), 0, 1e-15);
  EXPECT_NEAR(std::abs(z2.entries(1, 1)), 0, 1e-15);

  const auto plain = section_from_symbol_disc(circle_samples([](cplx z) { return z; }, 64), 2, Reflection::kPlain);
  EXPECT_NEAR(std::abs(plain.entries(0, 1) - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(plain.entries(0, 0)), 0, 1e-15);
}

TEST(Section, SymbolGridChecks) {
  EXPECT_THROW(circle_samples([](cplx z) { return z; }, 63), std::invalid_argument);
  EXPECT_THROW(section_from_symbol_disc(circle_samples([](cplx z) { return z; }, 32), 8), InsufficientData);
}

TEST(Section, RosenblumRelation) {
  const auto sym = section_from_symbol_disc(circle_samples(random_symbol(1), 256), 12);
  EXPECT_EQ(sym.hankel_defect(), 0.0);
  const auto mom = section_from_moments(moments(lebesgue01(), 40), 20);
  EXPECT_EQ(mom.hankel_defect(), 0.0);
  for (long j = 0; j + 1 < 12; ++j) {
    for (long k = 0; k + 1 < 12; ++k) EXPECT_EQ(sym.entries(j, k + 1), sym.entries(j + 1, k));
  }
}

TEST(Section, AdjointStability) {
  for (unsigned seed : {2u, 3u, 4u}) {
    const SymbolSamples h = circle_samples(random_symbol(seed), 256);
    const auto a = section_from_symbol_disc(h, 10);
    const auto b = section_from_symbol_disc(sharp_reflect_circle(h), 10);
    EXPECT_LT((a.entries.adjoint() - b.entries).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Section, SymbolSerialAndParallelAgree) {
  const SymbolSamples h = circle_samples(random_symbol(9), 512, false, grid::Exec::kSerial);
  EXPECT_EQ(h.values, circle_samples(random_symbol(9), 512, false, grid::Exec::kParallel).values);
  const auto s = section_from_symbol_disc(h, 32, Reflection::kConjugateFactor, grid::Exec::kSerial);
  const auto p = section_from_symbol_disc(h, 32, Reflection::kConjugateFactor, grid::Exec::kParallel);
  EXPECT_EQ(s.entries, p.entries);
}

TEST(Section, PositiveMeasuresGivePsdSections) {
  const std::vector<DiscMeasure> family{
      lebesgue01(), DiscMeasure({{-0.5, 1.0}, {0.25, 2.0}}, {}),
      DiscMeasure({}, {JacobiDensity{1.0, -0.5, 0, 0, 0.0, 1.0}}),
      DiscMeasure({{0.9, 0.1}}, {JacobiDensity{1.0, 0.3, 0.7, 0, -1.0, 1.0}}),
      cayley_pushforward(HalfPlaneMeasure({{1.0, 1.0}, {3.0, 2.0}}, {PowerDensity{1.0, 0.0, 0.0, 1.0}}))};
  for (const auto& mu : family) {
    const MomentVector c = moments(mu, 127);
    for (int n : {1, 2, 4, 8, 16, 32, 64}) EXPECT_TRUE(positivity_certificate(section_from_moments(c, n)).positive) << n;
  }
}

// ---- circle <-> line -----------------------------------------------------

TEST(Cayley, ConstantSymbol) {
  const SymbolSamples k = hp_to_disc_symbol([](double) { return cplx(1.0); }, 64, true);
  for (std::size_t m = 0; m < k.grid.size(); ++m) {
    EXPECT_NEAR(std::abs(k.values[m] + std::conj(std::polar(1.0, k.grid[m]))), 0, 1e-15);
  }
}

TEST(Cayley, RoundTripAndSymmetry) {
  const HalfPlaneMeasure mu({{1.0, 1.0}, {3.0, 2.0}}, {});
  auto delta = [&mu](double x) { return delta_value(mu, 1.0, x); };
  const SymbolSamples k = hp_to_disc_symbol(delta, 256, true);
  const SymbolSamples ks = sharp_reflect_circle(k);
  for (std::size_t m = 0; m < k.values.size(); ++m) EXPECT_LT(std::abs(ks.values[m] - k.values[m]), 1e-15);
  auto k_fn = [&mu](cplx z) {
    return -delta_value(mu, 1.0, cayley_map(z, CayleyDirection::kDiscToHalfPlane).real()) * std::conj(z);
  };
  const std::vector<double> xs{-5.0, -1.0, -0.2, 0.3, 1.0, 2.5, 40.0};
  const SymbolSamples back = disc_to_hp_symbol(k_fn, xs, true);
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_LT(std::abs(back.values[i] - delta(xs[i])), 1e-10);
}

TEST(Cayley, EndToEndChain) {
  for (const auto& mu : hp_tests()) {
    const ChainComparison r = cayley_chain(mu, 1.0, 8);
    EXPECT_LE(r.max_entry_error, 1e-6);
  }
}

// ---- quadratic forms -----------------------------------------------------

TEST(QuadraticForm, Examples) {
  const std::vector<cplx> ones{1.0, 1.0};
  EXPECT_NEAR(std::abs(quadratic_form(lebesgue01(), ones, ones) - 7.0 / 3.0), 0, 1e-15);
  const auto s = section_from_moments(moments(lebesgue01(), 3), 2);
  EXPECT_NEAR(std::abs(quadratic_form(s, ones, ones) - 7.0 / 3.0), 0, 1e-15);
  const std::vector<cplx> zero{0.0, 0.0, 0.0};
  EXPECT_EQ(quadratic_form(lebesgue01(), zero, ones), cplx(0.0));
  const std::vector<cplx> z{0.0, 1.0};
  EXPECT_NEAR(std::abs(quadratic_form(DiscMeasure({{0.5, 1.0}}, {}), z, z) - 0.25), 0, 1e-16);
}

TEST(QuadraticForm, SectionMatchesMeasure) {
  std::mt19937 rng(4);
  std::normal_distribution<double> g;
  const DiscMeasure mu({{-0.5, 1.0}}, {JacobiDensity{1.0, 0.3, 0.7, 0, -1.0, 1.0}});
  const auto s = section_from_moments(moments(mu, 15), 8);
  std::vector<cplx> a(8), b(8);
  for (auto& v : a) v = {g(rng), g(rng)};
  for (auto& v : b) v = {g(rng), g(rng)};
  EXPECT_LT(oracle::rel(quadratic_form(s, a, b), quadratic_form(mu, a, b)), 1e-12);
}

// ---- symbol kernel -------------------------------------------------------

TEST(SymbolKernel, Values) {
  const HalfPlaneMeasure atom({{1.0, 1.0}}, {});
  const double want = 1.0 / (16 * kPi * kPi);
  EXPECT_NEAR(std::abs(symbol_kernel_measure(atom, kI, kI) - want), 0, 1e-17);
  EXPECT_NEAR(std::abs(symbol_kernel_rank_one(1.0, kI, kI) - want), 0, 1e-17);
  EXPECT_EQ(symbol_kernel_measure(HalfPlaneMeasure(), kI, kI), cplx(0.0));
  EXPECT_THROW(symbol_kernel_measure(atom, 1.0, kI), DomainError);
}

TEST(SymbolKernel, DensityAgainstQuadrature) {
  const HalfPlaneMeasure mu({}, {PowerDensity{1.0, 0.5, 0.0, 3.0}});
  for (const auto& p : default_probe_pairs()) {
    auto part = [&](bool im) {
      return oracle::integrate_singular(
          [&](double l) {
            const cplx v = std::sqrt(l) / ((l - kI * p.z) * (l + kI * std::conj(p.w))) / (4 * kPi * kPi);
            return im ? v.imag() : v.real();
          },
          0.0, 3.0);
    };
    const cplx want{part(false), part(true)};
    EXPECT_LT(oracle::rel(symbol_kernel_measure(mu, p.z, p.w), want), 1e-10);
  }
}

TEST(SymbolKernel, Superposition) {
  const auto probes = default_probe_pairs();
  for (const auto& mu : hp_tests()) EXPECT_LE(superposition_residual(mu, probes), 1e-12);
}

TEST(SymbolKernel, ReconstructionFromSymbol) {
  const auto probes = default_probe_pairs();
  for (const auto& mu : hp_tests()) EXPECT_LE(reconstruction_residual(mu, probes), 1e-6);
}

TEST(SymbolKernel, ConstantSymbolIsInvisible) {
  const std::vector<double> none;
  const cplx v = symbol_kernel_boundary([](double) { return cplx(1.0); }, kI, 2.0 * kI, none);
  EXPECT_LE(std::abs(v), 1e-8);
}

// ---- certificates --------------------------------------------------------

TEST(Positivity, Examples) {
  const auto h2 = positivity_certificate(section_from_moments(hilbert_moments(3), 2));
  EXPECT_TRUE(h2.positive);
  EXPECT_NEAR(h2.min_eigenvalue, (4 - std::sqrt(13.0)) / 6, 1e-15);
  const auto zero = positivity_certificate(Eigen::MatrixXcd::Zero(4, 4));
  EXPECT_TRUE(zero.positive);
  EXPECT_EQ(zero.min_eigenvalue, 0.0);
  const auto z2 = positivity_certificate(section_from_symbol_disc(circle_samples([](cplx z) { return z * z; }, 64), 2));
  EXPECT_FALSE(z2.positive);
  EXPECT_NEAR(z2.min_eigenvalue, -1.0, 1e-15);
}

TEST(Positivity, ToleranceIsScaleAware) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2) * 1e6;
  m(1, 1) = -1e-5;
  EXPECT_TRUE(positivity_certificate(m).positive);
  m(1, 1) = -1e-3;
  EXPECT_FALSE(positivity_certificate(m).positive);
}

TEST(Positivity, AgreesWithCharacteristicPolynomial) {
  std::mt19937 rng(17);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    std::vector<double> c(2 * n - 1);
    for (auto& v : c) v = g(rng);
    MomentVector mv{c, std::nullopt};
    const HankelSection s = section_from_moments(mv, n);
    const double want = oracle::min_eigenvalue(s.entries.real());
    EXPECT_NEAR(positivity_certificate(s).min_eigenvalue, want, 1e-9 * (1 + std::abs(want))) << trial;
  }
}

TEST(Norm, Hilbert) {
  EXPECT_NEAR(norm_estimate(section_from_moments(hilbert_moments(1), 1)), 1.0, 1e-15);
  EXPECT_NEAR(norm_estimate(section_from_moments(hilbert_moments(3), 2)), (4 + std::sqrt(13.0)) / 6, 1e-12);
  const HankelSection big = section_from_moments(hilbert_moments(1023), 512);
  const double n512 = norm_estimate(big);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::hilbert(512), Eigen::EigenvaluesOnly);
  EXPECT_NEAR(n512, es.eigenvalues().maxCoeff(), 1e-9 * n512);
  // Frozen: numpy eigvalsh of the 512 x 512 Hilbert matrix.
  EXPECT_NEAR(n512, 2.379312511861073, 1e-12);
  EXPECT_LT(n512, kPi);
}

TEST(Norm, MonotoneInOrder) {
  const MomentVector c = hilbert_moments(255);
  double prev = 0.0;
  for (int n = 1; n <= 128; n *= 2) {
    const double v = norm_estimate(section_from_moments(c, n));
    EXPECT_GT(v, prev);
    EXPECT_LT(v, kPi);
    prev = v;
  }
}

TEST(Norm, SerialAndParallelAgree) {
  const auto s = section_from_moments(hilbert_moments(255), 128);
  EXPECT_EQ(norm_estimate(s, 1e-10, grid::Exec::kSerial), norm_estimate(s, 1e-10, grid::Exec::kParallel));
}

TEST(Contraction, DiscShift) {
  const MomentVector c = moments(lebesgue01(), 40);
  for (int n : {4, 8, 16}) {
    const auto r = contraction_check(c, n);
    EXPECT_TRUE(r.contraction);
    EXPECT_GE(r.min_eigenvalue, -1e-10);
  }
  EXPECT_THROW(contraction_check(hilbert_moments(8), 4), InsufficientData);
}

TEST(Contraction, DiscShiftDetectsMassOutsideUnitInterval) {
  // Moments of 2 delta_{1.5}: c_j = 2 (1.5)^j.
  MomentVector c;
  for (int j = 0; j < 9; ++j) c.values.push_back(2.0 * std::pow(1.5, j));
  EXPECT_FALSE(contraction_check(c, 4).contraction);
}

TEST(Contraction, HalfPlaneGram) {
  const std::vector<double> t3{0.5, 1.0, 2.0};
  const auto r = contraction_check(HalfPlaneMeasure({{1.0, 1.0}}, {}), t3, 1.0);
  EXPECT_TRUE(r.contraction);
  // K - e^{-2} K for the rank-one K = v v^T with v_j = e^{-t_j}.
  double vv = 0.0;
  for (double t : t3) vv += std::exp(-2 * t);
  EXPECT_NEAR(r.min_eigenvalue, 0.0, 1e-15);
  EXPECT_GE(vv, 0.0);
  const std::vector<double> t4{0.25, 0.5, 1.0, 2.0};
  const auto two = contraction_check(HalfPlaneMeasure({{1.0, 1.0}, {3.0, 2.0}}, {}), t4, 0.5);
  EXPECT_GE(two.min_eigenvalue, -1e-12);
  const std::vector<double> dup{1.0, 1.0};
  EXPECT_THROW(contraction_check(HalfPlaneMeasure({{1.0, 1.0}}, {}), dup, 1.0), std::invalid_argument);
}

TEST(Support, Examples) {
  EXPECT_EQ(support_sign_test(moments(lebesgue01(), 9), 4), SupportVerdict::kSupportedInUnitInterval);
  EXPECT_EQ(support_sign_test(moments(DiscMeasure({{-0.5, 1.0}}, {}), 5), 2), SupportVerdict::kMassOnNegative);
  EXPECT_EQ(support_sign_test(moments(DiscMeasure({{0.0, 1.0}}, {}), 5), 2), SupportVerdict::kSupportedInUnitInterval);
  EXPECT_STREQ(to_string(SupportVerdict::kSupportedInUnitInterval), "supported_in_[0,1]");
  EXPECT_STREQ(to_string(SupportVerdict::kMassOnNegative), "mass_on_negative");
}

}  // namespace
