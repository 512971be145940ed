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
#include <vector>

#include "hankelrp/hankel.hpp"
#include "hankelrp/transport.hpp"

namespace {

using namespace hankelrp;
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

HalfPlaneMeasure unit_atom() { return HalfPlaneMeasure({{1.0, 1.0}}, {}); }

TEST(ProbePairs, DefaultGrid) {
  const auto p = default_probe_pairs();
  ASSERT_EQ(p.size(), 25u);
  for (const auto& q : p) {
    EXPECT_GT(q.z.imag(), 0.0);
    EXPECT_GT(q.w.imag(), 0.0);
  }
}

TEST(Transport, UnitAtomSinglePair) {
  const std::vector<ProbePair> probes{{kI, kI}};
  const TransportReport r = verify_rp_transport(unit_atom(), 1.0, probes);
  ASSERT_EQ(r.probes.size(), 1u);
  EXPECT_NEAR(std::abs(r.probes[0].measure_side - 1.0 / (16 * kPi * kPi)), 0, 1e-17);
  EXPECT_LE(r.max_residual, 1e-6);
}

TEST(Transport, FullGridBothSigns) {
  for (double c : {1.0, -2.0, 0.25}) {
    const TransportReport r = verify_rp_transport(unit_atom(), c, default_probe_pairs());
    EXPECT_LE(r.max_residual, 1e-6) << c;
    EXPECT_LE(r.max_constant_integral, 1e-8) << c;
  }
  const HalfPlaneMeasure mixed({{1.0, 1.0}, {3.0, 2.0}}, {PowerDensity{1.0, 0.0, 0.0, 1.0}});
  EXPECT_LE(verify_rp_transport(mixed, 1.0, default_probe_pairs()).max_residual, 1e-6);
}

TEST(Transport, EmptyMeasure) {
  const TransportReport r = verify_rp_transport(HalfPlaneMeasure(), 1.0, default_probe_pairs());
  for (const auto& p : r.probes) EXPECT_EQ(p.measure_side, cplx(0.0));
  EXPECT_LE(r.max_residual, 1e-6);
}

TEST(Transport, ConstantInvisibility) {
  const std::vector<ProbePair> probes{{kI, 2.0 * kI}};
  EXPECT_LE(verify_rp_transport(unit_atom(), 1.0, probes).max_constant_integral, 1e-8);
}

TEST(Transport, SerialAndParallelAgree) {
  const auto s = verify_rp_transport(unit_atom(), 1.0, default_probe_pairs(), grid::Exec::kSerial);
  const auto p = verify_rp_transport(unit_atom(), 1.0, default_probe_pairs(), grid::Exec::kParallel);
  EXPECT_EQ(s.max_residual, p.max_residual);
  EXPECT_EQ(s.max_constant_integral, p.max_constant_integral);
}

TEST(Polar, ConstantCaseIsUnimodular) {
  const std::vector<double> xs{0.5, 1.0, 2.0};
  const PolarReport r = polar_decomposition_check(HalfPlaneMeasure(), 4.0, xs);
  EXPECT_LE(r.unimodular_residual, 1e-12);
  EXPECT_LE(r.modulus_residual, 1e-12);
  EXPECT_EQ(r.sharp_defect, 0.0);
}

TEST(Polar, UnitAtom) {
  const std::vector<double> xs{1.0};
  const PolarReport r = polar_decomposition_check(unit_atom(), 1.0, xs);
  EXPECT_LE(r.unimodular_residual, 1e-3);
  EXPECT_LE(r.modulus_residual, 1e-3);
  const std::vector<double> grid{0.1, 0.5, 1.0, 2.0, 10.0};
  EXPECT_LE(polar_decomposition_check(unit_atom(), -2.0, grid).sharp_defect, 1e-12);
}

}  // namespace
