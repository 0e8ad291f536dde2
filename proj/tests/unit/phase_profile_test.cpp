// Copyright 2026 The cqedparity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>

#include <gtest/gtest.h>

#include "cqp/errors.hpp"
#include "cqp/phase_profile.hpp"

namespace cqp {
namespace {

TEST(PhaseSweep, SingleResonanceWindsOnce) {
  const auto net = series({capacitor(10e-15), stub(50.0, AngularFrequency::from_ghz(10.0))});
  const auto p = phase_sweep(net, AngularFrequency::from_ghz(9.5), AngularFrequency::from_ghz(10.5), 64);
  EXPECT_NEAR(p.winding(), -kTwoPi, 1e-12);
  EXPECT_EQ(p.poles.size(), 1u);
  EXPECT_LT(p.total_phase_change(), -kPi);
}

TEST(PhaseSweep, PoleCountMatchesWinding) {
  const auto net = parallel({series({capacitor(10e-15), lumped_resonator(AngularFrequency::from_ghz(9.9), 50.0)}),
                             series({capacitor(10e-15), lumped_resonator(AngularFrequency::from_ghz(10.1), 50.0)}),
                             series({capacitor(10e-15), lumped_resonator(AngularFrequency::from_ghz(10.3), 50.0)})});
  const auto p = phase_sweep(net, AngularFrequency::from_ghz(9.0), AngularFrequency::from_ghz(11.0), 64);
  EXPECT_EQ(p.poles.size(), 3u);
  EXPECT_NEAR(p.winding(), -kTwoPi * static_cast<double>(p.poles.size()), 1e-12);
}

TEST(PhaseSweep, NarrowResonanceBetweenBaseNodesIsKept) {
  // Two modes 100 kHz apart leave a pole-zero pair far narrower than the
  // 30 MHz base spacing.
  const auto branch = [](double ghz) {
    return series({capacitor(10e-15), lumped_resonator(AngularFrequency::from_ghz(ghz), 50.0)});
  };
  const auto net = parallel({branch(10.0), branch(10.0001)});
  const auto lo = AngularFrequency::from_ghz(9.0);
  const auto hi = AngularFrequency::from_ghz(11.0);
  const auto coarse = phase_sweep(net, lo, hi, 64);
  const auto dense = phase_sweep(net, lo, hi, 1 << 16);
  EXPECT_EQ(coarse.poles.size(), 2u);
  EXPECT_NEAR(coarse.winding(), -2 * kTwoPi, 1e-12);
  EXPECT_NEAR(coarse.winding(), dense.winding(), 1e-12);
  EXPECT_NEAR(coarse.total_phase_change(), dense.total_phase_change(), 1e-9);
}

TEST(PhaseSweep, UnwrappedStepsStayBelowLimitAndFollowFoster) {
  const auto net = series({capacitor(10e-15), stub(50.0, AngularFrequency::from_ghz(10.0))});
  SweepOptions o;
  o.base_points = 64;
  const auto p = phase_sweep(net, AngularFrequency::from_ghz(9.0), AngularFrequency::from_ghz(11.0), o);
  ASSERT_GT(p.size(), 64u);
  for (std::size_t i = 1; i < p.size(); ++i) {
    EXPECT_GT(p.grid[i], p.grid[i - 1]);
    EXPECT_LE(p.theta[i], p.theta[i - 1]);
    EXPECT_LT(p.theta[i - 1] - p.theta[i], o.max_step);
  }
}

TEST(PhaseSweep, RefinementLimitIsReported) {
  const auto net = series({capacitor(10e-15), stub(50.0, AngularFrequency::from_ghz(10.0))});
  SweepOptions o;
  o.base_points = 64;
  o.max_points = 70;
  EXPECT_THROW(phase_sweep(net, AngularFrequency::from_ghz(9.0), AngularFrequency::from_ghz(11.0), o),
               RefinementLimit);
}

TEST(PhaseSweep, ShiftBranchMovesEverySample) {
  const auto net = capacitor(1e-13);
  auto p = phase_sweep(net, AngularFrequency::from_ghz(1.0), AngularFrequency::from_ghz(2.0), 64);
  const auto before = p.theta;
  p.shift_branch(-2);
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_DOUBLE_EQ(p.theta[i], before[i] - 2 * kTwoPi);
}

TEST(PhaseCurve, AgreesWithPrincipalPhaseAndAnchors) {
  const auto net = series({capacitor(10e-15), stub(50.0, AngularFrequency::from_ghz(10.0))});
  const PhaseCurve curve(net, AngularFrequency::from_ghz(9.5), AngularFrequency::from_ghz(10.5), SweepOptions{},
                         10.0);
  EXPECT_NEAR(curve(curve.lo()), 10.0, kPi);
  for (double f : {9.6, 9.9, 10.0, 10.3}) {
    const auto w = AngularFrequency::from_ghz(f);
    EXPECT_NEAR(wrap_phase(curve(w) - reflection_phase(net, w, 50.0)), 0.0, 1e-12);
  }
  EXPECT_THROW(curve(AngularFrequency::from_ghz(11.0)), std::out_of_range);
}

}  // namespace
}  // namespace cqp
