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


#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "cqp/errors.hpp"
#include "cqp/network.hpp"
#include "cqp/phase_profile.hpp"
#include "random_network.hpp"

namespace cqp {
namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

// Reactance of Parallel{Series{C_k, stub_k}} evaluated in 50-digit arithmetic.
Big two_branch_reactance(const std::vector<double>& cc, const std::vector<double>& wr, double z0,
                         double w) {
  const Big pi = boost::math::constants::pi<Big>();
  Big b = 0;
  for (std::size_t k = 0; k < cc.size(); ++k) {
    const Big x = -1 / (Big(w) * cc[k]) + Big(z0) * tan(pi / 2 * Big(w) / wr[k]);
    b -= 1 / x;
  }
  return -1 / b;
}

double phase_from_reactance(const Big& x, double z0) {
  const Big pi = boost::math::constants::pi<Big>();
  return static_cast<double>(pi - 2 * atan(x / z0));
}

TEST(Network, CapacitorReactanceAtTenGigahertz) {
  const auto z = network_impedance(capacitor(10e-15), AngularFrequency::from_ghz(10.0));
  EXPECT_DOUBLE_EQ(z.real(), 0.0);
  EXPECT_NEAR(z.imag(), -1591.549430919, 1e-6);
}

TEST(Network, InductiveLoadReflectsAtQuarterTurn) {
  // Z = i 50 Ohm on a 50 Ohm line gives r = i.
  const double l = 50.0 / AngularFrequency::from_ghz(1.0).rad_per_s();
  const auto r = reflection_coefficient(inductor(l), AngularFrequency::from_ghz(1.0), 50.0);
  EXPECT_NEAR(r.real(), 0.0, 1e-14);
  EXPECT_NEAR(r.imag(), 1.0, 1e-14);
}

TEST(Network, ShortAndOpenLimits) {
  const auto wr = AngularFrequency::from_ghz(10.0);
  // A stub at half its resonance is i Z0 tan(pi/4) = i Z0.
  const auto z = stub_impedance(AngularFrequency::from_ghz(5.0), 50.0, wr);
  EXPECT_NEAR(z.imag(), 50.0, 1e-12);
  EXPECT_THROW(stub_impedance(wr, 50.0, wr), PoleProximity);
  // At the pole the projective form still yields r = +1.
  const auto r = reflection_coefficient(lumped_resonator(wr, 50.0), wr, 50.0);
  EXPECT_NEAR(r.real(), 1.0, 1e-9);
}

TEST(Network, TwoBranchStubDeviceMatchesExtendedPrecision) {
  const std::vector<double> cc{10e-15, 10e-15};
  const std::vector<double> wr{AngularFrequency::from_ghz(9.99).rad_per_s(),
                               AngularFrequency::from_ghz(10.01).rad_per_s()};
  const auto net = parallel({series({capacitor(cc[0]), stub(50.0, AngularFrequency(wr[0]))}),
                             series({capacitor(cc[1]), stub(50.0, AngularFrequency(wr[1]))})});
  for (double f = 9.6; f <= 10.2; f += 0.0123) {
    const auto w = AngularFrequency::from_ghz(f);
    const Big x = two_branch_reactance(cc, wr, 50.0, w.rad_per_s());
    const double expect = wrap_phase(phase_from_reactance(x, 50.0));
    EXPECT_NEAR(wrap_phase(reflection_phase(net, w, 50.0) - expect), 0.0, 1e-11) << f;
  }
}

TEST(Network, HandWrittenSeriesBranch) {
  const double c = 10e-15;
  const auto wr = AngularFrequency::from_ghz(10.0);
  const auto w = AngularFrequency::from_ghz(9.9);
  const double x = -1.0 / (w.rad_per_s() * c) + 50.0 * std::tan(kPi / 2 * w.rad_per_s() / wr.rad_per_s());
  const auto z = network_impedance(series({capacitor(c), stub(50.0, wr)}), w);
  EXPECT_NEAR(z.imag(), x, 1e-9 * std::abs(x));
}

TEST(Network, RandomLosslessNetworksAreUnimodular) {
  testing::NetworkGenerator gen(20260917);
  for (int i = 0; i < 1000; ++i) {
    const auto net = gen();
    const auto w = gen.frequency(1.0, 30.0);
    const auto r = reflection_coefficient(net, w, 50.0);
    ASSERT_NEAR(std::abs(r), 1.0, 1e-9) << "network " << i;
  }
}

TEST(Network, FosterPhaseDecreasesWithFrequency) {
  testing::NetworkGenerator gen(7);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const auto net = gen();
    const auto w = gen.frequency(1.0, 30.0);
    const double h = 1e-7 * w.rad_per_s();
    const double step = wrap_phase(reflection_phase(net, AngularFrequency(w.rad_per_s() + h), 50.0) -
                                   reflection_phase(net, w, 50.0));
    if (std::abs(step) < 1e-12) continue;  // flat to rounding, no information
    EXPECT_LT(step, 0.0) << "network " << i;
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

TEST(Network, FosterPointsInterlaceAndAreExact) {
  testing::NetworkGenerator gen(99);
  const auto lo = AngularFrequency::from_ghz(1.0);
  const auto hi = AngularFrequency::from_ghz(30.0);
  for (int i = 0; i < 200; ++i) {
    const auto net = gen();
    const auto fp = foster_points(net, lo, hi);
    std::vector<std::pair<double, int>> all;
    for (double p : fp.poles) all.push_back({p, 1});
    for (double z : fp.zeros) all.push_back({z, 0});
    std::sort(all.begin(), all.end());
    for (std::size_t k = 1; k < all.size(); ++k) {
      ASSERT_NE(all[k].second, all[k - 1].second) << "network " << i;
    }
    for (double p : fp.poles) {
      EXPECT_NEAR(std::real(reflection_coefficient(net, AngularFrequency(p), 50.0)), 1.0, 1e-6);
    }
    for (double z : fp.zeros) {
      EXPECT_NEAR(std::real(reflection_coefficient(net, AngularFrequency(z), 50.0)), -1.0, 1e-6);
    }
    // Each pole is one revolution of r.
    const auto prof = phase_sweep(net, lo, hi, 64);
    EXPECT_NEAR(prof.winding(), -kTwoPi * static_cast<double>(fp.poles.size()), 1e-9) << "network " << i;
  }
}

TEST(Network, LumpedResonatorTracksStubNearResonance) {
  const auto wr = AngularFrequency::from_ghz(10.0);
  const auto lumped = lumped_resonator(wr, 50.0);
  const auto line = stub(50.0, wr);
  for (double detune : {-0.02, -0.01, -0.004, 0.004, 0.01, 0.02}) {
    const auto w = AngularFrequency(wr.rad_per_s() * (1.0 + detune));
    const double xl = network_impedance(lumped, w).imag();
    const double xs = network_impedance(line, w).imag();
    EXPECT_NEAR(xl / xs, 1.0, 0.02) << detune;
  }
}

TEST(Network, LumpedEquivalentValues) {
  const auto wr = AngularFrequency::from_ghz(10.0);
  const auto eq = lumped_equivalent(wr, 50.0);
  EXPECT_NEAR(eq.capacitance, kPi / (4.0 * wr.rad_per_s() * 50.0), 1e-30);
  EXPECT_NEAR(1.0 / std::sqrt(eq.capacitance * eq.inductance), wr.rad_per_s(), 1e-3);
}

TEST(Network, RejectsMalformedElements) {
  EXPECT_THROW(capacitor(0.0), std::invalid_argument);
  EXPECT_THROW(inductor(-1e-9), std::invalid_argument);
  EXPECT_THROW(series({}), std::invalid_argument);
  EXPECT_THROW(AngularFrequency(std::nan("")), std::invalid_argument);
}

TEST(Network, ReactanceSeriesAddsParallelAddsSusceptance) {
  const auto w = AngularFrequency::from_ghz(3.0);
  const double xc = -1.0 / (w.rad_per_s() * 1e-13);
  const double xl = w.rad_per_s() * 2e-9;
  const auto s = network_reactance(series({capacitor(1e-13), inductor(2e-9)}), w);
  EXPECT_NEAR(s.num / s.den, xc + xl, 1e-9 * std::abs(xc + xl));
  const auto p = network_reactance(parallel({capacitor(1e-13), inductor(2e-9)}), w);
  EXPECT_NEAR(p.num / p.den, -1.0 / (-1.0 / xc - 1.0 / xl), 1e-9 * std::abs(p.num / p.den));
}

}  // namespace
}  // namespace cqp
