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

#ifndef CQP_PHASE_PROFILE_HPP
#define CQP_PHASE_PROFILE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cqp/network.hpp"
#include "cqp/units.hpp"

namespace cqp {

/// Unwrapped reflection phase sampled on an adaptively refined grid.
///
/// Sign convention: theta decreases with increasing frequency through every
/// resonance (the reactance of a lossless one-port increases with frequency).
struct PhaseProfile {
  std::vector<double> grid;   // rad/s, strictly increasing
  std::vector<double> theta;  // rad, unwrapped, same length as grid
  std::vector<double> poles;  // rad/s, impedance poles from foster_points

  std::size_t size() const noexcept { return grid.size(); }

  /// theta(hi) - theta(lo), including the non-resonant background drift.
  double total_phase_change() const;

  /// Signed phase carried by complete revolutions of r around the unit circle:
  /// -2*pi times the number of times theta crosses a multiple of 2*pi (r = +1).
  /// Counted from theta alone, independently of the pole list.
  double winding() const;

  /// Adds 2*pi*k to every theta sample.
  void shift_branch(long k);
};

struct SweepOptions {
  std::size_t base_points = 64;
  double max_step = 0.25 * kPi;  // rad between adjacent samples
  std::size_t max_points = std::size_t{1} << 24;
  double z0 = 50.0;
};

/// Samples arg r over [lo, hi] on a uniform base grid augmented with a node
/// between every pair of adjacent poles and zeros, bisects every interval
/// whose wrapped phase step is >= max_step (or runs against the Foster
/// direction), and accumulates the wrapped steps.
///
/// Throws RefinementLimit when more than max_points samples would be needed.
PhaseProfile phase_sweep(const NetworkElement& net, AngularFrequency lo, AngularFrequency hi,
                         const SweepOptions& options);

PhaseProfile phase_sweep(const NetworkElement& net, AngularFrequency lo, AngularFrequency hi,
                         std::size_t base_points, double z0 = 50.0);

/// Unwrapped phase of one network that can be evaluated at any frequency inside
/// its sweep window. The stored profile only selects the 2*pi branch; the value
/// itself is recomputed from the network, so it is exact to rounding.
class PhaseCurve {
 public:
  /// anchor_reference, when given, moves the whole curve to the branch whose
  /// value at lo is nearest to it. Curves built with the same reference are
  /// directly comparable.
  PhaseCurve(NetworkElement net, AngularFrequency lo, AngularFrequency hi,
             const SweepOptions& options, std::optional<double> anchor_reference = std::nullopt);

  double operator()(AngularFrequency w) const;
  double operator()(double w_rad_per_s) const;

  const PhaseProfile& profile() const noexcept { return profile_; }
  const NetworkElement& network() const noexcept { return net_; }
  double z0() const noexcept { return z0_; }
  double lo() const noexcept { return profile_.grid.front(); }
  double hi() const noexcept { return profile_.grid.back(); }

 private:
  NetworkElement net_;
  double z0_;
  PhaseProfile profile_;
};

}  // namespace cqp

#endif  // CQP_PHASE_PROFILE_HPP
