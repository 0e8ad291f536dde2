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

#ifndef CQP_ESTIMATES_HPP
#define CQP_ESTIMATES_HPP

#include <string_view>

namespace cqp {

/// How a quoted "MHz" rate was read.
enum class RateConvention {
  kAngular,   // the quoted number is rate/2pi; rad/s = 2 pi * value
  kOrdinary,  // the quoted number is used as a rate in 1/s directly
};

std::string_view to_string(RateConvention c) noexcept;

/// Result computed under both conventions, with the preferred one named.
struct ConventionPair {
  double angular;
  double ordinary;
  RateConvention preferred;

  double value() const noexcept {
    return preferred == RateConvention::kAngular ? angular : ordinary;
  }
};

/// Purcell-limited T1 = Delta / (kappa chi) in seconds, inputs in rad/s.
/// angular: every rate as given. ordinary: kappa divided by 2 pi, i.e. the
/// quoted loss rate taken as 1/s (Delta/chi is convention free). The second
/// reading gives the ~200 us scale expected for a 5 GHz detuning and is
/// preferred.
ConventionPair purcell_t1(double detuning, double kappa, double chi);

/// Same quantity from the coupling: Delta^2 / (kappa g^2).
double purcell_t1_from_coupling(double detuning, double kappa, double g);

/// safety_factor / chi in seconds (chi in rad/s). angular: chi as given.
/// ordinary: chi/2pi (about 2 us at 5.77 MHz), preferred.
ConventionPair measurement_time(double chi, double safety_factor = 10.0);

struct Power {
  double watts;
  double dbm;
};

/// P = |alpha|^2 hbar w_p / T. dBm is -inf for zero power.
Power peak_power(double alpha_sq, double w_p, double seconds);

/// Order-of-magnitude external loss rate of a quarter-wave resonator behind
/// a coupling capacitor: kappa = (4/pi) w_r^3 C_c^2 Z0^2, rad/s.
double kappa_from_coupling(double coupling_capacitance, double z0, double w_r);

}  // namespace cqp

#endif  // CQP_ESTIMATES_HPP
