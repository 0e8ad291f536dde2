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

#include "cqp/estimates.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cqp/units.hpp"

namespace cqp {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

std::string_view to_string(RateConvention c) noexcept {
  return c == RateConvention::kAngular ? "angular (quoted MHz = rate/2pi)"
                                       : "ordinary (quoted MHz used as 1/s)";
}

ConventionPair purcell_t1(double detuning, double kappa, double chi) {
  require_positive(detuning, "detuning");
  require_positive(kappa, "kappa");
  require_positive(chi, "chi");
  const double ratio = detuning / chi;
  return {ratio / kappa, ratio / to_ordinary(kappa), RateConvention::kOrdinary};
}

double purcell_t1_from_coupling(double detuning, double kappa, double g) {
  require_positive(detuning, "detuning");
  require_positive(kappa, "kappa");
  require_positive(g, "g");
  return detuning * detuning / (kappa * g * g);
}

ConventionPair measurement_time(double chi, double safety_factor) {
  require_positive(chi, "chi");
  require_positive(safety_factor, "safety factor");
  return {safety_factor / chi, safety_factor / to_ordinary(chi), RateConvention::kOrdinary};
}

Power peak_power(double alpha_sq, double w_p, double seconds) {
  if (!(alpha_sq >= 0.0)) throw std::invalid_argument("|alpha|^2 must be >= 0");
  require_positive(w_p, "probe frequency");
  require_positive(seconds, "pulse duration");
  const double p = alpha_sq * kHbar * w_p / seconds;
  const double dbm = p > 0.0 ? 10.0 * std::log10(p / 1e-3) : -std::numeric_limits<double>::infinity();
  return {p, dbm};
}

double kappa_from_coupling(double coupling_capacitance, double z0, double w_r) {
  if (!(coupling_capacitance >= 0.0)) throw std::invalid_argument("coupling must be >= 0");
  require_positive(z0, "Z0");
  require_positive(w_r, "resonance");
  const double cz = coupling_capacitance * z0;
  return 4.0 / kPi * w_r * w_r * w_r * cz * cz;
}

}  // namespace cqp
