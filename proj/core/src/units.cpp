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

#include "cqp/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cqp {

double to_angular(double hz) noexcept { return kTwoPi * hz; }

double to_ordinary(double rad_per_s) noexcept { return rad_per_s / kTwoPi; }

AngularFrequency::AngularFrequency(double rad_per_s) : value_(rad_per_s) {
  if (!std::isfinite(rad_per_s) || rad_per_s <= 0.0) {
    throw std::invalid_argument("angular frequency must be finite and positive, got " +
                                std::to_string(rad_per_s));
  }
}

AngularFrequency AngularFrequency::from_hz(double hz) { return AngularFrequency(to_angular(hz)); }

double wrap_phase(double radians) noexcept {
  double w = std::remainder(radians, kTwoPi);  // [-pi, pi]
  if (w <= -kPi) w += kTwoPi;
  return w;
}

}  // namespace cqp
