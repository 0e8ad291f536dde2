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

#ifndef CQP_UNITS_HPP
#define CQP_UNITS_HPP

#include <compare>
#include <numbers>

namespace cqp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduced Planck constant, J*s (CODATA 2018, exact).
inline constexpr double kHbar = 1.054571817e-34;

/// Converts an ordinary frequency (Hz) to an angular rate (rad/s).
///
/// This is the only place in the library that multiplies by 2*pi. Everything
/// that accepts Hz, GHz or MHz (including dispersive shifts quoted as chi/2pi)
/// goes through here.
double to_angular(double hz) noexcept;

/// Inverse of to_angular.
double to_ordinary(double rad_per_s) noexcept;

/// Strictly positive angular frequency in rad/s.
class AngularFrequency {
 public:
  /// Throws std::invalid_argument unless rad_per_s is finite and > 0.
  explicit AngularFrequency(double rad_per_s);

  static AngularFrequency from_hz(double hz);
  static AngularFrequency from_ghz(double ghz) { return from_hz(ghz * 1e9); }
  static AngularFrequency from_mhz(double mhz) { return from_hz(mhz * 1e6); }

  double rad_per_s() const noexcept { return value_; }
  double hz() const noexcept { return to_ordinary(value_); }
  double ghz() const noexcept { return hz() * 1e-9; }

  friend auto operator<=>(const AngularFrequency&, const AngularFrequency&) = default;

 private:
  double value_;
};

/// Maps an angle into (-pi, pi].
double wrap_phase(double radians) noexcept;

inline double degrees(double radians) noexcept { return radians * 180.0 / kPi; }
inline double radians(double degrees) noexcept { return degrees * kPi / 180.0; }

}  // namespace cqp

#endif  // CQP_UNITS_HPP
