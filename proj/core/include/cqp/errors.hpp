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

#ifndef CQP_ERRORS_HPP
#define CQP_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace cqp {

/// Base class for every numerical failure reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An impedance was requested at (or numerically at) one of its poles.
class PoleProximity : public Error {
 public:
  using Error::Error;
};

/// Adaptive phase unwrapping needed more points than allowed.
class RefinementLimit : public Error {
 public:
  using Error::Error;
};

/// Dispersive shifts pushed a mode frequency to zero or below.
class NonPositiveResult : public Error {
 public:
  using Error::Error;
};

/// Best point the eraser search reached before giving up.
struct SearchCandidate {
  double w_p;            // rad/s
  double chi;            // rad/s
  double residual_norm;  // rad
};

/// The eraser solver could not satisfy the phase conditions.
class NoSolution : public Error {
 public:
  explicit NoSolution(const std::string& what,
                      std::optional<SearchCandidate> best = std::nullopt)
      : Error(what), best_(best) {}

  const std::optional<SearchCandidate>& best() const noexcept { return best_; }

 private:
  std::optional<SearchCandidate> best_;
};

/// The solved probe frequency sits on a reflection pole of some state.
class PoleCollision : public Error {
 public:
  using Error::Error;
};

/// Even and odd parities reflect with the same phase.
class EraserDegenerate : public Error {
 public:
  using Error::Error;
};

}  // namespace cqp

#endif  // CQP_ERRORS_HPP
