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


// Random lossless one-ports for property checks.

#ifndef CQP_TESTS_RANDOM_NETWORK_HPP
#define CQP_TESTS_RANDOM_NETWORK_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cqp/network.hpp"

namespace cqp::testing {

class NetworkGenerator {
 public:
  explicit NetworkGenerator(std::uint64_t seed) : rng_(seed) {}

  NetworkElement operator()(int depth = 3) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 4 : 2);
    const int k = kind(rng_);
    switch (k) {
      case 0:
        return capacitor(log_uniform(1e-16, 1e-12));
      case 1:
        return inductor(log_uniform(1e-11, 1e-7));
      case 2:
        return stub(log_uniform(10.0, 200.0), AngularFrequency::from_ghz(log_uniform(2.0, 20.0)));
      default: {
        std::uniform_int_distribution<int> width(1, 3);
        std::vector<NetworkElement> children;
        for (int i = width(rng_); i > 0; --i) children.push_back((*this)(depth - 1));
        return k == 3 ? series(std::move(children)) : parallel(std::move(children));
      }
    }
  }

  AngularFrequency frequency(double lo_ghz, double hi_ghz) {
    return AngularFrequency::from_ghz(std::uniform_real_distribution<double>(lo_ghz, hi_ghz)(rng_));
  }

 private:
  double log_uniform(double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng_));
  }

  std::mt19937_64 rng_;
};

}  // namespace cqp::testing

#endif  // CQP_TESTS_RANDOM_NETWORK_HPP
