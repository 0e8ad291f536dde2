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

#include <benchmark/benchmark.h>

#include "cqp/eraser.hpp"
#include "cqp/fidelity.hpp"
#include "cqp/phase_profile.hpp"

namespace {

using namespace cqp;

ParityDevice reference(ResonatorModel model) {
  return ParityDevice::equal_coupling(
      3, {{AngularFrequency::from_ghz(9.99), 10e-15}, {AngularFrequency::from_ghz(10.01), 10e-15}},
      to_angular(5.77e6), 50.0, model, Band{AngularFrequency::from_ghz(9.6), AngularFrequency::from_ghz(10.2)});
}

void BM_PhaseSweep(benchmark::State& state) {
  const auto dev = reference(ResonatorModel::kStub);
  const auto net = build_state_network(dev, QubitState::from_string("010"));
  for (auto _ : state) {
    auto p = phase_sweep(net, dev.band().lo, dev.band().hi, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(p.theta.back());
  }
}
BENCHMARK(BM_PhaseSweep)->Arg(256)->Arg(2048)->Arg(16384);

void BM_DeviceResponse(benchmark::State& state) {
  const auto dev = reference(ResonatorModel::kStub);
  for (auto _ : state) {
    DeviceResponse r(dev);
    benchmark::DoNotOptimize(r.anchor());
  }
}
BENCHMARK(BM_DeviceResponse)->Unit(benchmark::kMillisecond);

void BM_SolveReference(benchmark::State& state) {
  const auto dev = reference(ResonatorModel::kStub);
  SolveOptions o;
  o.grid_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto s = solve_eraser(dev, o);
    benchmark::DoNotOptimize(s.chi);
  }
}
BENCHMARK(BM_SolveReference)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond);

void BM_FidelityNumeric(benchmark::State& state) {
  const auto wp = AngularFrequency::from_ghz(9.8);
  const ProbePulse pulse(std::sqrt(5.0), wp, 1e6);
  const auto grid = build_mode_grid(wp, 1e6, kDefaultSpanSigmas, static_cast<std::size_t>(state.range(0)));
  const auto a = [](double) { return 0.0; };
  const auto b = [&](double w) { return 1e-7 * (w - wp.rad_per_s()); };
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_numeric(a, b, pulse, grid));
}
BENCHMARK(BM_FidelityNumeric)->Arg(4001)->Arg(8001);

}  // namespace

BENCHMARK_MAIN();
