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

#ifndef CQP_PARALLEL_HPP
#define CQP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cqp {

/// Number of worker threads used by internal loops. Reads PARITY_THREADS once
/// (values < 1 are ignored) and otherwise uses the hardware concurrency.
unsigned worker_count();

/// Overrides worker_count() for the rest of the process; 0 restores the default.
void set_worker_count(unsigned threads);

/// Runs body(i) for i in [0, count). Each index is visited exactly once; callers
/// write results into slot i, so output never depends on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cqp

#endif  // CQP_PARALLEL_HPP
