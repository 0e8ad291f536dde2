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

#include "cqp/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cqp {
namespace {

std::atomic<unsigned> g_override{0};

// Nested parallel_for calls run inline on the calling worker.
thread_local bool t_inside_parallel = false;

unsigned default_workers() {
  static const unsigned value = [] {
    if (const char* env = std::getenv("PARITY_THREADS")) {
      try {
        const long n = std::stol(env);
        if (n >= 1) return static_cast<unsigned>(n);
      } catch (const std::exception&) {
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }();
  return value;
}

}  // namespace

unsigned worker_count() {
  const unsigned o = g_override.load();
  return o != 0 ? o : default_workers();
}

void set_worker_count(unsigned threads) { g_override.store(threads); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1 || t_inside_parallel) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  // The lowest failing index wins so the rethrown error is schedule independent.
  std::exception_ptr failure;
  std::size_t failure_index = count;
  std::mutex failure_mutex;
  auto run = [&] {
    const bool was_inside = t_inside_parallel;
    t_inside_parallel = true;
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (i < failure_index) {
          failure_index = i;
          failure = std::current_exception();
        }
      }
    }
    t_inside_parallel = was_inside;
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace cqp
