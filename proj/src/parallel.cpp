// Copyright 2026 The apnforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "apnforge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include "apnforge/error.hpp"

namespace apnforge {
namespace {

std::atomic<unsigned> g_thread_cap{0};
std::atomic<bool> g_warnings{true};

}  // namespace

void warn(const std::string& message) {
  if (g_warnings.load()) std::cerr << "warning: " << message << '\n';
}

void set_warnings_enabled(bool enabled) { g_warnings.store(enabled); }

void set_thread_count(unsigned threads) { g_thread_cap.store(threads); }

unsigned thread_count() {
  const unsigned cap = g_thread_cap.load();
  if (cap != 0) return cap;
  return std::max(1u, std::thread::hardware_concurrency());
}

unsigned workers_for(std::uint64_t items) {
  // Below this many items a thread costs more than it saves.
  constexpr std::uint64_t kMinItemsPerWorker = 1024;
  const std::uint64_t useful = std::max<std::uint64_t>(1, items / kMinItemsPerWorker);
  return static_cast<unsigned>(std::min<std::uint64_t>(thread_count(), useful));
}

void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned workers,
                  const std::function<void(unsigned, std::uint64_t,
                                           std::uint64_t)>& body) {
  if (end <= begin) return;
  workers = std::max(1u, workers);
  const std::uint64_t total = end - begin;
  if (workers == 1 || total < workers) {
    body(0, begin, end);
    return;
  }
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + w * chunk;
    const std::uint64_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi] {
      try {
        body(w, lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace apnforge
