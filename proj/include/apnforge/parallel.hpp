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

#ifndef APNFORGE_PARALLEL_HPP_
#define APNFORGE_PARALLEL_HPP_

#include <cstdint>
#include <functional>

namespace apnforge {

// Worker cap for all data-parallel sweeps. 0 means all hardware threads.
void set_thread_count(unsigned threads);
unsigned thread_count();

// Splits [begin, end) into contiguous chunks and calls
// body(worker, chunk_begin, chunk_end) once per chunk. Worker indices are
// dense in [0, workers) so callers can keep per-worker accumulators. The
// first exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned workers,
                  const std::function<void(unsigned, std::uint64_t,
                                           std::uint64_t)>& body);

// Number of workers parallel_for will use for a range of `items`.
unsigned workers_for(std::uint64_t items);

}  // namespace apnforge

#endif  // APNFORGE_PARALLEL_HPP_
