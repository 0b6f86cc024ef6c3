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

#include "apnforge/linear_map.hpp"

#include <bit>

#include "apnforge/error.hpp"

namespace apnforge {

LinearMap::LinearMap(std::span<const std::uint64_t> images)
    : bits_(static_cast<unsigned>(images.size())),
      chunks_((bits_ + 7) / 8),
      table_(std::size_t{chunks_} * 256, 0) {
  if (bits_ == 0 || bits_ > 64) throw Error("LinearMap: input width must be 1..64 bits");
  for (unsigned c = 0; c < chunks_; ++c) {
    std::uint64_t* t = table_.data() + std::size_t{c} * 256;
    for (unsigned byte = 1; byte < 256; ++byte) {
      // Gray-code style: reuse the entry with the lowest bit cleared.
      const unsigned low = static_cast<unsigned>(std::countr_zero(byte));
      const unsigned bit = 8 * c + low;
      const std::uint64_t img = bit < bits_ ? images[bit] : 0;
      t[byte] = t[byte & (byte - 1)] ^ img;
    }
  }
}

LinearMap LinearMap::from_function(unsigned n, const std::function<std::uint64_t(std::uint64_t)>& f) {
  std::vector<std::uint64_t> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = f(std::uint64_t{1} << i);
  return LinearMap(images);
}

LinearMap frobenius_map(const Field& field, std::int64_t k) {
  return LinearMap::from_function(field.degree(), [&](std::uint64_t x) { return field.frob(Fe(x), k).bits; });
}

}  // namespace apnforge
