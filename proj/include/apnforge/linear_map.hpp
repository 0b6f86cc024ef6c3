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

#ifndef APNFORGE_LINEAR_MAP_HPP_
#define APNFORGE_LINEAR_MAP_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "apnforge/field.hpp"

namespace apnforge {

// A GF(2)-linear map on n-bit vectors (n <= 64), evaluated with one
// 256-entry lookup table per input byte. Hot sweeps use this for Frobenius
// powers and for the linearized maps themselves.
class LinearMap {
 public:
  // images[i] = image of the i-th unit vector.
  explicit LinearMap(std::span<const std::uint64_t> images);

  static LinearMap from_function(unsigned n, const std::function<std::uint64_t(std::uint64_t)>& f);

  std::uint64_t operator()(std::uint64_t x) const {
    std::uint64_t out = 0;
    const std::uint64_t* t = table_.data();
    for (unsigned c = 0; c < chunks_; ++c, t += 256) out ^= t[(x >> (8 * c)) & 0xff];
    return out;
  }
  Fe operator()(Fe x) const { return Fe((*this)(x.bits)); }

  unsigned input_bits() const { return bits_; }

 private:
  unsigned bits_ = 0;
  unsigned chunks_ = 0;
  std::vector<std::uint64_t> table_;
};

// x -> x^(2^k) on the given field.
LinearMap frobenius_map(const Field& field, std::int64_t k);

}  // namespace apnforge

#endif  // APNFORGE_LINEAR_MAP_HPP_
