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

#include "apnforge/gf2.hpp"

#include <utility>

#include "apnforge/error.hpp"

namespace apnforge::gf2 {

u128 clmul_portable(std::uint64_t a, std::uint64_t b) {
  u128 acc = 0;
  const u128 wide = a;
  while (b != 0) {
    acc ^= wide << std::countr_zero(b);
    b &= b - 1;
  }
  return acc;
}

std::uint64_t reduce(u128 p, std::uint64_t modulus) {
  const int n = degree(modulus);
  if (n <= 0) throw Error("reduce: modulus must have positive degree");
  const u128 m = modulus;
  for (int d = degree(p); d >= n; d = degree(p)) p ^= m << (d - n);
  return static_cast<std::uint64_t>(p);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  return reduce(clmul(a, b), modulus);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    if (b == 1) return 1;
    a = reduce(a, b);
    std::swap(a, b);
  }
  return a;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t modulus) {
  // Invariants: g1 * a = u and g2 * a = v modulo the modulus.
  std::uint64_t u = reduce(a, modulus), v = modulus;
  std::uint64_t g1 = 1, g2 = 0;
  if (u == 0) throw Error("zero inversion");
  while (u != 1) {
    if (u == 0) throw Error("invmod: element not invertible");
    int shift = degree(u) - degree(v);
    if (shift < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      shift = -shift;
    }
    u ^= v << shift;
    g1 ^= g2 << shift;
  }
  return reduce(g1, modulus);
}

bool is_irreducible(std::uint64_t f) {
  const int n = degree(f);
  if (n <= 0) return false;
  std::uint64_t h = 2;  // x
  for (int k = 1; k <= n / 2; ++k) {
    h = mulmod(h, h, f);
    if (gcd(f, h ^ 2) != 1) return false;
  }
  return true;
}

}  // namespace apnforge::gf2
