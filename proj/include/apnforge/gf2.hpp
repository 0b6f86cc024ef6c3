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

// Polynomials over GF(2) packed into machine words (bit i = coefficient of
// x^i) and GF(2) linear algebra on packed rows.

#ifndef APNFORGE_GF2_HPP_
#define APNFORGE_GF2_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#if defined(__PCLMUL__) && defined(__SSE4_1__)
#include <immintrin.h>
#define APNFORGE_HW_CLMUL 1
#endif

namespace apnforge {

using u128 = unsigned __int128;

namespace gf2 {

// -1 for the zero polynomial.
inline int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }
inline int degree(u128 p) {
  const auto hi = static_cast<std::uint64_t>(p >> 64);
  return hi != 0 ? 127 - std::countl_zero(hi) : degree(static_cast<std::uint64_t>(p));
}

// Schoolbook carryless product. Always available; also the reference the
// hardware path is tested against.
u128 clmul_portable(std::uint64_t a, std::uint64_t b);

// Carryless product, using PCLMULQDQ when compiled with it.
inline u128 clmul(std::uint64_t a, std::uint64_t b) {
#ifdef APNFORGE_HW_CLMUL
  const __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                         _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
  const auto lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(r));
  const auto hi = static_cast<std::uint64_t>(_mm_extract_epi64(r, 1));
  return (static_cast<u128>(hi) << 64) | lo;
#else
  return clmul_portable(a, b);
#endif
}

// p mod modulus, for a modulus of degree 1..63.
std::uint64_t reduce(u128 p, std::uint64_t modulus);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Inverse of a modulo an irreducible modulus; a must be nonzero mod modulus.
std::uint64_t invmod(std::uint64_t a, std::uint64_t modulus);

// Ben-Or: f of degree n is irreducible iff x^(2^n) = x mod f and
// gcd(f, x^(2^k) - x) = 1 for every k <= n/2.
bool is_irreducible(std::uint64_t f);

inline unsigned lowest_bit(std::uint64_t v) { return static_cast<unsigned>(std::countr_zero(v)); }
inline unsigned lowest_bit(u128 v) {
  const auto lo = static_cast<std::uint64_t>(v);
  return lo != 0 ? lowest_bit(lo) : 64 + lowest_bit(static_cast<std::uint64_t>(v >> 64));
}

// Rank of a set of GF(2) row vectors. Pivots on the lowest set bit.
template <typename Row>
unsigned rank(std::span<const Row> rows) {
  constexpr unsigned kBits = sizeof(Row) * 8;
  Row basis[kBits] = {};
  unsigned r = 0;
  for (Row row : rows) {
    while (row != 0) {
      const unsigned pivot = lowest_bit(row);
      if (basis[pivot] == 0) {
        basis[pivot] = row;
        ++r;
        break;
      }
      row ^= basis[pivot];
    }
  }
  return r;
}

}  // namespace gf2
}  // namespace apnforge

#endif  // APNFORGE_GF2_HPP_
