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

// Binary fields GF(2^n), n <= 48, in polynomial basis.
//
// Only one field is ever represented at a time: a subfield GF(2^d) of
// GF(2^n) is the set of elements fixed by frob(., d). In particular the
// tower GF(2^m) < GF(2^3m) lives entirely inside a degree-3m Field.

#ifndef APNFORGE_FIELD_HPP_
#define APNFORGE_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "apnforge/gf2.hpp"

namespace apnforge {

// A field element: bit i is the coefficient of x^i.
struct Fe {
  std::uint64_t bits = 0;

  constexpr Fe() = default;
  constexpr explicit Fe(std::uint64_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }

  friend constexpr Fe operator+(Fe a, Fe b) { return Fe(a.bits ^ b.bits); }
  friend constexpr Fe operator-(Fe a, Fe b) { return Fe(a.bits ^ b.bits); }
  constexpr Fe& operator+=(Fe o) {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

inline constexpr Fe add(Fe a, Fe b) { return a + b; }

std::string to_hex(Fe a);
// Accepts an optional 0x prefix. Throws Error("malformed hex") otherwise.
Fe parse_hex(const std::string& text);

class Field {
 public:
  static constexpr unsigned kMaxDegree = 48;

  unsigned degree() const { return n_; }
  std::uint64_t modulus() const { return modulus_; }
  // Smallest-encoding primitive element.
  Fe generator() const { return generator_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  std::uint64_t group_order() const { return size() - 1; }

  bool contains(Fe a) const { return (a.bits & ~mask_) == 0; }
  // Throws Error("element out of range") if bits above n-1 are set.
  Fe element(std::uint64_t bits) const;

  Fe mul(Fe a, Fe b) const { return reduce(gf2::clmul(a.bits, b.bits)); }
  Fe sqr(Fe a) const { return mul(a, a); }
  Fe inv(Fe a) const;
  Fe pow(Fe a, std::uint64_t e) const;
  // a^(2^k), k taken mod n (negative k allowed).
  Fe frob(Fe a, std::int64_t k) const;
  bool in_subfield(Fe a, unsigned d) const { return frob(a, d) == a; }

  // Unreduced carryless product and the matching reduction, for callers
  // that accumulate several products before reducing once.
  static u128 mul_raw(Fe a, Fe b) { return gf2::clmul(a.bits, b.bits); }
  Fe reduce(u128 p) const {
    // x^n = tail, so fold everything above bit n-1 back down.
    for (u128 hi = p >> n_; hi != 0; hi = p >> n_) {
      p = (p & mask_) ^ fold(hi);
    }
    return Fe(static_cast<std::uint64_t>(p));
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.n_ == b.n_ && a.modulus_ == b.modulus_;
  }

 private:
  friend Field make_field(unsigned n);
  friend Field make_field_with_modulus(unsigned n, std::uint64_t modulus);
  Field(unsigned n, std::uint64_t modulus);

  u128 fold(u128 hi) const {
    const auto lo = static_cast<std::uint64_t>(hi);
    const auto top = static_cast<std::uint64_t>(hi >> 64);
    u128 r = gf2::clmul(lo, tail_);
    if (top != 0) r ^= gf2::clmul(top, tail_) << 64;
    return r;
  }

  unsigned n_ = 0;
  std::uint64_t modulus_ = 0;
  std::uint64_t tail_ = 0;
  std::uint64_t mask_ = 0;
  Fe generator_;
};

// The canonical field of degree n: its modulus is the monic irreducible of
// degree n with nonzero constant term whose bit encoding is smallest.
// Throws Error("unsupported degree") unless 1 <= n <= 48.
Field make_field(unsigned n);
std::uint64_t canonical_modulus(unsigned n);

// A field over an explicit modulus (used when cross-checking external
// modulus tables). Throws Error if the modulus is not irreducible of degree n.
Field make_field_with_modulus(unsigned n, std::uint64_t modulus);

// mu^(2^2m + 2^m + 1), the norm from GF(2^3m) down to GF(2^m).
// Throws Error("not a cubic extension") unless the degree is 3m.
Fe rel_norm(const Field& field, unsigned m, Fe mu);

// The smallest-encoding root of g inside the subfield of size 2^d.
// g is a GF(2) polynomial in bit encoding with deg g = d.
Fe subfield_root(const Field& field, std::uint64_t g, unsigned d);

// The unique x with x^e = c, for gcd(e, 2^n - 1) = 1 and c != 0.
Fe solve_exp_eq(const Field& field, std::uint64_t e, Fe c);

// Elements of the subfield of size 2^d in ascending encoding order.
// Intended for small subfields (d <= 24).
std::vector<Fe> subfield_elements(const Field& field, unsigned d);

// Generator of the kernel of the norm GF(2^3m)* -> GF(2^m)*, a cyclic
// group of order 2^2m + 2^m + 1.
Fe norm_one_generator(const Field& field, unsigned m);

// Prime factors of 2^n - 1, ascending, without multiplicity.
std::vector<std::uint64_t> group_order_prime_factors(unsigned n);

// Modulus table text format: "n<TAB>hex" per line, hex of the full modulus
// with bit 0 the constant term.
std::string format_moduli_table(unsigned max_degree = Field::kMaxDegree);
std::map<unsigned, std::uint64_t> parse_moduli_table(std::istream& in);

}  // namespace apnforge

#endif  // APNFORGE_FIELD_HPP_
