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

#include "apnforge/field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

#include "apnforge/error.hpp"
#include "apnforge/upoly.hpp"

namespace apnforge {
namespace {

void check_degree(unsigned n) {
  if (n == 0 || n > Field::kMaxDegree) throw Error("unsupported degree");
}

std::uint64_t search_canonical_modulus(unsigned n) {
  // Odd candidates only: an even polynomial is divisible by x.
  for (std::uint64_t f = (std::uint64_t{1} << n) | 1; gf2::degree(f) == static_cast<int>(n); f += 2) {
    if (gf2::is_irreducible(f)) return f;
  }
  throw ContractViolation("no irreducible polynomial found");  // unreachable
}

// x^-1 mod modulus for gcd(x, modulus) = 1.
std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t modulus) {
  using i128 = __int128;
  i128 r0 = modulus, r1 = x % modulus;
  i128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const i128 q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 != 1) throw Error("exponent not invertible");
  if (t0 < 0) t0 += modulus;
  return static_cast<std::uint64_t>(t0);
}

}  // namespace

std::string to_hex(Fe a) {
  std::ostringstream os;
  os << std::hex << a.bits;
  return os.str();
}

Fe parse_hex(const std::string& text) {
  std::string_view s = text;
  if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("malformed hex: '" + text + "'");
  }
  return Fe(v);
}

std::vector<std::uint64_t> group_order_prime_factors(unsigned n) {
  check_degree(n);
  std::uint64_t rest = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 3; p * p <= rest; p += 2) {
    if (rest % p != 0) continue;
    primes.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) primes.push_back(rest);
  return primes;
}

Field::Field(unsigned n, std::uint64_t modulus)
    : n_(n),
      modulus_(modulus),
      tail_(modulus ^ (std::uint64_t{1} << n)),
      mask_((std::uint64_t{1} << n) - 1) {
  const auto primes = group_order_prime_factors(n);
  const std::uint64_t order = group_order();
  for (std::uint64_t c = 1; c < size(); ++c) {
    bool primitive = true;
    for (std::uint64_t p : primes) {
      if (pow(Fe(c), order / p) == Fe(1)) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = Fe(c);
      return;
    }
  }
  throw ContractViolation("no primitive element found");  // unreachable
}

Fe Field::element(std::uint64_t bits) const {
  if (!contains(Fe(bits))) throw Error("element out of range");
  return Fe(bits);
}

Fe Field::inv(Fe a) const {
  if (a.is_zero()) throw Error("zero inversion");
  return Fe(gf2::invmod(a.bits, modulus_));
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  if (e == 0) return Fe(1);
  if (a.is_zero()) return Fe();
  e %= group_order();
  Fe result(1);
  Fe base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = sqr(base);
    e >>= 1;
  }
  return result;
}

Fe Field::frob(Fe a, std::int64_t k) const {
  const auto n = static_cast<std::int64_t>(n_);
  k %= n;
  if (k < 0) k += n;
  for (std::int64_t i = 0; i < k; ++i) a = sqr(a);
  return a;
}

Field make_field(unsigned n) {
  check_degree(n);
  static const std::array<std::optional<Field>, Field::kMaxDegree + 1> table = [] {
    std::array<std::optional<Field>, Field::kMaxDegree + 1> t;
    for (unsigned d = 1; d <= Field::kMaxDegree; ++d) t[d] = Field(d, search_canonical_modulus(d));
    return t;
  }();
  return *table[n];
}

std::uint64_t canonical_modulus(unsigned n) { return make_field(n).modulus(); }

Field make_field_with_modulus(unsigned n, std::uint64_t modulus) {
  check_degree(n);
  if (gf2::degree(modulus) != static_cast<int>(n) || (modulus & 1) == 0 ||
      !gf2::is_irreducible(modulus)) {
    throw Error("modulus is not an irreducible polynomial of degree " + std::to_string(n));
  }
  return Field(n, modulus);
}

Fe rel_norm(const Field& field, unsigned m, Fe mu) {
  if (m == 0 || field.degree() != 3 * m) throw Error("not a cubic extension");
  return field.mul(field.mul(mu, field.frob(mu, m)), field.frob(mu, 2 * m));
}

Fe subfield_root(const Field& field, std::uint64_t g, unsigned d) {
  if (d == 0 || field.degree() % d != 0) throw Error("no such subfield");
  if (gf2::degree(g) != static_cast<int>(d) || !gf2::is_irreducible(g)) {
    throw Error("not irreducible of matching degree");
  }
  UPoly lifted;
  for (unsigned i = 0; i <= d; ++i) lifted.push_back(Fe((g >> i) & 1));
  for (Fe r : upoly::roots(field, lifted)) {
    if (field.in_subfield(r, d)) return r;  // roots() is ascending
  }
  throw Error("not irreducible of matching degree");
}

Fe solve_exp_eq(const Field& field, std::uint64_t e, Fe c) {
  if (c.is_zero()) throw Error("zero has no unit solution");
  const std::uint64_t order = field.group_order();
  if (order == 1) return Fe(1);
  if (std::gcd(e % order, order) != 1) throw Error("exponent not invertible");
  return field.pow(c, inverse_mod(e % order, order));
}

std::vector<Fe> subfield_elements(const Field& field, unsigned d) {
  if (d == 0 || field.degree() % d != 0) throw Error("no such subfield");
  if (d > 24) throw Error("subfield too large to enumerate");
  const std::uint64_t sub_order = (std::uint64_t{1} << d) - 1;
  const Fe zeta = field.pow(field.generator(), field.group_order() / sub_order);
  std::vector<Fe> out{Fe()};
  Fe cur(1);
  for (std::uint64_t k = 0; k < sub_order; ++k) {
    out.push_back(cur);
    cur = field.mul(cur, zeta);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fe norm_one_generator(const Field& field, unsigned m) {
  if (m == 0 || field.degree() != 3 * m) throw Error("not a cubic extension");
  return field.pow(field.generator(), (std::uint64_t{1} << m) - 1);
}

std::string format_moduli_table(unsigned max_degree) {
  if (max_degree > Field::kMaxDegree) throw Error("unsupported degree");
  std::ostringstream os;
  for (unsigned n = 1; n <= max_degree; ++n) {
    os << n << '\t' << std::hex << canonical_modulus(n) << std::dec << '\n';
  }
  return os.str();
}

std::map<unsigned, std::uint64_t> parse_moduli_table(std::istream& in) {
  std::map<unsigned, std::uint64_t> out;
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error("moduli table line " + std::to_string(lineno) + ": expected n<TAB>hex");
    }
    unsigned n = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, n);
    if (ec != std::errc() || ptr != line.data() + tab) {
      throw Error("moduli table line " + std::to_string(lineno) + ": bad degree");
    }
    out[n] = parse_hex(line.substr(tab + 1)).bits;
  }
  return out;
}

}  // namespace apnforge
