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

#include "apnforge/linearized.hpp"

#include <numeric>
#include <string>

#include "apnforge/error.hpp"
#include "apnforge/gf2.hpp"

namespace apnforge {
namespace {

void require_cubic(const Field& field, unsigned m) {
  if (m == 0 || field.degree() != 3 * m) throw Error("ambient field is not a cubic extension");
}

Fe unit(unsigned i) { return Fe(std::uint64_t{1} << i); }

}  // namespace

Fe LinPoly::eval(Fe x) const {
  Fe acc;
  Fe power = x;  // x^(2^i)
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) acc += field.mul(coeffs[i], power);
    power = field.sqr(power);
  }
  return acc;
}

std::vector<std::uint64_t> LinPoly::basis_images() const {
  std::vector<std::uint64_t> images(field.degree());
  for (unsigned i = 0; i < field.degree(); ++i) images[i] = eval(unit(i)).bits;
  return images;
}

LinPoly identity_linpoly(const Field& field) {
  LinPoly l{field, std::vector<Fe>(field.degree())};
  l.coeffs[0] = Fe(1);
  return l;
}

LinPoly make_f_mu(const Field& field, unsigned m, unsigned s, Fe mu) {
  require_cubic(field, m);
  if (s == 0) throw Error("s must be positive");
  if (std::gcd(s, m) != 1) {
    warn("f_mu built with gcd(s, m) = " + std::to_string(std::gcd(s, m)) + " != 1");
  }
  const unsigned n = field.degree();
  LinPoly l{field, std::vector<Fe>(n)};
  l.coeffs[(m + s) % n] += Fe(1);
  l.coeffs[s % n] += mu;
  l.coeffs[0] += Fe(1);
  return l;
}

unsigned kernel_dim_matrix(const LinPoly& l) {
  const auto images = l.basis_images();
  return l.field.degree() - gf2::rank<std::uint64_t>(images);
}

bool is_permutation(const LinPoly& l) { return kernel_dim_matrix(l) == 0; }

LinPoly HTriple::as_linpoly(const Field& field, unsigned m) const {
  require_cubic(field, m);
  const unsigned n = field.degree();
  LinPoly l{field, std::vector<Fe>(n)};
  l.coeffs[shift % n] += h0;
  l.coeffs[(shift + m) % n] += h1;
  l.coeffs[(shift + 2 * m) % n] += h2;
  return l;
}

bool HTriple::is_identity(unsigned m) const {
  const unsigned n = 3 * m;
  const Fe slots[3] = {h0, h1, h2};
  bool found_one = false;
  for (unsigned j = 0; j < 3; ++j) {
    const bool exponent_zero = (shift + j * m) % n == 0;
    if (exponent_zero) {
      if (slots[j] != Fe(1)) return false;
      found_one = true;
    } else if (!slots[j].is_zero()) {
      return false;
    }
  }
  return found_one;
}

HTriple h_iterate(const Field& field, unsigned m, unsigned s, Fe mu, unsigned i) {
  require_cubic(field, m);
  if (i == 0) throw Error("iteration starts at 1");
  const unsigned n = field.degree();
  HTriple t{mu, Fe(1), Fe(), 1, s % n};
  for (unsigned k = 1; k < i; ++k) {
    const auto a = [&](Fe h) { return field.mul(mu, field.frob(h, s)); };
    const auto b = [&](Fe h) { return field.frob(h, s + m); };
    t = HTriple{a(t.h0) + b(t.h2), a(t.h1) + b(t.h0), a(t.h2) + b(t.h1), k + 1, (t.shift + s) % n};
  }
  return t;
}

unsigned kernel_dim_via_H(const Field& field, unsigned m, unsigned s, Fe mu) {
  require_cubic(field, m);
  if (std::gcd(s, m) != 1) throw Error("kernel_dim_via_H requires gcd(s, m) = 1");
  const LinPoly hm = h_iterate(field, m, s, mu, m).as_linpoly(field, m);
  std::vector<std::uint64_t> images = hm.basis_images();
  for (unsigned i = 0; i < images.size(); ++i) images[i] ^= unit(i).bits;
  const unsigned nullity = field.degree() - gf2::rank<std::uint64_t>(images);
  if (nullity % m != 0) throw ContractViolation("semilinearity violated");
  return nullity / m;
}

unsigned subspace_intersection_dim(const Field& field, unsigned m, unsigned s, Fe mu) {
  require_cubic(field, m);
  const unsigned n = field.degree();
  std::vector<u128> u_rows, p_rows;
  for (unsigned i = 0; i < n; ++i) {
    const Fe e = unit(i);
    const Fe first = field.frob(e, s);
    const Fe second = field.frob(e, m + s) + e;
    u_rows.push_back(first.bits | (static_cast<u128>(second.bits) << n));
    p_rows.push_back(e.bits | (static_cast<u128>(field.mul(mu, e).bits) << n));
  }
  std::vector<u128> all = u_rows;
  all.insert(all.end(), p_rows.begin(), p_rows.end());
  const unsigned dim_u = gf2::rank<u128>(u_rows);
  const unsigned dim_p = gf2::rank<u128>(p_rows);
  return dim_u + dim_p - gf2::rank<u128>(all);
}

FMuFamily::FMuFamily(const Field& field, unsigned m, unsigned s) : field_(field) {
  require_cubic(field, m);
  for (unsigned i = 0; i < field.degree(); ++i) {
    frob_s_.push_back(field.frob(unit(i), s));
    frob_ms_id_.push_back(field.frob(unit(i), m + s) + unit(i));
  }
}

unsigned FMuFamily::kernel_dim(Fe mu) const {
  std::uint64_t images[64];
  const unsigned n = field_.degree();
  for (unsigned i = 0; i < n; ++i) images[i] = (frob_ms_id_[i] + field_.mul(mu, frob_s_[i])).bits;
  return n - gf2::rank<std::uint64_t>(std::span<const std::uint64_t>(images, n));
}

}  // namespace apnforge
