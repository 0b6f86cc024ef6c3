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

// 2-linearized polynomials over GF(2^3m) and the kernel of
//
//   f_mu(x) = x^(2^(m+s)) + mu x^(2^s) + x.
//
// Three independent kernel-dimension routes are provided. The bit-matrix
// rank is the reference; the iterated-H route and the subspace intersection
// in GF(2^3m)^2 exist to cross-check it.

#ifndef APNFORGE_LINEARIZED_HPP_
#define APNFORGE_LINEARIZED_HPP_

#include <vector>

#include "apnforge/field.hpp"

namespace apnforge {

// sum_i coeffs[i] x^(2^i), exponents reduced mod x^(2^n) - x.
struct LinPoly {
  Field field;
  std::vector<Fe> coeffs;  // length n

  Fe eval(Fe x) const;
  // Images of the polynomial basis, i.e. the columns of the GF(2) matrix.
  std::vector<std::uint64_t> basis_images() const;

  friend bool operator==(const LinPoly&, const LinPoly&) = default;
};

LinPoly identity_linpoly(const Field& field);

// Requires degree 3m; gcd(s, m) != 1 is allowed but warned about.
LinPoly make_f_mu(const Field& field, unsigned m, unsigned s, Fe mu);

inline Fe eval(const LinPoly& l, Fe x) { return l.eval(x); }

// n - rank of the matrix of x -> l(x).
unsigned kernel_dim_matrix(const LinPoly& l);

bool is_permutation(const LinPoly& l);

// H^i(x) = h0 x^(2^(is)) + h1 x^(2^(is+m)) + h2 x^(2^(is+2m)) for
// H(x) = mu x^(2^s) + x^(2^(s+m)); all exponents mod 3m.
struct HTriple {
  Fe h0, h1, h2;
  unsigned iter = 1;
  unsigned shift = 0;  // i*s mod 3m

  // The triple as a LinPoly on the ambient field.
  LinPoly as_linpoly(const Field& field, unsigned m) const;
  bool is_identity(unsigned m) const;

  friend bool operator==(const HTriple&, const HTriple&) = default;
};

// Throws Error("iteration starts at 1") for i = 0.
HTriple h_iterate(const Field& field, unsigned m, unsigned s, Fe mu, unsigned i);

// dim over GF(2^m) of ker(H^m - id); requires gcd(s, m) = 1.
// Throws ContractViolation("semilinearity violated") if the GF(2)-nullity
// of H^m - id is not a multiple of m.
unsigned kernel_dim_via_H(const Field& field, unsigned m, unsigned s, Fe mu);

// dim over GF(2) of U_s intersected with P_mu inside GF(2^3m)^2, where
// U_s = {(x^(2^s), x^(2^(m+s)) + x)} and P_mu = {(t, mu t)}.
unsigned subspace_intersection_dim(const Field& field, unsigned m, unsigned s, Fe mu);

// Precomputed basis images of x^(2^s) and x^(2^(m+s)) + x so that many
// f_mu can be ranked without recomputing Frobenius powers.
class FMuFamily {
 public:
  FMuFamily(const Field& field, unsigned m, unsigned s);
  unsigned kernel_dim(Fe mu) const;
  const Field& field() const { return field_; }

 private:
  Field field_;
  std::vector<Fe> frob_s_;      // e_i^(2^s)
  std::vector<Fe> frob_ms_id_;  // e_i^(2^(m+s)) + e_i
};

}  // namespace apnforge

#endif  // APNFORGE_LINEARIZED_HPP_
