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

// Sparse multivariate polynomials in at most six variables over a small
// binary field (GF(2) or GF(8) in practice), with Sylvester resultants.
//
// Variables are numbered 0..5 and read as U0, U1, U2, V0, V1, V2 in text
// output. Terms are kept in descending graded-lex order, so begin() is the
// leading term.

#ifndef APNFORGE_MPOLY_HPP_
#define APNFORGE_MPOLY_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "apnforge/field.hpp"

namespace apnforge {

constexpr unsigned kMaxVars = 6;
using Exponent = std::array<std::uint16_t, kMaxVars>;

unsigned total_degree(const Exponent& e);

// Descending graded lex.
struct GrlexDesc {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MPoly {
 public:
  using Terms = std::map<Exponent, Fe, GrlexDesc>;

  MPoly(const Field& field, unsigned nvars);

  static MPoly constant(const Field& field, unsigned nvars, Fe c);
  static MPoly var(const Field& field, unsigned nvars, unsigned i);
  static MPoly monomial(const Field& field, unsigned nvars, Fe c, const Exponent& e);

  const Field& field() const { return field_; }
  unsigned nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Adds c x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, Fe c);

  unsigned total_degree() const;
  unsigned degree_in(unsigned var) const;
  // Coefficients of var^0, var^1, ..., as polynomials with var removed.
  std::vector<MPoly> coeffs_in(unsigned var) const;

  MPoly& operator+=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(Fe c) const;

  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  Field field_;
  unsigned nvars_;
  Terms terms_;
};

MPoly pow(const MPoly& p, unsigned e);

// Replaces variable `var` by q.
MPoly substitute(const MPoly& p, unsigned var, const MPoly& q);
// Replaces every variable i by images[i] (images may live in more or fewer
// variables; all must share one field). p's coefficients must embed in it.
MPoly evaluate(const MPoly& p, const std::vector<MPoly>& images);

// Same polynomial over a field containing p's coefficient field.
MPoly change_field(const MPoly& p, const Field& target);

// Exact quotient p / q. Throws Error("not divisible") otherwise.
MPoly trial_divide(const MPoly& p, const MPoly& q);

// Sylvester resultant in `var` by cofactor expansion.
// Throws Error("degenerate resultant") if either input is constant in var.
MPoly resultant(const MPoly& p, const MPoly& q, unsigned var);

// Maps coefficients of a small field into a larger one. For GF(2^d) into
// GF(2^n), d | n, the class of x goes to the smallest root of the small
// field's modulus.
class Embedding {
 public:
  Embedding(const Field& small, const Field& large);
  Fe operator()(Fe c) const { return table_[c.bits]; }
  const Field& target() const { return large_; }

 private:
  Field large_;
  std::vector<Fe> table_;
};

Fe eval_at(const MPoly& p, const Embedding& embed, const std::vector<Fe>& point);

// Resultant in `var` of the specializations of p and q at `point` (the
// entry for `var` is ignored), using the formal var-degrees of p and q.
// Independent of the symbolic resultant: a numeric determinant.
Fe resultant_at(const MPoly& p, const MPoly& q, unsigned var, const Embedding& embed,
                const std::vector<Fe>& point);

// "hex-coeff e0,e1,..." per line, descending grlex.
std::string to_text(const MPoly& p);
MPoly parse_mpoly(const std::string& text, const Field& field, unsigned nvars);
// e.g. "7*U0^2*U1" for error messages.
std::string term_to_string(const Exponent& e, Fe c, unsigned nvars);

}  // namespace apnforge

#endif  // APNFORGE_MPOLY_HPP_
