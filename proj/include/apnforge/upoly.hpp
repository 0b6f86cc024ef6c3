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

// Dense univariate polynomials over a binary Field. Used for root finding
// (subfield roots, curve point counts); none of this needs to be fast except
// the Frobenius power x^(2^k) mod f.

#ifndef APNFORGE_UPOLY_HPP_
#define APNFORGE_UPOLY_HPP_

#include <vector>

#include "apnforge/field.hpp"

namespace apnforge {

// coeffs[i] is the coefficient of X^i. Always trimmed: no trailing zeros.
using UPoly = std::vector<Fe>;

namespace upoly {

void trim(UPoly& p);
inline int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
Fe eval(const Field& field, const UPoly& p, Fe x);

UPoly add(const UPoly& a, const UPoly& b);
UPoly mul(const Field& field, const UPoly& a, const UPoly& b);
// a mod b and the quotient; b must be nonzero.
UPoly mod(const Field& field, UPoly a, const UPoly& b);
UPoly div(const Field& field, UPoly a, const UPoly& b);
UPoly monic(const Field& field, UPoly p);
UPoly gcd(const Field& field, UPoly a, UPoly b);

// Frobenius power X^(2^k) mod f for monic f of degree >= 1.
UPoly x_pow2k_mod(const Field& field, const UPoly& f, unsigned k);

// Number of distinct roots of a nonzero p in the whole field:
// deg gcd(p, X^(2^n) - X).
unsigned count_roots(const Field& field, const UPoly& p);

// All roots of p in the field, ascending. Repeated roots are reported once.
std::vector<Fe> roots(const Field& field, const UPoly& p);

}  // namespace upoly
}  // namespace apnforge

#endif  // APNFORGE_UPOLY_HPP_
