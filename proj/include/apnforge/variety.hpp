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

// The s = 1 elimination: the system f1, f2, f3 in U0..V2, its resultants
// r1 = Res_V1(f1, f2) and r2 = Res_V2(r1, f3) = V0 (V0 + U0) g, and the plane
// section over GF(8) cut by U2 = U0 + U1, V0 = w U0 + w^2 U1 (w^3 + w + 1 = 0)
// that yields the curve h2(U0, U1) = 0. Also point counts on plane curves.

#ifndef APNFORGE_VARIETY_HPP_
#define APNFORGE_VARIETY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apnforge/field.hpp"
#include "apnforge/mpoly.hpp"

namespace apnforge {

// Variable indices.
enum Var : unsigned { kU0 = 0, kU1, kU2, kV0, kV1, kV2 };

// Stored polynomials: "r1", "g" (6 variables, GF(2)); "h1", "h2",
// "v1_numerator" (2 variables, GF(8)). Throws Error for other names.
const std::string& appendix_fixture_text(const std::string& name);
MPoly appendix_fixture(const std::string& name);

// f1, f2, f3 over `field` for exponent 2^s.
std::array<MPoly, 3> appendix_system(const Field& field, unsigned s = 1);

// The substitution vector [U0, U1, U0 + U1, w U0 + w^2 U1, V1, V2] over
// GF(8) in 6 variables.
std::vector<MPoly> section_substitution();

struct AppendixStep {
  std::string name;
  bool ok = false;
  std::string detail;  // first differing term on failure, summary otherwise
};

struct AppendixReport {
  std::vector<AppendixStep> steps;
  std::size_t r1_terms = 0;
  std::size_t g_terms = 0;
  unsigned h2_degree = 0;
  std::uint64_t eval_points = 0;
  bool ok() const;
};

// Recomputes r1, r2 / (V0 (V0 + U0)) and the section polynomials and compares
// them with the stored ones, then checks both resultant identities at
// `eval_points` random points of GF(8)^6.
AppendixReport verify_appendix(std::uint64_t eval_points = 10000, std::uint64_t seed = 0);

// First term where a and b differ, or "" when equal.
std::string first_difference(const MPoly& a, const MPoly& b);

// A factor of h (bivariate, coefficients in GF(8) or GF(2)) over GF(8) of
// total degree 1..max_degree, if one exists. Exhaustive over normalized
// candidates.
std::optional<MPoly> low_degree_factor(const MPoly& h, unsigned max_degree = 2);

// Affine points of h(U0, U1) = 0 over GF(8^k) = GF(2^3k). Throws
// Error("wrong arity") unless h has two variables. 1 <= k <= 16.
std::uint64_t curve_points(const MPoly& h, unsigned k);

struct WeilInterval {
  std::uint64_t q = 0;
  std::uint64_t lo = 0, hi = 0;
  bool contains(std::uint64_t n) const { return lo <= n && n <= hi; }
};

// q + 1 -+ ((d-1)(d-2) sqrt(q) + d(d-1)), rounded outward.
WeilInterval weil_interval(std::uint64_t q, unsigned d);

}  // namespace apnforge

#endif  // APNFORGE_VARIETY_HPP_
