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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "apnforge/error.hpp"

namespace apnforge {
namespace {

// log2 of the number of roots, by evaluating at every element.
unsigned BruteKernelDim(const LinPoly& l) {
  std::uint64_t roots = 0;
  for (std::uint64_t x = 0; x < l.field.size(); ++x) roots += l.eval(Fe(x)).is_zero();
  unsigned d = 0;
  while ((std::uint64_t{1} << d) < roots) ++d;
  return d;
}

TEST(LinPolyTest, MakeFMuCoefficients) {
  const Field f = make_field(9);
  const LinPoly l = make_f_mu(f, 3, 1, Fe());
  for (unsigned i = 0; i < 9; ++i) EXPECT_EQ(l.coeffs[i], (i == 0 || i == 4) ? Fe(1) : Fe()) << i;
  EXPECT_EQ(make_f_mu(f, 3, 1, Fe(1)).eval(Fe(1)), Fe(1));
  EXPECT_THROW(make_f_mu(make_field(10), 3, 1, Fe()), Error);
}

TEST(LinPolyTest, ExponentsWrapModuloN) {
  // m + s = 9 wraps to x^(2^0): f = x + mu x^(2^6) + x = mu x^(2^6).
  const Field f = make_field(9);
  const LinPoly l = make_f_mu(f, 3, 6, Fe(5));
  EXPECT_EQ(l.coeffs[0], Fe());
  EXPECT_EQ(l.coeffs[6], Fe(5));
}

TEST(LinPolyTest, EvalMatchesDefinitionAndIsAdditive) {
  const Field f = make_field(12);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Fe mu(rng() & 0xfff), x(rng() & 0xfff), y(rng() & 0xfff);
    const LinPoly l = make_f_mu(f, 4, 3, mu);
    EXPECT_EQ(l.eval(x), f.frob(x, 7) + f.mul(mu, f.frob(x, 3)) + x);
    EXPECT_EQ(l.eval(x + y), l.eval(x) + l.eval(y));
    EXPECT_TRUE(l.eval(Fe()).is_zero());
  }
  const LinPoly id = identity_linpoly(f);
  EXPECT_EQ(id.eval(Fe(0x123)), Fe(0x123));
}

TEST(KernelTest, SimpleMaps) {
  const Field f = make_field(9);
  EXPECT_EQ(kernel_dim_matrix(identity_linpoly(f)), 0u);
  LinPoly artin = identity_linpoly(f);
  artin.coeffs[1] = Fe(1);  // x^2 + x
  EXPECT_EQ(kernel_dim_matrix(artin), 1u);
  EXPECT_FALSE(is_permutation(artin));
  EXPECT_TRUE(is_permutation(identity_linpoly(f)));
  // x^(2^4) + x: kernel GF(2^gcd(4, 9)) = GF(2).
  EXPECT_EQ(kernel_dim_matrix(make_f_mu(f, 3, 1, Fe())), 1u);
}

TEST(KernelTest, ThreeRoutesAgreeExhaustivelyAtM3) {
  const Field f = make_field(9);
  for (unsigned s = 1; s < 9; ++s) {
    if (std::gcd(s, 3u) != 1) continue;
    for (std::uint64_t mu = 0; mu < f.size(); ++mu) {
      const LinPoly l = make_f_mu(f, 3, s, Fe(mu));
      const unsigned d = kernel_dim_matrix(l);
      ASSERT_EQ(d, BruteKernelDim(l)) << "s=" << s << " mu=" << mu;
      ASSERT_EQ(d, kernel_dim_via_H(f, 3, s, Fe(mu))) << "s=" << s << " mu=" << mu;
      ASSERT_EQ(d, subspace_intersection_dim(f, 3, s, Fe(mu))) << "s=" << s << " mu=" << mu;
    }
  }
}

TEST(KernelTest, ThreeRoutesAgreeOnSamplesAtM4M5) {
  std::mt19937_64 rng(2);
  for (unsigned m : {4u, 5u}) {
    const Field f = make_field(3 * m);
    for (unsigned s : {1u, 3u}) {
      const FMuFamily family(f, m, s);
      for (int i = 0; i < 300; ++i) {
        const Fe mu(rng() & (f.size() - 1));
        const unsigned d = kernel_dim_matrix(make_f_mu(f, m, s, mu));
        ASSERT_EQ(d, kernel_dim_via_H(f, m, s, mu));
        ASSERT_EQ(d, subspace_intersection_dim(f, m, s, mu));
        ASSERT_EQ(d, family.kernel_dim(mu));
      }
    }
  }
}

TEST(KernelTest, DimUsIsFull) {
  // With mu chosen so P_mu meets U_s trivially, dim(U + P) = 6m means dim U = 3m.
  const Field f = make_field(9);
  EXPECT_EQ(subspace_intersection_dim(f, 3, 1, Fe(0xd)), 0u);
}

TEST(HIterateTest, BaseCase) {
  const Field f = make_field(9);
  const HTriple t = h_iterate(f, 3, 1, Fe(0x77), 1);
  EXPECT_EQ(t.h0, Fe(0x77));
  EXPECT_EQ(t.h1, Fe(1));
  EXPECT_EQ(t.h2, Fe());
  EXPECT_EQ(t.shift, 1u);
  EXPECT_THROW(h_iterate(f, 3, 1, Fe(1), 0), Error);
}

TEST(HIterateTest, MatchesFunctionalComposition) {
  std::mt19937_64 rng(3);
  for (unsigned m : {3u, 4u, 5u}) {
    const Field f = make_field(3 * m);
    for (unsigned s : {1u, 2u}) {
      const Fe mu(rng() & (f.size() - 1));
      const auto h = [&](Fe x) { return f.mul(mu, f.frob(x, s)) + f.frob(x, s + m); };
      for (int trial = 0; trial < 20; ++trial) {
        const Fe x(rng() & (f.size() - 1));
        Fe iterated = x;
        for (unsigned i = 1; i <= m; ++i) {
          iterated = h(iterated);
          const HTriple t = h_iterate(f, m, s, mu, i);
          EXPECT_EQ(t.as_linpoly(f, m).eval(x), iterated) << "m=" << m << " i=" << i;
        }
      }
    }
  }
}

TEST(HIterateTest, CubicRootsGiveMonomialCube) {
  const Field f = make_field(9);
  const HTriple a = h_iterate(f, 3, 1, subfield_root(f, 0b1011, 3), 3);
  EXPECT_EQ(a.h0, Fe());
  EXPECT_EQ(a.h1, Fe(1));
  EXPECT_EQ(a.h2, Fe());
  const HTriple b = h_iterate(f, 3, 1, subfield_root(f, 0b1101, 3), 3);
  EXPECT_EQ(b.h0, Fe());
  EXPECT_EQ(b.h1, Fe());
  EXPECT_EQ(b.h2, Fe(1));
}

TEST(HIterateTest, TableOneCaseIsIdentity) {
  // m = 3, s = 2, mu a root of x^3 + x + 1: H^3(x) = x and dim ker = 3.
  const Field f = make_field(9);
  const Fe mu = subfield_root(f, 0b1011, 3);
  EXPECT_TRUE(h_iterate(f, 3, 2, mu, 3).is_identity(3));
  EXPECT_EQ(kernel_dim_via_H(f, 3, 2, mu), 3u);
  EXPECT_EQ(kernel_dim_matrix(make_f_mu(f, 3, 2, mu)), 3u);
}

TEST(HIterateTest, RequiresCoprimeS) {
  EXPECT_THROW(kernel_dim_via_H(make_field(12), 4, 2, Fe(1)), Error);
}

}  // namespace
}  // namespace apnforge
