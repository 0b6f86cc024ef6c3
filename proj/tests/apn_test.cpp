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

#include "apnforge/apn.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "apnforge/census.hpp"
#include "apnforge/error.hpp"

namespace apnforge {
namespace {

// Counts solutions of f(x + a) + f(x) = b one (a, b) at a time.
std::uint64_t BruteDelta(const FnTable& t) {
  const std::uint64_t n = t.values.size();
  std::uint64_t best = 0;
  for (std::uint64_t a = 1; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      std::uint64_t count = 0;
      for (std::uint64_t x = 0; x < n; ++x) count += (t.values[x ^ a] + t.values[x]) == Fe(b);
      best = std::max(best, count);
    }
  }
  return best;
}

FnTable Cube(const Field& f) {
  return tabulate(f, [&](Fe x) { return f.mul(x, f.sqr(x)); });
}

TEST(DiffTest, LinearMapHasFullDelta) {
  const Field f = make_field(5);
  const auto spec = diff_uniformity(tabulate(f, [&](Fe x) { return f.sqr(x); }));
  EXPECT_EQ(spec.max_solutions, 32u);
}

TEST(DiffTest, GoldCube) {
  EXPECT_EQ(diff_uniformity(Cube(make_field(3))).max_solutions, 2u);
  EXPECT_EQ(diff_uniformity(Cube(make_field(5))).max_solutions, 2u);
  EXPECT_EQ(diff_uniformity(Cube(make_field(4))).max_solutions, 2u);
  const Field f4 = make_field(4);
  const FnTable fifth = tabulate(f4, [&](Fe x) { return f4.pow(x, 5); });  // gcd(2, 4) = 2
  EXPECT_EQ(diff_uniformity(fifth).max_solutions, 4u);
  EXPECT_EQ(BruteDelta(fifth), 4u);
  EXPECT_EQ(BruteDelta(Cube(make_field(5))), 2u);
}

TEST(DiffTest, SpectrumInvariants) {
  const Field f = make_field(6);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    const FnTable t = tabulate(f, [&](Fe) { return Fe(rng() & 63); });
    const DiffSpectrum spec = diff_uniformity(t);
    std::uint64_t pairs = 0, solutions = 0;
    for (const auto& [count, n] : spec.histogram) {
      EXPECT_EQ(count % 2, 0u);
      pairs += n;
      solutions += count * n;
    }
    EXPECT_EQ(pairs, 63u * 64u);
    EXPECT_EQ(solutions, 63u * 64u);  // every x counted once per a
    EXPECT_GE(spec.max_solutions, 2u);
    EXPECT_EQ(spec.max_solutions, BruteDelta(t));
  }
}

TEST(CandidateTest, ZeroAndQuadratic) {
  const Field f = make_field(9);
  std::mt19937_64 rng(2);
  const FnTable t = build_candidate(f, 3, 1, Fe(0xd), Fe(1));
  EXPECT_EQ(t.values[0], Fe());
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t a = rng() & 511, x = rng() & 511, y = rng() & 511;
    const auto d = [&](std::uint64_t u) { return t.values[u ^ a] + t.values[u] + t.values[a] + t.values[0]; };
    EXPECT_EQ(d(x ^ y), d(x) + d(y));
  }
}

TEST(CandidateTest, MatchesDirectFormula) {
  const Field f = make_field(12);
  const Fe mu(0x13), v = subfield_elements(f, 4)[5];
  const FnTable t = build_candidate(f, 4, 1, mu, v);
  const std::uint64_t e = (1u << 4) + 1;
  for (std::uint64_t x = 0; x < f.size(); x += 37) {
    const Fe y = f.frob(Fe(x), 5) + f.mul(mu, f.frob(Fe(x), 1)) + Fe(x);
    EXPECT_EQ(t.values[x], f.pow(y, e) + f.mul(v, f.pow(Fe(x), e)));
  }
}

TEST(CandidateTest, RejectsBadV) {
  const Field f = make_field(9);
  try {
    build_candidate(f, 3, 1, Fe(0xd), Fe(2));  // 2 = x is not in GF(8) here
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "v not in F_{2^m}^*");
  }
  EXPECT_THROW(build_candidate(f, 3, 1, Fe(0xd), Fe()), Error);
}

TEST(FamilyTest, M3AllV) {
  const Field f = make_field(9);
  const GoodMu g = find_good_mu(f, 3, 1);
  const FamilyReport r = certify_family(f, 3, 1, g.mu);
  EXPECT_TRUE(r.hypotheses_ok());
  EXPECT_EQ(r.deltas.size(), 7u);
  for (const auto& d : r.deltas) EXPECT_EQ(d.delta, 2u);
  EXPECT_TRUE(r.apn());
}

TEST(FamilyTest, NormOneMakesNoClaim) {
  const Field f = make_field(9);
  // Look for a norm-one mu whose f_mu permutes; no delta is computed for it.
  const FMuFamily family(f, 3, 1);
  for (std::uint64_t mu = 1; mu < f.size(); ++mu) {
    if (rel_norm(f, 3, Fe(mu)) != Fe(1) || family.kernel_dim(Fe(mu)) != 0) continue;
    const FamilyReport r = certify_family(f, 3, 1, Fe(mu));
    EXPECT_FALSE(r.norm_ok);
    EXPECT_TRUE(r.permutation_ok);
    EXPECT_TRUE(r.deltas.empty());
    EXPECT_FALSE(r.apn());
    return;
  }
  GTEST_SKIP() << "no norm-one permutation parameter at m = 3";
}

TEST(FamilyTest, NonPermutationMakesNoClaim) {
  const Field f = make_field(9);
  const FamilyReport r = certify_family(f, 3, 1, Fe());
  EXPECT_FALSE(r.permutation_ok);
  EXPECT_FALSE(r.apn());
}

TEST(TableIoTest, RoundTrip) {
  const Field f = make_field(6);
  const FnTable t = Cube(f);
  std::stringstream buf;
  write_table(buf, t);
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), 16u + 64u * 8u);
  EXPECT_EQ(bytes.substr(0, 4), "APN1");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 6);
  for (int i = 5; i < 16; ++i) EXPECT_EQ(bytes[i], 0);
  const FnTable back = read_table(buf);
  EXPECT_EQ(back.values, t.values);
  std::istringstream bad("APN2xxxxxxxxxxxx");
  EXPECT_THROW(read_table(bad), Error);
}

}  // namespace
}  // namespace apnforge
