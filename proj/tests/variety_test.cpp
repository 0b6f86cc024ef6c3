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

#include "apnforge/variety.hpp"

#include <gtest/gtest.h>

#include "apnforge/error.hpp"
#include "apnforge/threshold.hpp"

namespace apnforge {
namespace {

// Direct count over all pairs of GF(8^k).
std::uint64_t BrutePoints(const MPoly& h, unsigned k) {
  const Field big = make_field(3 * k);
  const Embedding embed(h.field(), big);
  std::uint64_t n = 0;
  for (std::uint64_t a = 0; a < big.size(); ++a) {
    for (std::uint64_t b = 0; b < big.size(); ++b) n += eval_at(h, embed, {Fe(a), Fe(b)}).is_zero();
  }
  return n;
}

MPoly Swap(const MPoly& h) {
  MPoly out(h.field(), 2);
  for (const auto& [e, c] : h.terms()) out.add_term(Exponent{e[1], e[0], 0, 0, 0, 0}, c);
  return out;
}

TEST(AppendixTest, FixturesLoad) {
  EXPECT_EQ(appendix_fixture("r1").size(), 10u);
  EXPECT_EQ(appendix_fixture("r1").nvars(), 6u);
  EXPECT_EQ(appendix_fixture("h2").total_degree(), 26u);
  EXPECT_EQ(appendix_fixture("h2").nvars(), 2u);
  EXPECT_THROW(appendix_fixture("h3"), Error);
}

TEST(AppendixTest, SystemShape) {
  const auto sys = appendix_system(make_field(1));
  for (const MPoly& p : sys) EXPECT_EQ(p.nvars(), 6u);
  EXPECT_EQ(section_substitution().size(), 6u);
}

TEST(AppendixTest, FullReproduction) {
  const AppendixReport r = verify_appendix(2000, 5);
  for (const auto& step : r.steps) EXPECT_TRUE(step.ok) << step.name << ": " << step.detail;
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.r1_terms, 10u);
  EXPECT_EQ(r.h2_degree, 26u);
  EXPECT_EQ(r.eval_points, 2000u);
}

TEST(AppendixTest, FirstDifference) {
  const MPoly h = appendix_fixture("h2");
  EXPECT_EQ(first_difference(h, h), "");
  MPoly g = h;
  g.add_term(Exponent{1, 0, 0, 0, 0, 0}, Fe(1));
  EXPECT_NE(first_difference(h, g), "");
}

TEST(FactorTest, SplitProductIsFound) {
  const Field f8 = make_field(3);
  const MPoly x = MPoly::var(f8, 2, 0), y = MPoly::var(f8, 2, 1);
  const MPoly l1 = x + y.scaled(Fe(3)) + MPoly::constant(f8, 2, Fe(1));
  const MPoly l2 = x * y + MPoly::constant(f8, 2, Fe(5));
  const auto factor = low_degree_factor(l1 * l2);
  ASSERT_TRUE(factor.has_value());
  EXPECT_NO_THROW(trial_divide(l1 * l2, *factor));
}

TEST(FactorTest, H2HasNoLowDegreeFactor) {
  EXPECT_FALSE(low_degree_factor(appendix_fixture("h2")).has_value());
}

TEST(CurveTest, LineHasQPoints) {
  const Field f8 = make_field(3);
  const MPoly line = MPoly::var(f8, 2, 0) + MPoly::var(f8, 2, 1).scaled(Fe(6)) + MPoly::constant(f8, 2, Fe(2));
  for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(curve_points(line, k), 1ull << (3 * k));
}

TEST(CurveTest, MatchesBruteForce) {
  const MPoly h = appendix_fixture("h2");
  EXPECT_EQ(curve_points(h, 1), BrutePoints(h, 1));
  EXPECT_EQ(curve_points(h, 2), BrutePoints(h, 2));
  EXPECT_EQ(curve_points(h, 1), 9u);
  EXPECT_EQ(curve_points(h, 2), 61u);
}

TEST(CurveTest, SwapInvariant) {
  const MPoly h = appendix_fixture("h2");
  for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(curve_points(Swap(h), k), curve_points(h, k));
}

TEST(CurveTest, WrongArity) {
  try {
    curve_points(appendix_fixture("r1"), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "wrong arity");
  }
}

TEST(WeilTest, Interval) {
  const WeilInterval w = weil_interval(64, 3);
  EXPECT_EQ(w.q, 64u);
  // (d-1)(d-2) sqrt(q) + d(d-1) = 16 + 6.
  EXPECT_EQ(w.lo, 65u - 22u);
  EXPECT_EQ(w.hi, 65u + 22u);
  EXPECT_TRUE(w.contains(65));
  EXPECT_FALSE(weil_interval(1ull << 21, 26).contains(0));
}

TEST(ThresholdTest, Reference) {
  const ThresholdReport r = langweil_threshold(BoundParams{});
  EXPECT_EQ(r.a, "1553762");
  EXPECT_EQ(r.m_star, 48u);
  EXPECT_TRUE(r.deviates());
  EXPECT_GE(r.rows.size(), r.m_star + 16u);
  for (const ThresholdRow& row : r.rows) {
    if (row.m >= r.m_star) EXPECT_TRUE(row.holds) << row.m;
  }
  EXPECT_FALSE(r.rows[r.m_star - 2].holds);
}

TEST(ThresholdTest, Monotone) {
  const unsigned small = langweil_threshold(BoundParams{100, 3, 7}).m_star;
  const unsigned big = langweil_threshold(BoundParams{2000, 3, 7}).m_star;
  EXPECT_LT(small, big);
  EXPECT_THROW(langweil_threshold(BoundParams{2, 3, 7}), Error);
}

}  // namespace
}  // namespace apnforge
