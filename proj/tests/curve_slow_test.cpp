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

#include <gtest/gtest.h>

#include "apnforge/variety.hpp"

namespace apnforge {
namespace {

// First extension where the Weil interval for degree 26 excludes 0.
TEST(CurveSlowTest, H2OverGf2To21InWeilInterval) {
  const MPoly h = appendix_fixture("h2");
  const WeilInterval w = weil_interval(1ull << 21, 26);
  ASSERT_GT(w.lo, 0u);
  const std::uint64_t n = curve_points(h, 7);
  EXPECT_TRUE(w.contains(n)) << n << " not in [" << w.lo << ", " << w.hi << "]";
}

}  // namespace
}  // namespace apnforge
