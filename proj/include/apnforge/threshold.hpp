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

// Explicit point-count threshold for a variety of degree d and dimension 3.
// With q = 2^m and the estimate
//
//   #points >= q^3 - (d-1)(d-2) q^(5/2) - 5 d^(13/3) q^2,   q > 2(dim+1) d^2,
//
// the threshold is the least m with
//
//   1 + #points / divisor > q^2 + q + 2.
//
// All comparisons are exact integer comparisons; 5 d^(13/3) is replaced by
// the integer ceiling of cbrt(125 d^13).

#ifndef APNFORGE_THRESHOLD_HPP_
#define APNFORGE_THRESHOLD_HPP_

#include <string>
#include <vector>

namespace apnforge {

struct BoundParams {
  unsigned d = 1248;
  unsigned dim = 3;
  unsigned divisor = 7;  // 2^M - 1 with M = 3
};

struct ThresholdRow {
  unsigned m = 0;
  bool valid = false;       // q > 2(dim+1) d^2
  bool positive = false;    // L = q^3 - B q^2 - divisor (q^2 + q + 1) > 0
  bool holds = false;       // valid and L^2 > A^2 q^5
  double lhs_over_q3 = 0;   // L / q^3
  double a_term_over_q3 = 0;  // A / sqrt(q)
  double b_term_over_q3 = 0;  // B / q
};

struct ThresholdReport {
  BoundParams params;
  std::string a;       // (d-1)(d-2), decimal
  std::string b_up;    // ceil(5 d^(13/3)), decimal
  unsigned m_star = 0;
  static constexpr unsigned kReferenceMStar = 47;
  bool deviates() const { return m_star != kReferenceMStar; }
  std::string dominant;  // which negative term is larger at m_star
  std::vector<ThresholdRow> rows;  // m = 1 .. m_star + 16
};

// Least m such that the inequality holds for every m' in [m, m + 16]; past
// that range the ratio only improves with q. Throws Error for d < 3.
ThresholdReport langweil_threshold(const BoundParams& p);

}  // namespace apnforge

#endif  // APNFORGE_THRESHOLD_HPP_
