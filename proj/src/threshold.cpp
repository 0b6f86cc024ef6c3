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

#include "apnforge/threshold.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "apnforge/error.hpp"

namespace apnforge {
namespace {

using boost::multiprecision::cpp_int;

constexpr unsigned kScanLimit = 512;
constexpr unsigned kWindow = 16;

// Smallest c with c^3 >= x.
cpp_int ceil_cbrt(const cpp_int& x) {
  cpp_int lo = 0, hi = 1;
  while (hi * hi * hi < x) hi <<= 1;
  while (lo < hi) {
    const cpp_int mid = (lo + hi) >> 1;
    if (mid * mid * mid >= x) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

double to_double_ratio(const cpp_int& num, const cpp_int& den) {
  // Scale both to ~53 significant bits before converting.
  const auto bits = [](const cpp_int& x) { return x == 0 ? 0u : static_cast<unsigned>(msb(abs(x))) + 1; };
  const unsigned shift = std::max(bits(num), bits(den)) > 60 ? std::max(bits(num), bits(den)) - 60 : 0;
  const double n = static_cast<double>(cpp_int(num >> shift));
  const double d = static_cast<double>(cpp_int(den >> shift));
  return d == 0 ? 0 : n / d;
}

}  // namespace

ThresholdReport langweil_threshold(const BoundParams& p) {
  if (p.d < 3) throw Error("degree must be at least 3");
  if (p.divisor == 0) throw Error("divisor must be positive");
  const cpp_int d = p.d;
  const cpp_int a = (d - 1) * (d - 2);
  const cpp_int b = ceil_cbrt(125 * pow(d, 13));
  const cpp_int valid_floor = 2 * cpp_int(p.dim + 1) * d * d;

  std::vector<ThresholdRow> all;
  for (unsigned m = 1; m <= kScanLimit; ++m) {
    const cpp_int q = cpp_int(1) << m;
    ThresholdRow row;
    row.m = m;
    row.valid = q > valid_floor;
    const cpp_int q2 = q * q, q3 = q2 * q;
    const cpp_int l = q3 - b * q2 - cpp_int(p.divisor) * (q2 + q + 1);
    row.positive = l > 0;
    row.holds = row.valid && row.positive && l * l > a * a * q2 * q3;
    row.lhs_over_q3 = to_double_ratio(l, q3);
    row.a_term_over_q3 = static_cast<double>(a) / std::sqrt(std::ldexp(1.0, static_cast<int>(m)));
    row.b_term_over_q3 = to_double_ratio(b, q);
    all.push_back(row);
  }

  ThresholdReport r;
  r.params = p;
  r.a = a.str();
  r.b_up = b.str();
  bool found = false;
  for (unsigned m = 1; m + kWindow <= kScanLimit && !found; ++m) {
    bool window = true;
    for (unsigned k = m; k <= m + kWindow; ++k) window = window && all[k - 1].holds;
    if (window) {
      r.m_star = m;
      found = true;
    }
  }
  if (!found) throw Error("threshold not reached below m = " + std::to_string(kScanLimit));
  r.rows.assign(all.begin(), all.begin() + (r.m_star + kWindow));
  const ThresholdRow& at = all[r.m_star - 1];
  r.dominant = at.b_term_over_q3 >= at.a_term_over_q3 ? "5 d^(13/3) q^2" : "(d-1)(d-2) q^(5/2)";
  return r;
}

}  // namespace apnforge
