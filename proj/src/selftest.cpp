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

#include "apnforge/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>

#include "apnforge/apn.hpp"
#include "apnforge/census.hpp"
#include "apnforge/error.hpp"
#include "apnforge/field.hpp"
#include "apnforge/linearized.hpp"
#include "apnforge/threshold.hpp"
#include "apnforge/variety.hpp"

namespace apnforge {
namespace {

// Schoolbook product and long division, bit by bit.
std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, unsigned n) {
  u128 p = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (b >> i & 1) p ^= static_cast<u128>(a) << i;
  }
  for (int i = 2 * static_cast<int>(n) - 2; i >= static_cast<int>(n); --i) {
    if (p >> i & 1) p ^= static_cast<u128>(modulus) << (i - static_cast<int>(n));
  }
  return static_cast<std::uint64_t>(p);
}

std::string field_check(unsigned max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (unsigned n = 1; n <= max_n; ++n) {
    const Field f = make_field(n);
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t a = rng() & (f.size() - 1), b = rng() & (f.size() - 1);
      if (f.mul(Fe(a), Fe(b)).bits != slow_mul(a, b, f.modulus(), n)) {
        return "mul disagrees with schoolbook at n = " + std::to_string(n);
      }
    }
  }
  return "";
}

std::string kernel_agreement(unsigned m, unsigned s, std::uint64_t samples, std::uint64_t seed) {
  const Field f = make_field(3 * m);
  const auto dims = value_map_kernel_dims(f, m, s);
  std::mt19937_64 rng(seed);
  const bool exhaustive = f.size() <= samples;
  const std::uint64_t count = exhaustive ? f.size() : samples;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Fe mu(exhaustive ? i : rng() & (f.size() - 1));
    const unsigned a = kernel_dim_matrix(make_f_mu(f, m, s, mu));
    const unsigned b = kernel_dim_via_H(f, m, s, mu);
    const unsigned c = subspace_intersection_dim(f, m, s, mu);
    if (a != b || a != c || a != dims[mu.bits]) return "kernel routes disagree at mu = " + to_hex(mu);
  }
  return "";
}

std::string census_check(unsigned m, unsigned s) {
  const Field f = make_field(3 * m);
  const Census c = fiber_census(f, m, s);
  const PropAlmostReport r = verify_prop_almost(c);
  if (!r.ok()) return "counting identities fail";
  if (std::gcd(s + m, 3 * m) == 1) {
    for (const RelationRow& row : relation_rows(c)) {
      if (!row.class_size_ok) return "class size fails at alpha = " + to_hex(row.alpha);
      if (row.alpha != Fe(1) && !row.relation_holds) return "n0 = 2 n2 + 6 n3 fails at alpha = " + to_hex(row.alpha);
    }
  }
  const auto one = c.per_alpha.find(Fe(1));
  if (one != c.per_alpha.end() && one->second[3] != 0) return "norm-one class has a 3-dimensional kernel";
  return "";
}

std::string good_mu_check(unsigned m, unsigned s, bool certify) {
  const Field f = make_field(3 * m);
  const GoodMu mu = find_good_mu(f, m, s);
  if (!is_permutation(make_f_mu(f, m, s, mu.mu))) return "not a permutation";
  if (certify) {
    const FamilyReport r = certify_family_at(f, m, s, mu.mu, {Fe(1)});
    if (!r.apn()) return "candidate is not APN";
  }
  return "";
}

}  // namespace

bool SelftestReport::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.ok; });
}

SelftestReport run_selftest(SelftestLevel level, std::uint64_t seed) {
  const bool full = level == SelftestLevel::kFull;
  const unsigned max_m = full ? 5 : 4;
  SelftestReport report;
  const auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    SelftestCheck c;
    c.name = name;
    try {
      c.detail = body();
      c.ok = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(c);
  };

  run("field arithmetic", [&] { return field_check(full ? 48 : 24, seed); });
  for (unsigned m = 3; m <= max_m; ++m) {
    const std::string tag = "m=" + std::to_string(m) + " s=1";
    run("kernel routes " + tag, [&] { return kernel_agreement(m, 1, m == 3 ? 512 : 2000, seed); });
    run("census " + tag, [&] { return census_check(m, 1); });
    run("good mu " + tag, [&] { return good_mu_check(m, 1, m <= (full ? 4u : 3u)); });
  }
  run("table 1 m=3 s=2", [&] {
    const auto c = table1_construct(make_field(9), 3, 2);
    return c ? "" : std::string("no construction");
  });
  run("gold x^3", [&] {
    for (unsigned n : {3u, 4u, 5u}) {
      const Field f = make_field(n);
      const auto spec = diff_uniformity(tabulate(f, [&](Fe x) { return f.mul(x, f.sqr(x)); }));
      if (spec.max_solutions != 2) return "unexpected delta at n = " + std::to_string(n);
    }
    // x^5 = x^(2^2 + 1) with gcd(2, 4) = 2 is not APN.
    const Field f = make_field(4);
    const auto spec = diff_uniformity(tabulate(f, [&](Fe x) { return f.pow(x, 5); }));
    return spec.max_solutions == 4 ? std::string() : std::string("unexpected delta for x^5 at n = 4");
  });
  run("threshold", [&] {
    const ThresholdReport r = langweil_threshold({});
    return r.m_star >= 46 && r.m_star <= 48 ? "" : "m* = " + std::to_string(r.m_star);
  });
  run("appendix", [&] {
    const AppendixReport r = verify_appendix(full ? 10000 : 1000, seed);
    for (const auto& s : r.steps) {
      if (!s.ok) return s.name + ": " + s.detail;
    }
    return std::string();
  });
  if (full) {
    run("curve points h2 k<=4", [&] {
      const MPoly h2 = appendix_fixture("h2");
      for (unsigned k = 1; k <= 4; ++k) curve_points(h2, k);
      return std::string();
    });
  }
  return report;
}

}  // namespace apnforge
