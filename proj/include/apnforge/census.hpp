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

// Kernel-dimension census of f_mu over all mu in GF(2^3m), the search for
// permutation parameters mu of norm outside {0, 1}, and the counting
// identities that relate the two.
//
// The census never ranks 2^3m matrices. It runs the value map
//
//   x -> (x^(2^(m+s)) + x) / x^(2^s),   x != 0,
//
// once over the field: the fiber over mu is ker(f_mu) minus zero, so a fiber
// of size 2^i - 1 means dim ker(f_mu) = i and mu outside the image means
// f_mu permutes the field.

#ifndef APNFORGE_CENSUS_HPP_
#define APNFORGE_CENSUS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apnforge/field.hpp"
#include "apnforge/linearized.hpp"

namespace apnforge {

// n_0 .. n_3: how many mu have a kernel of each dimension.
using DimCounts = std::array<std::uint64_t, 4>;

struct Census {
  unsigned m = 0;
  unsigned s = 0;
  std::map<Fe, DimCounts> per_alpha;  // keyed by the norm alpha
  DimCounts total{};
  unsigned max_dim = 0;                 // M_s
  std::vector<std::uint8_t> kernel_dims;  // indexed by mu encoding; may be empty
};

// Fiber sizes of the value map, indexed by mu encoding. Throws
// ContractViolation("nonlinear fiber") for a size not of the form 2^i - 1.
std::vector<std::uint8_t> value_map_kernel_dims(const Field& field, unsigned m, unsigned s);

// Requires degree 3m and gcd(s, m) = 1 (which bounds every kernel by 3).
Census fiber_census(const Field& field, unsigned m, unsigned s);

enum class Provenance { kExhaustive, kTable1Remark };
std::string to_string(Provenance p);

struct GoodMu {
  Fe mu;
  Fe norm;
  unsigned kernel_dim = 0;
  Provenance provenance = Provenance::kExhaustive;
};

// Smallest-encoding mu with f_mu a permutation and norm outside {0, 1}.
// Throws Error("Question 1 negative for (m,s)") if there is none.
GoodMu find_good_mu(const Field& field, unsigned m, unsigned s);

struct Table1Row {
  unsigned base_m;                  // m-bar
  std::vector<unsigned> base_s;     // admissible s-bar values
  std::uint64_t g;                  // GF(2) polynomial, bit encoding
  unsigned j;
};

const std::vector<Table1Row>& table1_rows();

struct Table1Match {
  const Table1Row* row = nullptr;
  unsigned t = 0;
  unsigned base_s = 0;
};

// Every row whose conditions hold for (m, s), in table order.
std::vector<Table1Match> table1_matches(unsigned m, unsigned s);

struct Table1Construction {
  Table1Match match;
  Fe root;             // root of g in GF(2^m-bar), kernel dimension 3
  HTriple h_m;         // H^m, equal to the identity
  Fe norm;             // norm of the root, outside {0, 1}
  std::uint64_t fiber_steps = 0;  // norm-one multipliers tried before success
  GoodMu eta;          // permutation parameter with the same norm
};

// Builds a permutation parameter from the first matching row whose contract
// holds. Returns nullopt when no row matches (m, s). Requires
// gcd(s + m, 3m) = 1. Throws ContractViolation("Table-1 contract violated")
// if a matching row's root does not behave as the row promises.
std::optional<Table1Construction> table1_construct(const Field& field, unsigned m, unsigned s);
std::optional<GoodMu> table1_mu(const Field& field, unsigned m, unsigned s);

// Ordered pairs (x, y), x != y, both nonzero, with equal value-map image:
// sum over classes of (2^i - 1)(2^i - 2) n_i.
std::uint64_t curve_pair_count(const Census& census);

struct PropAlmostReport {
  std::uint64_t n0 = 0;
  std::uint64_t identity_rhs = 0;  // 1 + sum_{i>=2} (2^i - 2) n_i
  bool identity_holds = false;
  std::uint64_t punctured_total = 0;  // sum_{i>=1} (2^i - 1) n_i
  bool partition_holds = false;       // punctured_total == 2^3m - 1
  std::uint64_t pair_count = 0;       // N_s
  unsigned max_dim = 0;
  bool max_dim_ok = false;  // M_s <= 3
  bool bound_holds = false;  // n0 >= 1 + N_s / (2^M_s - 1)
  bool ok() const { return identity_holds && partition_holds && max_dim_ok && bound_holds; }
};

PropAlmostReport verify_prop_almost(const Census& census);

struct RelationRow {
  Fe alpha;
  DimCounts counts;
  bool class_size_ok = false;  // n0+n1+n2+n3 == 2^2m + 2^m + 1
  bool relation_holds = false;  // n0 == 2 n2 + 6 n3
};

// Per-class check of the class-size identity and n0 = 2 n2 + 6 n3 for every
// alpha outside {0, 1}. Reported, never asserted: the relation is only
// claimed when gcd(s + m, 3m) = 1.
std::vector<RelationRow> relation_rows(const Census& census);

struct PropDim1Report {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t uniqueness_checked = 0;  // eta values with a full uniqueness scan
  bool exhaustive = false;
  bool ok() const { return failures == 0 && checked > 0; }
};

// For eta != 1, solves x0^(2^(s+m) - 1) = 1/(eta - 1), sets
// y0 = x0^(2^s) and checks (x0^(2^s), x0^(2^(s+m)) + x0) = (y0, eta y0^(2^m)).
// Exhaustive with a uniqueness scan when 3m <= 9, otherwise on `samples`
// random eta. Throws Error("hypothesis violated") unless gcd(s+m, 3m) = 1.
PropDim1Report verify_prop_dim1(const Field& field, unsigned m, unsigned s,
                                std::uint64_t samples = 10000, std::uint64_t seed = 0);

// Kernel dimension of f_0 = x^(2^(m+s)) + x found by evaluating it on every
// element, next to the two closed forms gcd(3, s) and gcd(3m, s + m).
struct MuZeroRow {
  unsigned m = 0, s = 0;
  unsigned brute = 0;
  unsigned gcd_3_s = 0;
  unsigned gcd_3m_sm = 0;
};

// All 3 <= m <= max_m (max_m <= 8), 1 <= s < 3m with gcd(s, m) = 1.
std::vector<MuZeroRow> mu_zero_kernel_table(unsigned max_m = 8);

// CSV with header alpha_hex,n0,n1,n2,n3 and a final TOTAL row.
std::string census_csv(const Census& census);
// {m, s, mu_hex, norm_hex, provenance}
std::string good_mu_json(unsigned m, unsigned s, const GoodMu& mu);

}  // namespace apnforge

#endif  // APNFORGE_CENSUS_HPP_
