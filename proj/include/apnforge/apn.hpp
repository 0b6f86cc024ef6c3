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

// Differential uniformity of function tables over GF(2^n) and the quadratic
// candidate
//
//   F(x) = f_mu(x)^(2^m + 1) + v x^(2^m + 1)
//
// on GF(2^3m).

#ifndef APNFORGE_APN_HPP_
#define APNFORGE_APN_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "apnforge/field.hpp"

namespace apnforge {

// Tables are kept to n <= 24 (2^24 words, 128 MiB).
constexpr unsigned kMaxTableDegree = 24;

struct FnTable {
  Field field;
  std::vector<Fe> values;  // values[i] = F(element with encoding i)
};

FnTable tabulate(const Field& field, const std::function<Fe(Fe)>& f);

struct DiffSpectrum {
  std::uint64_t max_solutions = 0;  // delta
  // solution count -> number of (a, b), a != 0, attaining it
  std::map<std::uint64_t, std::uint64_t> histogram;
};

// O(4^n); parallel over a.
DiffSpectrum diff_uniformity(const FnTable& f);

// Requires degree 3m. Throws Error("v not in F_{2^m}^*") unless v is a
// nonzero element fixed by frob(., m).
FnTable build_candidate(const Field& field, unsigned m, unsigned s, Fe mu, Fe v);

struct VDelta {
  Fe v;
  std::uint64_t delta = 0;
};

struct FamilyReport {
  unsigned m = 0, s = 0;
  Fe mu;
  Fe norm;
  bool norm_ok = false;         // norm(mu) != 1
  bool permutation_ok = false;  // f_mu permutes GF(2^3m)
  bool coprime_ok = false;      // gcd(s, m) = 1
  std::vector<VDelta> deltas;   // empty unless all hypotheses hold
  bool hypotheses_ok() const { return norm_ok && permutation_ok && coprime_ok; }
  bool apn() const;             // hypotheses hold and every delta is 2
};

// Checks the hypotheses, then computes delta per v: every v in GF(2^m)^* for
// m <= 4, `samples` seeded random v above that (v = 1 always included).
// Throws ContractViolation("family contract violated") if the hypotheses
// hold and some delta differs from 2.
FamilyReport certify_family(const Field& field, unsigned m, unsigned s, Fe mu,
                            unsigned samples = 8, std::uint64_t seed = 0);

// Same, for an explicit list of v.
FamilyReport certify_family_at(const Field& field, unsigned m, unsigned s, Fe mu,
                               const std::vector<Fe>& vs);

// Binary table: "APN1", n as u32 LE, 8 zero bytes, then 2^n u64 LE words.
void write_table(std::ostream& out, const FnTable& f);
FnTable read_table(std::istream& in);

}  // namespace apnforge

#endif  // APNFORGE_APN_HPP_
