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

#include <algorithm>
#include <array>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>

#include "apnforge/error.hpp"
#include "apnforge/linear_map.hpp"
#include "apnforge/linearized.hpp"
#include "apnforge/parallel.hpp"

namespace apnforge {
namespace {

void require_table_size(unsigned n) {
  if (n == 0 || n > kMaxTableDegree) throw Error("function table degree out of range");
}

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b;
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), b.size());
}

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), b.size());
}

std::uint64_t get_le(std::istream& in, int bytes) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), bytes);
  if (!in) throw Error("truncated function table");
  std::uint64_t v = 0;
  for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

FnTable tabulate(const Field& field, const std::function<Fe(Fe)>& f) {
  require_table_size(field.degree());
  FnTable t{field, std::vector<Fe>(field.size())};
  for (std::uint64_t x = 0; x < field.size(); ++x) t.values[x] = f(Fe(x));
  return t;
}

DiffSpectrum diff_uniformity(const FnTable& f) {
  const std::uint64_t size = f.values.size();
  if (size != f.field.size()) throw Error("function table has the wrong length");
  const unsigned workers = workers_for((size - 1) * 64);
  std::vector<std::map<std::uint64_t, std::uint64_t>> hists(workers);
  parallel_for(1, size, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> counts(size);
    auto& hist = hists[w];
    for (std::uint64_t a = lo; a < hi; ++a) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint64_t x = 0; x < size; ++x) ++counts[(f.values[x ^ a] + f.values[x]).bits];
      // Histogram run-length over sorted counts is cheaper than a map hit per b.
      std::sort(counts.begin(), counts.end());
      for (std::size_t i = 0; i < counts.size();) {
        std::size_t j = i;
        while (j < counts.size() && counts[j] == counts[i]) ++j;
        hist[counts[i]] += j - i;
        i = j;
      }
    }
  });
  DiffSpectrum spec;
  for (const auto& h : hists) {
    for (const auto& [count, pairs] : h) spec.histogram[count] += pairs;
  }
  if (!spec.histogram.empty()) spec.max_solutions = spec.histogram.rbegin()->first;
  return spec;
}

FnTable build_candidate(const Field& field, unsigned m, unsigned s, Fe mu, Fe v) {
  const LinPoly f = make_f_mu(field, m, s, mu);
  if (v.is_zero() || !field.contains(v) || field.frob(v, m) != v) throw Error("v not in F_{2^m}^*");
  const LinearMap f_map(f.basis_images());
  const LinearMap frob_m = frobenius_map(field, m);
  return tabulate(field, [&](Fe x) {
    const Fe y = f_map(x);
    return field.mul(y, frob_m(y)) + field.mul(v, field.mul(x, frob_m(x)));
  });
}

bool FamilyReport::apn() const {
  return hypotheses_ok() && !deltas.empty() &&
         std::all_of(deltas.begin(), deltas.end(), [](const VDelta& d) { return d.delta == 2; });
}

FamilyReport certify_family_at(const Field& field, unsigned m, unsigned s, Fe mu,
                               const std::vector<Fe>& vs) {
  FamilyReport r;
  r.m = m;
  r.s = s;
  r.mu = mu;
  r.norm = rel_norm(field, m, mu);
  r.norm_ok = r.norm != Fe(1);
  r.coprime_ok = s >= 1 && std::gcd(s, m) == 1;
  r.permutation_ok = s >= 1 && is_permutation(make_f_mu(field, m, s, mu));
  if (!r.hypotheses_ok()) return r;
  for (Fe v : vs) {
    const DiffSpectrum spec = diff_uniformity(build_candidate(field, m, s, mu, v));
    r.deltas.push_back({v, spec.max_solutions});
    if (spec.max_solutions != 2) {
      throw ContractViolation("family contract violated: delta " + std::to_string(spec.max_solutions) +
                              " at v = " + to_hex(v));
    }
  }
  return r;
}

FamilyReport certify_family(const Field& field, unsigned m, unsigned s, Fe mu, unsigned samples,
                            std::uint64_t seed) {
  std::vector<Fe> units = subfield_elements(field, m);
  units.erase(units.begin());  // drop zero
  std::vector<Fe> vs;
  if (m <= 4) {
    vs = units;
  } else {
    vs.push_back(Fe(1));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
    while (vs.size() < std::min<std::size_t>(samples, units.size())) {
      const Fe v = units[pick(rng)];
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    }
  }
  return certify_family_at(field, m, s, mu, vs);
}

void write_table(std::ostream& out, const FnTable& f) {
  out.write("APN1", 4);
  put_u32(out, f.field.degree());
  put_u64(out, 0);
  for (Fe v : f.values) put_u64(out, v.bits);
  if (!out) throw Error("failed to write function table");
}

FnTable read_table(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::string(magic, 4) != "APN1") throw Error("not an APN1 function table");
  const auto n = static_cast<unsigned>(get_le(in, 4));
  if (get_le(in, 8) != 0) throw Error("reserved header bytes must be zero");
  require_table_size(n);
  const Field field = make_field(n);
  FnTable t{field, std::vector<Fe>(field.size())};
  for (auto& v : t.values) {
    v = Fe(get_le(in, 8));
    if (!field.contains(v)) throw Error("element out of range");
  }
  return t;
}

}  // namespace apnforge
