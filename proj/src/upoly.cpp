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

#include "apnforge/upoly.hpp"

#include <algorithm>
#include <utility>

#include "apnforge/error.hpp"

namespace apnforge::upoly {
namespace {

// Squaring modulo a fixed monic f. In characteristic 2 the square of
// sum c_i X^i is sum c_i^2 X^(2i), so only the residues X^(2i) mod f for
// 2i >= deg f are needed; they are computed once per modulus. Products are
// accumulated unreduced and each output coefficient is reduced once.
class SquareMod {
 public:
  SquareMod(const Field& field, const UPoly& f) : field_(field), d_(degree(f)) {
    UPoly cur(static_cast<std::size_t>(d_));  // X^(d-1)
    cur.back() = Fe(1);
    for (int e = d_; e <= 2 * d_ - 2; ++e) {
      // cur <- cur * X mod f
      const Fe top = cur.back();
      for (int t = d_ - 1; t > 0; --t) {
        cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + field.mul(top, f[static_cast<std::size_t>(t)]);
      }
      cur[0] = field.mul(top, f[0]);
      if (e % 2 == 0) high_.push_back(cur);
    }
  }

  UPoly operator()(const UPoly& p) const {
    std::vector<u128> acc(static_cast<std::size_t>(d_), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const u128 sq = Field::mul_raw(p[i], p[i]);
      if (2 * static_cast<int>(i) < d_) {
        acc[2 * i] ^= sq;
        continue;
      }
      const Fe c = field_.reduce(sq);
      const UPoly& r = high_[i - static_cast<std::size_t>((d_ + 1) / 2)];
      for (int t = 0; t < d_; ++t) acc[static_cast<std::size_t>(t)] ^= Field::mul_raw(c, r[static_cast<std::size_t>(t)]);
    }
    UPoly out(static_cast<std::size_t>(d_));
    for (int i = 0; i < d_; ++i) out[static_cast<std::size_t>(i)] = field_.reduce(acc[static_cast<std::size_t>(i)]);
    trim(out);
    return out;
  }

 private:
  const Field& field_;
  int d_;
  std::vector<UPoly> high_;  // X^(2i) mod f for i = ceil(d/2) .. d-1
};

// Splits a product of distinct linear factors with the trace maps
// Tr(beta X), beta running over the polynomial basis.
void split(const Field& field, const UPoly& g, unsigned basis_index, std::vector<Fe>& out) {
  if (degree(g) <= 0) return;
  if (degree(g) == 1) {
    out.push_back(field.mul(g[0], field.inv(g[1])));
    return;
  }
  for (unsigned b = basis_index; b < field.degree(); ++b) {
    const Fe beta(std::uint64_t{1} << b);
    const SquareMod sqr(field, g);
    UPoly cur = mod(field, UPoly{Fe(), beta}, g);
    UPoly trace = cur;
    for (unsigned i = 1; i < field.degree(); ++i) {
      cur = sqr(cur);
      trace = add(trace, cur);
    }
    const UPoly h = gcd(field, g, trace);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      split(field, h, b + 1, out);
      split(field, div(field, g, h), b + 1, out);
      return;
    }
  }
  throw ContractViolation("trace splitting failed: polynomial is not a product of distinct linear factors");
}

}  // namespace

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Fe eval(const Field& field, const UPoly& p, Fe x) {
  Fe acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = field.mul(acc, x) + *it;
  return acc;
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

UPoly mul(const Field& field, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<u128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] ^= Field::mul_raw(a[i], b[j]);
  }
  UPoly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = field.reduce(acc[i]);
  trim(out);
  return out;
}

namespace {

std::pair<UPoly, UPoly> divmod(const Field& field, UPoly a, const UPoly& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return {UPoly{}, std::move(a)};
  const Fe lead_inv = field.inv(b.back());
  UPoly q(static_cast<std::size_t>(degree(a) - db + 1));
  for (int j = degree(a); j >= db; --j) {
    const Fe c = field.mul(a[static_cast<std::size_t>(j)], lead_inv);
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(j - db)] = c;
    for (int t = 0; t <= db; ++t) {
      a[static_cast<std::size_t>(j - db + t)] += field.mul(c, b[static_cast<std::size_t>(t)]);
    }
  }
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

}  // namespace

UPoly mod(const Field& field, UPoly a, const UPoly& b) {
  return divmod(field, std::move(a), b).second;
}

UPoly div(const Field& field, UPoly a, const UPoly& b) {
  return divmod(field, std::move(a), b).first;
}

UPoly monic(const Field& field, UPoly p) {
  trim(p);
  if (p.empty()) return p;
  const Fe inv = field.inv(p.back());
  for (Fe& c : p) c = field.mul(c, inv);
  return p;
}

UPoly gcd(const Field& field, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = mod(field, std::move(a), b);
    std::swap(a, b);
  }
  return monic(field, std::move(a));
}

UPoly x_pow2k_mod(const Field& field, const UPoly& f, unsigned k) {
  if (degree(f) < 1 || f.back() != Fe(1)) throw Error("x_pow2k_mod: modulus must be monic of positive degree");
  const SquareMod sqr(field, f);
  UPoly cur = mod(field, UPoly{Fe(), Fe(1)}, f);
  for (unsigned i = 0; i < k; ++i) cur = sqr(cur);
  return cur;
}

unsigned count_roots(const Field& field, const UPoly& p) {
  UPoly f = monic(field, p);
  if (f.empty()) throw Error("count_roots: zero polynomial");
  if (degree(f) == 0) return 0;
  const UPoly xq_minus_x = add(x_pow2k_mod(field, f, field.degree()), UPoly{Fe(), Fe(1)});
  return static_cast<unsigned>(degree(gcd(field, f, xq_minus_x)));
}

std::vector<Fe> roots(const Field& field, const UPoly& p) {
  UPoly f = monic(field, p);
  if (f.empty()) throw Error("roots: zero polynomial");
  std::vector<Fe> out;
  if (degree(f) == 0) return out;
  const UPoly xq_minus_x = add(x_pow2k_mod(field, f, field.degree()), UPoly{Fe(), Fe(1)});
  split(field, gcd(field, f, xq_minus_x), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace apnforge::upoly
