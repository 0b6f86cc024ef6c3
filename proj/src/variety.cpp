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

#include <algorithm>
#include <map>
#include <random>

#include "apnforge/error.hpp"
#include "apnforge/parallel.hpp"
#include "apnforge/upoly.hpp"

namespace apnforge {
namespace internal {
const char* appendix_fixture_raw(const std::string& name);
}  // namespace internal

namespace {

const Field& binary_field() {
  static const Field f = make_field(1);
  return f;
}

const Field& octal_field() {
  static const Field f = make_field(3);
  return f;
}

// w as an element of GF(8): the class of x modulo x^3 + x + 1.
constexpr Fe kOmega(0b010);

Fe omega_pow(unsigned k) { return octal_field().pow(kOmega, k); }

// A bivariate polynomial in U0, U1 viewed inside the 6-variable ring.
MPoly widen(const MPoly& p) {
  MPoly out(p.field(), kMaxVars);
  for (const auto& [e, c] : p.terms()) out.add_term(Exponent{e[0], e[1], 0, 0, 0, 0}, c);
  return out;
}

}  // namespace

const std::string& appendix_fixture_text(const std::string& name) {
  static std::map<std::string, std::string> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const char* raw = internal::appendix_fixture_raw(name);
  if (raw == nullptr) throw Error("unknown appendix fixture: " + name);
  return cache.emplace(name, raw).first->second;
}

MPoly appendix_fixture(const std::string& name) {
  const bool bivariate = name == "h1" || name == "h2" || name == "v1_numerator";
  return parse_mpoly(appendix_fixture_text(name), bivariate ? octal_field() : binary_field(), bivariate ? 2 : kMaxVars);
}

std::array<MPoly, 3> appendix_system(const Field& field, unsigned s) {
  if (s == 0 || s > 8) throw Error("s out of range");
  const unsigned e = 1u << s;
  const auto x = [&](unsigned i) { return MPoly::var(field, kMaxVars, i); };
  const auto f = [&](unsigned u0, unsigned u1, unsigned v0, unsigned v1) {
    // V0^e (U1^e + U0) + U0^e (V1^e + V0), with the indices rotated.
    return pow(x(v0), e) * (pow(x(u1), e) + x(u0)) + pow(x(u0), e) * (pow(x(v1), e) + x(v0));
  };
  return {f(kU0, kU1, kV0, kV1), f(kU1, kU2, kV1, kV2), f(kU2, kU0, kV2, kV0)};
}

std::vector<MPoly> section_substitution() {
  const auto x = [](unsigned i) { return MPoly::var(octal_field(), kMaxVars, i); };
  return {x(kU0),
          x(kU1),
          x(kU0) + x(kU1),
          x(kU0).scaled(kOmega) + x(kU1).scaled(omega_pow(2)),
          x(kV1),
          x(kV2)};
}

bool AppendixReport::ok() const {
  return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const AppendixStep& s) { return s.ok; });
}

std::string first_difference(const MPoly& a, const MPoly& b) {
  if (!(a.field() == b.field()) || a.nvars() != b.nvars()) return "field or arity differs";
  auto ia = a.terms().begin(), ib = b.terms().begin();
  const GrlexDesc before;
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && before(ia->first, ib->first))) {
      return "unexpected term " + term_to_string(ia->first, ia->second, a.nvars());
    }
    if (ia == a.terms().end() || before(ib->first, ia->first)) {
      return "missing term " + term_to_string(ib->first, ib->second, b.nvars());
    }
    if (ia->second != ib->second) {
      return "coefficient differs at " + term_to_string(ia->first, ia->second, a.nvars()) + " (expected " +
             to_hex(ib->second) + ")";
    }
    ++ia;
    ++ib;
  }
  return "";
}

AppendixReport verify_appendix(std::uint64_t eval_points, std::uint64_t seed) {
  AppendixReport report;
  const auto step = [&](const std::string& name, const std::string& diff, const std::string& summary) {
    report.steps.push_back({name, diff.empty(), diff.empty() ? summary : diff});
  };

  // (a) the system over GF(2)
  const auto [f1, f2, f3] = appendix_system(binary_field(), 1);
  step("system", f1.total_degree() == 4 && f2.total_degree() == 4 && f3.total_degree() == 4 ? "" : "unexpected degree",
       "f1, f2, f3 of total degree 4");

  // (b) r1 = Res_V1(f1, f2)
  const MPoly r1_expected = appendix_fixture("r1");
  const MPoly r1 = resultant(f1, f2, kV1);
  report.r1_terms = r1.size();
  step("r1", first_difference(r1, r1_expected), std::to_string(r1.size()) + " terms, degree " +
                                                    std::to_string(r1.total_degree()));

  // (c) r2 = Res_V2(r1, f3) = V0 (V0 + U0) g
  const MPoly g_expected = appendix_fixture("g");
  const MPoly v0 = MPoly::var(binary_field(), kMaxVars, kV0);
  const MPoly u0 = MPoly::var(binary_field(), kMaxVars, kU0);
  std::string g_diff;
  MPoly g(binary_field(), kMaxVars);
  try {
    const MPoly r2 = resultant(r1, f3, kV2);
    g = trial_divide(trial_divide(r2, v0), v0 + u0);
    g_diff = first_difference(g, g_expected);
  } catch (const Error& e) {
    g_diff = e.what();
  }
  report.g_terms = g.size();
  step("g", g_diff, std::to_string(g.size()) + " terms, degree " + std::to_string(g.total_degree()));

  // (d) the plane section over GF(8)
  const std::vector<MPoly> vv = section_substitution();
  const MPoly v1 = MPoly::var(octal_field(), kMaxVars, kV1);
  const MPoly v2 = MPoly::var(octal_field(), kMaxVars, kV2);
  const MPoly u0u1 = MPoly::var(octal_field(), kMaxVars, kU0) * MPoly::var(octal_field(), kMaxVars, kU1);
  const MPoly u0_8 = MPoly::var(octal_field(), kMaxVars, kU0);
  {
    // w^3 f1 = w^3 U0^2 V1^2 + numerator
    const MPoly lhs = evaluate(f1, vv).scaled(omega_pow(3));
    const MPoly rhs = (pow(u0_8, 2) * pow(v1, 2)).scaled(omega_pow(3)) + widen(appendix_fixture("v1_numerator"));
    step("section V1", first_difference(lhs, rhs), "V1^2 = numerator / (w^3 U0^2)");
  }
  {
    const MPoly r1s = evaluate(r1_expected, vv);
    const MPoly v2_rel = (pow(u0u1, 4) * pow(v2, 4)).scaled(omega_pow(6)) + widen(appendix_fixture("h1"));
    std::string diff;
    try {
      const MPoly cofactor = trial_divide(r1s, v2_rel);
      if (cofactor.degree_in(kV2) != 0 || cofactor.degree_in(kV1) != 0) diff = "cofactor depends on V1 or V2";
    } catch (const Error& e) {
      diff = e.what();
    }
    step("section V2", diff, "w^6 U0^4 U1^4 V2^4 + h1 divides r1 on the section");
  }
  {
    const MPoly h2 = appendix_fixture("h2");
    report.h2_degree = h2.total_degree();
    const MPoly gs = evaluate(g_expected, vv);
    std::string diff;
    try {
      // Strip the U0, U1 monomial content and the leading scalar.
      MPoly core = gs;
      for (unsigned var : {kU0, kU1}) {
        const MPoly x = MPoly::var(octal_field(), kMaxVars, var);
        for (;;) {
          try {
            core = trial_divide(core, x);
          } catch (const Error&) {
            break;
          }
        }
      }
      if (!core.is_zero()) core = core.scaled(octal_field().inv(core.terms().begin()->second));
      diff = first_difference(core, widen(h2));
    } catch (const Error& e) {
      diff = e.what();
    }
    step("section h2", diff, "g on the section equals h2 up to a monomial, degree " +
                                 std::to_string(report.h2_degree));
  }

  // (e) evaluation identities at random points of GF(8)^6
  {
    const Embedding embed(binary_field(), octal_field());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, 7);
    const MPoly r2_expected = v0 * (v0 + u0) * g_expected;
    std::string diff;
    for (std::uint64_t i = 0; i < eval_points && diff.empty(); ++i) {
      std::vector<Fe> pt(kMaxVars);
      for (Fe& c : pt) c = Fe(pick(rng));
      if (resultant_at(f1, f2, kV1, embed, pt) != eval_at(r1_expected, embed, pt)) {
        diff = "r1 identity fails at point " + std::to_string(i);
      } else if (resultant_at(r1_expected, f3, kV2, embed, pt) != eval_at(r2_expected, embed, pt)) {
        diff = "r2 identity fails at point " + std::to_string(i);
      }
    }
    report.eval_points = eval_points;
    step("evaluation", diff, std::to_string(eval_points) + " random points of GF(8)^6");
  }

  // (f) no factor of degree <= 2 over GF(8)
  {
    const auto factor = low_degree_factor(appendix_fixture("h2"), 2);
    step("h2 low-degree factors", factor ? "factor found: " + to_text(*factor) : "",
         "no factor of degree <= 2 over GF(8)");
  }
  return report;
}

std::optional<MPoly> low_degree_factor(const MPoly& h_in, unsigned max_degree) {
  if (h_in.nvars() != 2) throw Error("wrong arity");
  if (max_degree == 0 || max_degree > 3) throw Error("max_degree must be 1..3");
  const Field& f = octal_field();
  const MPoly h = change_field(h_in, f);
  if (h.is_zero()) throw Error("zero polynomial");
  const unsigned dh = h.total_degree();
  const unsigned side = dh + 1;

  // GF(8) product table.
  std::uint8_t mul[8][8];
  for (unsigned a = 0; a < 8; ++a) {
    for (unsigned b = 0; b < 8; ++b) mul[a][b] = static_cast<std::uint8_t>(f.mul(Fe(a), Fe(b)).bits);
  }
  std::vector<std::uint8_t> dense(side * side, 0);
  for (const auto& [e, c] : h.terms()) dense[e[0] * side + e[1]] = static_cast<std::uint8_t>(c.bits);

  // Candidate monomials in descending grlex order.
  std::vector<std::pair<unsigned, unsigned>> monos;
  for (int t = static_cast<int>(max_degree); t >= 0; --t) {
    for (int e0 = t; e0 >= 0; --e0) monos.emplace_back(e0, t - e0);
  }
  const std::size_t nm = monos.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nm; ++i) total *= 8;

  std::vector<std::uint8_t> rem(dense.size());
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<std::uint8_t> c(nm);
    std::uint64_t x = code;
    for (std::size_t i = 0; i < nm; ++i, x >>= 3) c[i] = static_cast<std::uint8_t>(x & 7);
    std::size_t lead = 0;
    while (c[lead] == 0) ++lead;
    if (c[lead] != 1) continue;  // normalized: leading coefficient 1
    const auto [l0, l1] = monos[lead];
    if (l0 + l1 == 0) continue;  // constants are units
    rem = dense;
    bool divisible = true;
    for (int t = static_cast<int>(dh); t >= 0 && divisible; --t) {
      for (int e0 = t; e0 >= 0; --e0) {
        const unsigned e1 = static_cast<unsigned>(t - e0);
        const std::uint8_t r = rem[e0 * side + e1];
        if (r == 0) continue;
        if (static_cast<unsigned>(e0) < l0 || e1 < l1) {
          divisible = false;
          break;
        }
        const unsigned s0 = e0 - l0, s1 = e1 - l1;
        for (std::size_t i = lead; i < nm; ++i) {
          if (c[i] == 0) continue;
          rem[(s0 + monos[i].first) * side + s1 + monos[i].second] ^= mul[r][c[i]];
        }
      }
    }
    if (!divisible) continue;
    MPoly factor(f, 2);
    for (std::size_t i = 0; i < nm; ++i) {
      factor.add_term(Exponent{static_cast<std::uint16_t>(monos[i].first),
                               static_cast<std::uint16_t>(monos[i].second), 0, 0, 0, 0},
                      Fe(c[i]));
    }
    return factor;
  }
  return std::nullopt;
}

std::uint64_t curve_points(const MPoly& h, unsigned k) {
  if (h.nvars() != 2) throw Error("wrong arity");
  if (k == 0 || 3 * k > Field::kMaxDegree) throw Error("k out of range");
  const Field target = make_field(3 * k);
  const Embedding embed(h.field(), target);
  // by_u1[j] is the coefficient of U1^j as a polynomial in U0.
  std::vector<UPoly> by_u1(h.degree_in(kU1) + 1);
  for (const auto& [e, c] : h.terms()) {
    UPoly& p = by_u1[e[1]];
    if (p.size() <= e[0]) p.resize(e[0] + 1);
    p[e[0]] += embed(c);
  }
  const std::uint64_t q = target.size();
  const unsigned workers = workers_for(q / 16);
  std::vector<std::uint64_t> counts(workers, 0);
  parallel_for(0, q, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t n = 0;
    UPoly spec(by_u1.size());
    for (std::uint64_t u0 = lo; u0 < hi; ++u0) {
      spec.resize(by_u1.size());
      for (std::size_t j = 0; j < by_u1.size(); ++j) spec[j] = upoly::eval(target, by_u1[j], Fe(u0));
      upoly::trim(spec);
      if (spec.empty()) {
        n += q;
      } else if (upoly::degree(spec) > 0) {
        n += upoly::count_roots(target, spec);
      }
    }
    counts[w] = n;
  });
  std::uint64_t total = 0;
  for (auto n : counts) total += n;
  return total;
}

WeilInterval weil_interval(std::uint64_t q, unsigned d) {
  if (d < 1) throw Error("degree must be positive");
  const u128 a = static_cast<u128>(d - 1) * (d > 1 ? d - 2 : 0);
  // Smallest t with t^2 >= a^2 q.
  const u128 target = a * a * q;
  std::uint64_t lo = 0, hi = 1;
  while (static_cast<u128>(hi) * hi < target) hi <<= 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (static_cast<u128>(mid) * mid >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const std::uint64_t spread = lo + static_cast<std::uint64_t>(d) * (d - 1);
  WeilInterval w;
  w.q = q;
  w.lo = q + 1 > spread ? q + 1 - spread : 0;
  w.hi = q + 1 + spread;
  return w;
}

}  // namespace apnforge
