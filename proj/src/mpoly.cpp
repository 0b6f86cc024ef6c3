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

#include "apnforge/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "apnforge/error.hpp"

namespace apnforge {
namespace {

const char* const kVarNames[kMaxVars] = {"U0", "U1", "U2", "V0", "V1", "V2"};

void require_same_field(const MPoly& a, const MPoly& b) {
  if (!(a.field() == b.field())) throw Error("field mismatch");
  if (a.nvars() != b.nvars()) throw Error("variable count mismatch");
}

bool divides(const Exponent& a, const Exponent& b) {
  for (unsigned i = 0; i < kMaxVars; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent e{};
  for (unsigned i = 0; i < kMaxVars; ++i) {
    const unsigned sum = unsigned{a[i]} + b[i];
    if (sum > 0xffff) throw Error("exponent overflow");
    e[i] = static_cast<std::uint16_t>(sum);
  }
  return e;
}

Exponent sub_exp(const Exponent& a, const Exponent& b) {
  Exponent e{};
  for (unsigned i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return e;
}

// Determinant of a square matrix by Laplace expansion along rows, memoized
// on the set of columns still free. Characteristic 2, so no signs.
template <typename T, typename Mul, typename Add>
T laplace_det(const std::vector<std::vector<T>>& a, const T& zero, const T& one,
              const std::function<bool(const T&)>& is_zero, Mul mul, Add add) {
  const unsigned n = static_cast<unsigned>(a.size());
  std::unordered_map<std::uint32_t, T> memo;
  std::function<T(unsigned, std::uint32_t)> det = [&](unsigned row, std::uint32_t cols) -> T {
    if (row == n) return one;
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    T acc = zero;
    for (unsigned c = 0; c < n; ++c) {
      if (!(cols >> c & 1) || is_zero(a[row][c])) continue;
      const T minor = det(row + 1, cols & ~(std::uint32_t{1} << c));
      if (is_zero(minor)) continue;
      acc = add(acc, mul(a[row][c], minor));
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return det(0, n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
}

}  // namespace

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrlexDesc::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MPoly::MPoly(const Field& field, unsigned nvars) : field_(field), nvars_(nvars) {
  if (nvars == 0 || nvars > kMaxVars) throw Error("variable count must be 1..6");
}

MPoly MPoly::constant(const Field& field, unsigned nvars, Fe c) {
  return monomial(field, nvars, c, Exponent{});
}

MPoly MPoly::var(const Field& field, unsigned nvars, unsigned i) {
  if (i >= nvars) throw Error("variable index out of range");
  Exponent e{};
  e[i] = 1;
  return monomial(field, nvars, Fe(1), e);
}

MPoly MPoly::monomial(const Field& field, unsigned nvars, Fe c, const Exponent& e) {
  MPoly p(field, nvars);
  p.add_term(e, c);
  return p;
}

void MPoly::add_term(const Exponent& e, Fe c) {
  if (c.is_zero()) return;
  if (!field_.contains(c)) throw Error("coefficient outside the coefficient field");
  for (unsigned i = nvars_; i < kMaxVars; ++i) {
    if (e[i] != 0) throw Error("exponent for a missing variable");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

unsigned MPoly::total_degree() const {
  return terms_.empty() ? 0 : apnforge::total_degree(terms_.begin()->first);
}

unsigned MPoly::degree_in(unsigned var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[var]);
  return d;
}

std::vector<MPoly> MPoly::coeffs_in(unsigned var) const {
  std::vector<MPoly> out(degree_in(var) + 1, MPoly(field_, nvars_));
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    rest[var] = 0;
    out[e[var]].add_term(rest, c);
  }
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_field(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same_field(a, b);
  std::map<Exponent, Fe> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[add_exp(ea, eb)] += a.field_.mul(ca, cb);
  }
  MPoly out(a.field_, a.nvars_);
  for (const auto& [e, c] : acc) {
    if (!c.is_zero()) out.terms_.emplace(e, c);
  }
  return out;
}

MPoly MPoly::scaled(Fe c) const {
  MPoly out(field_, nvars_);
  for (const auto& [e, x] : terms_) out.add_term(e, field_.mul(c, x));
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly result = MPoly::constant(p.field(), p.nvars(), Fe(1));
  MPoly base = p;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

MPoly substitute(const MPoly& p, unsigned var, const MPoly& q) {
  require_same_field(p, q);
  if (var >= p.nvars()) throw Error("variable index out of range");
  const std::vector<MPoly> coeffs = p.coeffs_in(var);
  MPoly acc(p.field(), p.nvars());
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * q + coeffs[k];
  return acc;
}

MPoly evaluate(const MPoly& p, const std::vector<MPoly>& images) {
  if (images.size() != p.nvars()) throw Error("wrong number of images");
  const Field& target = images.front().field();
  const unsigned nvars = images.front().nvars();
  for (const auto& im : images) {
    if (!(im.field() == target) || im.nvars() != nvars) throw Error("field mismatch");
  }
  const Embedding embed(p.field(), target);
  std::vector<std::vector<MPoly>> powers(p.nvars());
  const auto power = [&](unsigned i, unsigned k) -> const MPoly& {
    auto& table = powers[i];
    if (table.empty()) table.push_back(MPoly::constant(target, nvars, Fe(1)));
    while (table.size() <= k) table.push_back(table.back() * images[i]);
    return table[k];
  };
  MPoly acc(target, nvars);
  for (const auto& [e, c] : p.terms()) {
    MPoly term = MPoly::constant(target, nvars, embed(c));
    for (unsigned i = 0; i < p.nvars(); ++i) {
      if (e[i] != 0) term = term * power(i, e[i]);
    }
    acc += term;
  }
  return acc;
}

MPoly change_field(const MPoly& p, const Field& target) {
  const Embedding embed(p.field(), target);
  MPoly out(target, p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, embed(c));
  return out;
}

MPoly trial_divide(const MPoly& p, const MPoly& q) {
  require_same_field(p, q);
  if (q.is_zero()) throw Error("division by zero polynomial");
  const auto& [lead_e, lead_c] = *q.terms().begin();
  const Fe lead_inv = q.field().inv(lead_c);
  MPoly rem = p;
  MPoly quot(p.field(), p.nvars());
  while (!rem.is_zero()) {
    const auto [e, c] = *rem.terms().begin();
    if (!divides(lead_e, e)) throw Error("not divisible");
    const Exponent shift = sub_exp(e, lead_e);
    const Fe factor = p.field().mul(c, lead_inv);
    quot.add_term(shift, factor);
    for (const auto& [qe, qc] : q.terms()) rem.add_term(add_exp(qe, shift), p.field().mul(factor, qc));
  }
  return quot;
}

namespace {

// Rows 0..dq-1 hold p's coefficients, rows dq.. hold q's, each shifted one
// column per row; entry (r, c) multiplies var^(N-1-c).
template <typename T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& p, const std::vector<T>& q, const T& zero) {
  const std::size_t dp = p.size() - 1, dq = q.size() - 1, n = dp + dq;
  std::vector<std::vector<T>> a(n, std::vector<T>(n, zero));
  for (std::size_t r = 0; r < dq; ++r) {
    for (std::size_t k = 0; k <= dp; ++k) a[r][r + k] = p[dp - k];
  }
  for (std::size_t r = 0; r < dp; ++r) {
    for (std::size_t k = 0; k <= dq; ++k) a[dq + r][r + k] = q[dq - k];
  }
  return a;
}

}  // namespace

MPoly resultant(const MPoly& p, const MPoly& q, unsigned var) {
  require_same_field(p, q);
  if (var >= p.nvars()) throw Error("variable index out of range");
  if (p.degree_in(var) == 0 || q.degree_in(var) == 0) throw Error("degenerate resultant");
  const MPoly zero(p.field(), p.nvars());
  const MPoly one = MPoly::constant(p.field(), p.nvars(), Fe(1));
  const auto a = sylvester(p.coeffs_in(var), q.coeffs_in(var), zero);
  if (a.size() > 20) throw Error("resultant too large for cofactor expansion");
  return laplace_det<MPoly>(
      a, zero, one, [](const MPoly& x) { return x.is_zero(); },
      [](const MPoly& x, const MPoly& y) { return x * y; }, [](const MPoly& x, const MPoly& y) { return x + y; });
}

Embedding::Embedding(const Field& small, const Field& large) : large_(large) {
  if (large.degree() % small.degree() != 0) throw Error("field mismatch: no embedding");
  table_.resize(small.size());
  if (small == large) {
    for (std::uint64_t c = 0; c < small.size(); ++c) table_[c] = Fe(c);
    return;
  }
  const Fe x = small.degree() == 1 ? Fe(1) : subfield_root(large, small.modulus(), small.degree());
  for (std::uint64_t c = 0; c < small.size(); ++c) {
    Fe acc, power(1);
    for (unsigned i = 0; i < small.degree(); ++i) {
      if (c >> i & 1) acc += power;
      power = large.mul(power, x);
    }
    table_[c] = acc;
  }
}

Fe eval_at(const MPoly& p, const Embedding& embed, const std::vector<Fe>& point) {
  if (point.size() < p.nvars()) throw Error("point has too few coordinates");
  const Field& f = embed.target();
  Fe acc;
  for (const auto& [e, c] : p.terms()) {
    Fe term = embed(c);
    for (unsigned i = 0; i < p.nvars() && !term.is_zero(); ++i) {
      if (e[i] != 0) term = f.mul(term, f.pow(point[i], e[i]));
    }
    acc += term;
  }
  return acc;
}

Fe resultant_at(const MPoly& p, const MPoly& q, unsigned var, const Embedding& embed,
                const std::vector<Fe>& point) {
  if (p.degree_in(var) == 0 || q.degree_in(var) == 0) throw Error("degenerate resultant");
  const Field& f = embed.target();
  const auto specialize = [&](const MPoly& x) {
    std::vector<Fe> out;
    for (const MPoly& c : x.coeffs_in(var)) out.push_back(eval_at(c, embed, point));
    return out;
  };
  auto a = sylvester(specialize(p), specialize(q), Fe());
  // Gaussian elimination; row swaps carry no sign in characteristic 2.
  const std::size_t n = a.size();
  Fe det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Fe();
    std::swap(a[pivot], a[col]);
    det = f.mul(det, a[col][col]);
    const Fe inv = f.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const Fe factor = f.mul(a[r][col], inv);
      for (std::size_t c = col; c < n; ++c) a[r][c] += f.mul(factor, a[col][c]);
    }
  }
  return det;
}

std::string to_text(const MPoly& p) {
  std::ostringstream os;
  for (const auto& [e, c] : p.terms()) {
    os << to_hex(c) << ' ';
    for (unsigned i = 0; i < p.nvars(); ++i) os << (i ? "," : "") << e[i];
    os << '\n';
  }
  return os.str();
}

MPoly parse_mpoly(const std::string& text, const Field& field, unsigned nvars) {
  MPoly p(field, nvars);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string coeff, exps;
    if (!(ls >> coeff >> exps)) throw Error("malformed polynomial line: " + line);
    Exponent e{};
    unsigned i = 0;
    std::istringstream es(exps);
    std::string part;
    while (std::getline(es, part, ',')) {
      if (i >= nvars || part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
        throw Error("malformed exponent vector: " + exps);
      }
      e[i++] = static_cast<std::uint16_t>(std::stoul(part));
    }
    if (i != nvars) throw Error("malformed exponent vector: " + exps);
    const Fe c = parse_hex(coeff);
    if (!field.contains(c)) throw Error("coefficient outside the coefficient field");
    p.add_term(e, c);
  }
  return p;
}

std::string term_to_string(const Exponent& e, Fe c, unsigned nvars) {
  std::string s = to_hex(c);
  for (unsigned i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    s += std::string("*") + kVarNames[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace apnforge
