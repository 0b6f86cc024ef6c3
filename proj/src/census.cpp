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

#include "apnforge/census.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "apnforge/error.hpp"
#include "apnforge/linear_map.hpp"
#include "apnforge/parallel.hpp"
#include "json.hpp"

namespace apnforge {
namespace {

// Largest field the value-map sweep will allocate per-mu arrays for.
constexpr unsigned kMaxSweepDegree = 30;

void require_cubic(const Field& field, unsigned m) {
  if (m == 0 || field.degree() != 3 * m) throw Error("ambient field is not a cubic extension");
}

void require_coprime(unsigned m, unsigned s) {
  if (s == 0 || std::gcd(s, m) != 1) throw Error("requires s >= 1 and gcd(s, m) = 1");
}

std::uint64_t class_size(unsigned m) {
  return (std::uint64_t{1} << (2 * m)) + (std::uint64_t{1} << m) + 1;
}

unsigned dim_from_fiber(unsigned size) {
  switch (size) {
    case 0: return 0;
    case 1: return 1;
    case 3: return 2;
    case 7: return 3;
    default: break;
  }
  if (size != 0 && ((size + 1) & size) == 0 && size < 255) {
    // A punctured kernel of dimension > 3: linear, but outside what gcd(s, m) = 1 allows.
    throw ContractViolation("kernel dimension above 3 with gcd(s, m) = 1");
  }
  throw ContractViolation("nonlinear fiber");
}

}  // namespace

std::vector<std::uint8_t> value_map_kernel_dims(const Field& field, unsigned m, unsigned s) {
  require_cubic(field, m);
  require_coprime(m, s);
  if (field.degree() > kMaxSweepDegree) throw Error("field too large for an exhaustive sweep");
  const std::uint64_t size = field.size();
  const LinearMap numerator = LinearMap::from_function(
      field.degree(), [&](std::uint64_t x) { return (field.frob(Fe(x), m + s) + Fe(x)).bits; });
  const LinearMap denominator = frobenius_map(field, s);

  const unsigned workers = workers_for(size);
  std::vector<std::vector<std::uint8_t>> fibers(workers);
  parallel_for(1, size, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    auto& counts = fibers[w];
    counts.assign(size, 0);
    constexpr std::size_t kBatch = 1024;
    Fe num[kBatch], den[kBatch], prefix[kBatch];
    for (std::uint64_t start = lo; start < hi; start += kBatch) {
      const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, hi - start));
      // Batch inversion: one field inversion per block.
      Fe run(1);
      for (std::size_t i = 0; i < len; ++i) {
        num[i] = numerator(Fe(start + i));
        den[i] = denominator(Fe(start + i));
        prefix[i] = run;
        run = field.mul(run, den[i]);
      }
      Fe inv_run = field.inv(run);
      for (std::size_t i = len; i-- > 0;) {
        const Fe den_inv = field.mul(inv_run, prefix[i]);
        inv_run = field.mul(inv_run, den[i]);
        std::uint8_t& c = counts[field.mul(num[i], den_inv).bits];
        if (c != 255) ++c;
      }
    }
  });

  std::vector<std::uint8_t> dims(size);
  for (std::uint64_t mu = 0; mu < size; ++mu) {
    unsigned total = 0;
    for (const auto& f : fibers) total += f[mu];
    dims[mu] = static_cast<std::uint8_t>(dim_from_fiber(std::min(total, 255u)));
  }
  return dims;
}

Census fiber_census(const Field& field, unsigned m, unsigned s) {
  Census c;
  c.m = m;
  c.s = s;
  c.kernel_dims = value_map_kernel_dims(field, m, s);
  const LinearMap frob_m = frobenius_map(field, m);
  const LinearMap frob_2m = frobenius_map(field, 2 * m);
  std::unordered_map<std::uint64_t, DimCounts> classes;
  classes.reserve(std::size_t{1} << m);
  for (std::uint64_t mu = 0; mu < field.size(); ++mu) {
    const Fe x(mu);
    const Fe alpha = field.mul(field.mul(x, frob_m(x)), frob_2m(x));
    const unsigned d = c.kernel_dims[mu];
    ++classes[alpha.bits][d];
    ++c.total[d];
    c.max_dim = std::max(c.max_dim, d);
  }
  for (const auto& [alpha, counts] : classes) c.per_alpha.emplace(Fe(alpha), counts);
  const auto zero_class = c.per_alpha.find(Fe());
  if (zero_class == c.per_alpha.end() ||
      std::accumulate(zero_class->second.begin(), zero_class->second.end(), std::uint64_t{0}) != 1) {
    throw ContractViolation("norm-zero class must contain exactly mu = 0");
  }
  return c;
}

std::string to_string(Provenance p) {
  return p == Provenance::kExhaustive ? "exhaustive" : "table1+remark";
}

GoodMu find_good_mu(const Field& field, unsigned m, unsigned s) {
  require_cubic(field, m);
  require_coprime(m, s);
  const FMuFamily family(field, m, s);
  const auto accept = [&](Fe mu) -> std::optional<GoodMu> {
    const Fe norm = rel_norm(field, m, mu);
    if (norm.is_zero() || norm == Fe(1)) return std::nullopt;
    if (!is_permutation(make_f_mu(field, m, s, mu))) {
      throw ContractViolation("mu outside the value-map image is not a permutation parameter");
    }
    return GoodMu{mu, norm, 0, Provenance::kExhaustive};
  };
  if (field.degree() <= 24) {
    const auto dims = value_map_kernel_dims(field, m, s);
    for (std::uint64_t mu = 0; mu < field.size(); ++mu) {
      if (dims[mu] != 0) continue;
      if (auto found = accept(Fe(mu))) return *found;
    }
  } else {
    // Too large to tabulate the value map; the rank test decides the same
    // predicate one mu at a time.
    for (std::uint64_t mu = 1; mu < field.size(); ++mu) {
      if (family.kernel_dim(Fe(mu)) != 0) continue;
      if (auto found = accept(Fe(mu))) return *found;
    }
  }
  throw Error("Question 1 negative for (m,s) = (" + std::to_string(m) + "," + std::to_string(s) + ")");
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {3, {1, 2}, 0b1011, 1},                      // x^3 + x + 1
      {3, {1, 2}, 0b1101, 2},                      // x^3 + x^2 + 1
      {4, {1, 3}, 0b11111, 2},                     // x^4 + x^3 + x^2 + x + 1
      {5, {1, 2, 3, 4}, 0b111101, 1},              // x^5 + x^4 + x^3 + x^2 + 1
      {7, {1, 2, 3, 4, 5, 6}, 0b10101011, 2},      // x^7 + x^5 + x^3 + x + 1
      {9, {1, 2, 4, 5, 7, 8}, 0b1000010001, 1},    // x^9 + x^4 + 1
      {9, {1, 2, 4, 5, 7, 8}, 0b1100000001, 2},    // x^9 + x^8 + 1
  };
  return rows;
}

std::vector<Table1Match> table1_matches(unsigned m, unsigned s) {
  std::vector<Table1Match> out;
  if (std::gcd(m, s) != 1) return out;
  for (const Table1Row& row : table1_rows()) {
    if (m % row.base_m != 0) continue;
    const unsigned t = m / row.base_m;
    if (t % 3 == 0) continue;
    const unsigned residue = s % row.base_m;
    const auto it = std::find(row.base_s.begin(), row.base_s.end(), residue);
    if (it == row.base_s.end()) continue;
    if ((s + row.j * t) % 3 != 0) continue;
    out.push_back(Table1Match{&row, t, *it});
  }
  return out;
}

std::optional<Table1Construction> table1_construct(const Field& field, unsigned m, unsigned s) {
  require_cubic(field, m);
  if (std::gcd(s + m, 3 * m) != 1) throw Error("hypothesis violated: gcd(s + m, 3m) != 1");
  const auto matches = table1_matches(m, s);
  if (matches.empty()) return std::nullopt;

  // Every matching row must work; the first one is used.
  const Table1Match& match = matches.front();
  Table1Construction out;
  out.match = match;
  out.root = subfield_root(field, match.row->g, match.row->base_m);
  if (kernel_dim_matrix(make_f_mu(field, m, s, out.root)) != 3) {
    throw ContractViolation("Table-1 contract violated: kernel dimension of the root is not 3");
  }
  out.h_m = h_iterate(field, m, s, out.root, m);
  if (!out.h_m.is_identity(m)) throw ContractViolation("Table-1 contract violated: H^m is not the identity");
  out.norm = rel_norm(field, m, out.root);
  if (out.norm == Fe(1) || out.norm.is_zero()) {
    throw ContractViolation("Table-1 contract violated: norm of the root is in {0, 1}");
  }

  // Walk the norm class root * zeta^k, zeta generating the norm-one subgroup.
  const FMuFamily family(field, m, s);
  const Fe zeta = norm_one_generator(field, m);
  Fe eta = out.root;
  for (std::uint64_t k = 0; k < class_size(m); ++k) {
    if (family.kernel_dim(eta) == 0) {
      if (rel_norm(field, m, eta) != out.norm) throw ContractViolation("norm class walk left the class");
      out.fiber_steps = k;
      out.eta = GoodMu{eta, out.norm, 0, Provenance::kTable1Remark};
      return out;
    }
    eta = field.mul(eta, zeta);
  }
  throw ContractViolation("Table-1 contract violated: no permutation parameter in the norm class");
}

std::optional<GoodMu> table1_mu(const Field& field, unsigned m, unsigned s) {
  auto c = table1_construct(field, m, s);
  if (!c) return std::nullopt;
  return c->eta;
}

std::uint64_t curve_pair_count(const Census& census) {
  std::uint64_t n = 0;
  for (const auto& [alpha, counts] : census.per_alpha) {
    for (unsigned i = 2; i < counts.size(); ++i) {
      const std::uint64_t fiber = (std::uint64_t{1} << i) - 1;
      n += fiber * (fiber - 1) * counts[i];
    }
  }
  return n;
}

PropAlmostReport verify_prop_almost(const Census& census) {
  PropAlmostReport r;
  const DimCounts& t = census.total;
  r.n0 = t[0];
  r.identity_rhs = 1;
  for (unsigned i = 1; i < t.size(); ++i) {
    const std::uint64_t fiber = (std::uint64_t{1} << i) - 1;
    r.punctured_total += fiber * t[i];
    if (i >= 2) r.identity_rhs += (fiber - 1) * t[i];
  }
  r.identity_holds = r.n0 == r.identity_rhs;
  r.partition_holds = r.punctured_total == (std::uint64_t{1} << (3 * census.m)) - 1;
  r.pair_count = curve_pair_count(census);
  r.max_dim = census.max_dim;
  r.max_dim_ok = census.max_dim <= 3;
  // n0 >= 1 + N / (2^M - 1), cleared of the denominator.
  const std::uint64_t divisor = (std::uint64_t{1} << census.max_dim) - 1;
  if (divisor == 0) {
    r.bound_holds = r.pair_count == 0 && r.n0 >= 1;
  } else {
    r.bound_holds = r.n0 >= 1 && (r.n0 - 1) * divisor >= r.pair_count;
  }
  return r;
}

std::vector<RelationRow> relation_rows(const Census& census) {
  std::vector<RelationRow> rows;
  for (const auto& [alpha, c] : census.per_alpha) {
    if (alpha.is_zero()) continue;
    RelationRow row{alpha, c};
    row.class_size_ok = c[0] + c[1] + c[2] + c[3] == class_size(census.m);
    row.relation_holds = c[0] == 2 * c[2] + 6 * c[3];
    rows.push_back(row);
  }
  return rows;
}

PropDim1Report verify_prop_dim1(const Field& field, unsigned m, unsigned s, std::uint64_t samples,
                                std::uint64_t seed) {
  require_cubic(field, m);
  if (s == 0 || std::gcd(s + m, 3 * m) != 1) throw Error("hypothesis violated");
  const std::uint64_t e = (std::uint64_t{1} << (s + m)) - 1;
  PropDim1Report r;
  r.exhaustive = field.degree() <= 9;

  const auto check = [&](Fe eta) {
    ++r.checked;
    const Fe x0 = solve_exp_eq(field, e, field.inv(eta + Fe(1)));
    const Fe y0 = field.frob(x0, s);
    const bool ok = !x0.is_zero() && field.frob(x0, s) == y0 &&
                    field.frob(x0, s + m) + x0 == field.mul(eta, field.frob(y0, m));
    if (!ok) ++r.failures;
    if (r.exhaustive) {
      ++r.uniqueness_checked;
      std::uint64_t solutions = 0;
      const Fe scale = eta + Fe(1);
      for (std::uint64_t x = 1; x < field.size(); ++x) {
        if (field.mul(scale, field.frob(Fe(x), s + m)) == Fe(x)) ++solutions;
      }
      if (solutions != 1) ++r.failures;
    }
  };

  if (r.exhaustive) {
    for (std::uint64_t eta = 0; eta < field.size(); ++eta) {
      if (eta != 1) check(Fe(eta));
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, field.size() - 1);
    while (r.checked < samples) {
      const Fe eta(pick(rng));
      if (eta != Fe(1)) check(eta);
    }
  }
  return r;
}

std::vector<MuZeroRow> mu_zero_kernel_table(unsigned max_m) {
  if (max_m > 8) throw Error("mu = 0 table is limited to m <= 8");
  std::vector<MuZeroRow> rows;
  for (unsigned m = 3; m <= max_m; ++m) {
    const Field field = make_field(3 * m);
    for (unsigned s = 1; s < 3 * m; ++s) {
      if (std::gcd(s, m) != 1) continue;
      const LinearMap frob_ms = frobenius_map(field, m + s);
      std::uint64_t roots = 0;
      for (std::uint64_t x = 0; x < field.size(); ++x) {
        if (frob_ms(x) == x) ++roots;
      }
      MuZeroRow row{m, s, 0, std::gcd(3u, s), std::gcd(3 * m, s + m)};
      while ((std::uint64_t{1} << row.brute) < roots) ++row.brute;
      if ((std::uint64_t{1} << row.brute) != roots) throw ContractViolation("root count is not a power of 2");
      rows.push_back(row);
    }
  }
  return rows;
}

std::string census_csv(const Census& census) {
  std::ostringstream os;
  os << "alpha_hex,n0,n1,n2,n3\n";
  const auto row = [&](const std::string& label, const DimCounts& c) {
    os << label << ',' << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << '\n';
  };
  for (const auto& [alpha, c] : census.per_alpha) row(to_hex(alpha), c);
  row("TOTAL", census.total);
  return os.str();
}

std::string good_mu_json(unsigned m, unsigned s, const GoodMu& mu) {
  const nlohmann::ordered_json j = {{"m", m},
                                    {"s", s},
                                    {"mu_hex", to_hex(mu.mu)},
                                    {"norm_hex", to_hex(mu.norm)},
                                    {"provenance", to_string(mu.provenance)}};
  return j.dump();
}

}  // namespace apnforge
