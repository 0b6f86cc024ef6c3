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

// apnforge command-line front end. Every command prints one JSON report to
// stdout; bulk data goes to --out. Exit codes: 0 pass, 1 a checked claim
// failed, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "apnforge/apn.hpp"
#include "apnforge/census.hpp"
#include "apnforge/error.hpp"
#include "apnforge/field.hpp"
#include "apnforge/linearized.hpp"
#include "apnforge/parallel.hpp"
#include "apnforge/selftest.hpp"
#include "apnforge/threshold.hpp"
#include "apnforge/variety.hpp"
#include "json.hpp"

namespace {

using apnforge::Error;
using apnforge::Fe;
using apnforge::Field;
using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Thrown for bad flags or parameters outside what a command supports.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned m = 3;
  unsigned s = 1;
  std::string mu;
  std::string v = "all";
  unsigned d = 1248;
  unsigned dim = 3;
  unsigned divisor = 7;
  unsigned k = 1;
  unsigned max_m = 8;
  unsigned max_degree = Field::kMaxDegree;
  std::uint64_t points = 10000;
  std::string out;
  std::string strategy = "exhaustive";
  std::string level = "quick";
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool dump_moduli = false;
};

struct Outcome {
  Json results = Json::object();
  bool pass = true;
};

Fe parse_fe(const Field& f, const std::string& text, const std::string& flag) {
  try {
    const Fe x = apnforge::parse_hex(text);
    if (!f.contains(x)) throw UsageError(flag + ": element does not fit GF(2^" + std::to_string(f.degree()) + ")");
    return x;
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void require_m_s(const Options& o, unsigned max_m) {
  if (o.m < 1 || o.m > max_m) throw UsageError("--m must be in 1.." + std::to_string(max_m));
  if (o.s < 1) throw UsageError("--s must be positive");
  if (std::gcd(o.s, o.m) != 1) throw UsageError("unsupported (m,s): gcd(s, m) must be 1");
}

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
  if (!f) throw UsageError("cannot open --out " + path);
  return f;
}

Json counts_json(const apnforge::DimCounts& c) { return Json::array({c[0], c[1], c[2], c[3]}); }

Outcome cmd_census(const Options& o) {
  require_m_s(o, 8);
  const Field f = apnforge::make_field(3 * o.m);
  const apnforge::Census c = apnforge::fiber_census(f, o.m, o.s);
  const auto almost = apnforge::verify_prop_almost(c);
  const bool relation_claimed = std::gcd(o.s + o.m, 3 * o.m) == 1;
  std::uint64_t class_failures = 0, relation_failures = 0, rows_checked = 0;
  for (const auto& row : apnforge::relation_rows(c)) {
    ++rows_checked;
    if (!row.class_size_ok) ++class_failures;
    if (row.alpha != Fe(1) && !row.relation_holds) ++relation_failures;
  }
  if (!o.out.empty()) open_out(o.out) << apnforge::census_csv(c);
  const double q3 = std::ldexp(1.0, static_cast<int>(3 * o.m));
  Outcome out;
  out.results = {{"classes", c.per_alpha.size()},
                 {"total", counts_json(c.total)},
                 {"max_dim", c.max_dim},
                 {"n0_identity", almost.identity_holds},
                 {"partition", almost.partition_holds},
                 {"pair_count", almost.pair_count},
                 {"pair_count_over_q3", static_cast<double>(almost.pair_count) / q3},
                 {"n0_bound", almost.bound_holds},
                 {"class_rows", rows_checked},
                 {"class_size_failures", class_failures},
                 {"relation_claimed", relation_claimed},
                 {"relation_failures", relation_failures},
                 {"csv", o.out.empty() ? Json(nullptr) : Json(o.out)}};
  out.pass = almost.ok() && class_failures == 0 && (!relation_claimed || relation_failures == 0);
  return out;
}

Outcome cmd_find_mu(const Options& o) {
  require_m_s(o, 16);
  const Field f = apnforge::make_field(3 * o.m);
  Outcome out;
  std::optional<apnforge::GoodMu> mu;
  if (o.strategy == "exhaustive") {
    try {
      mu = apnforge::find_good_mu(f, o.m, o.s);
    } catch (const apnforge::ContractViolation&) {
      throw;
    } catch (const Error& e) {
      out.results["error"] = e.what();
    }
  } else if (o.strategy == "table1") {
    if (std::gcd(o.s + o.m, 3 * o.m) != 1) throw UsageError("table1 strategy needs gcd(s + m, 3m) = 1");
    const auto c = apnforge::table1_construct(f, o.m, o.s);
    if (c) {
      mu = c->eta;
      out.results["row_g"] = apnforge::to_hex(Fe(c->match.row->g));
      out.results["t"] = c->match.t;
      out.results["root_hex"] = apnforge::to_hex(c->root);
      out.results["fiber_steps"] = c->fiber_steps;
    } else {
      out.results["error"] = "no Table-1 row matches (m,s)";
    }
  } else {
    throw UsageError("--strategy must be exhaustive or table1");
  }
  if (!mu) {
    out.pass = false;
    return out;
  }
  const bool certified = apnforge::is_permutation(apnforge::make_f_mu(f, o.m, o.s, mu->mu)) &&
                         mu->norm != Fe(1) && !mu->norm.is_zero();
  out.results["good_mu"] = Json::parse(apnforge::good_mu_json(o.m, o.s, *mu));
  out.results["certified_permutation"] = certified;
  if (!o.out.empty()) open_out(o.out) << apnforge::good_mu_json(o.m, o.s, *mu) << '\n';
  out.pass = certified;
  return out;
}

Outcome cmd_apn(const Options& o) {
  if (o.m < 1 || o.m > 8) throw UsageError("--m must be in 1..8");
  if (o.mu.empty()) throw UsageError("--mu is required");
  const Field f = apnforge::make_field(3 * o.m);
  const Fe mu = parse_fe(f, o.mu, "--mu");
  apnforge::FamilyReport r;
  Outcome out;
  try {
    if (o.v == "all") {
      r = apnforge::certify_family(f, o.m, o.s, mu, 8, o.seed);
    } else {
      const Fe v = parse_fe(f, o.v, "--v");
      if (v.is_zero() || f.frob(v, o.m) != v) throw UsageError("--v: v not in F_{2^m}^*");
      r = apnforge::certify_family_at(f, o.m, o.s, mu, {v});
      if (!o.out.empty() && r.hypotheses_ok()) {
        auto file = open_out(o.out, true);
        apnforge::write_table(file, apnforge::build_candidate(f, o.m, o.s, mu, v));
      }
    }
  } catch (const apnforge::ContractViolation& e) {
    out.results["error"] = e.what();
    out.pass = false;
    return out;
  }
  Json deltas = Json::array();
  for (const auto& d : r.deltas) deltas.push_back({{"v_hex", apnforge::to_hex(d.v)}, {"delta", d.delta}});
  out.results = {{"norm_hex", apnforge::to_hex(r.norm)},
                 {"norm_ok", r.norm_ok},
                 {"permutation_ok", r.permutation_ok},
                 {"coprime_ok", r.coprime_ok},
                 {"deltas", deltas},
                 {"apn", r.apn()}};
  // Without the hypotheses nothing is claimed; that is not a failure.
  out.pass = !r.hypotheses_ok() || r.apn();
  return out;
}

Outcome cmd_appendix(const Options& o) {
  const auto r = apnforge::verify_appendix(o.points, o.seed);
  Outcome out;
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back({{"step", s.name}, {"ok", s.ok}, {"detail", s.detail}});
  out.results = {{"steps", steps},
                 {"r1_terms", r.r1_terms},
                 {"g_terms", r.g_terms},
                 {"h2_degree", r.h2_degree},
                 {"eval_points", r.eval_points}};
  out.pass = r.ok();
  return out;
}

Outcome cmd_bound(const Options& o) {
  if (o.d < 3) throw UsageError("--d must be at least 3");
  if (o.divisor == 0) throw UsageError("--divisor must be positive");
  const auto r = apnforge::langweil_threshold({o.d, o.dim, o.divisor});
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"m", row.m},
                    {"valid", row.valid},
                    {"positive", row.positive},
                    {"holds", row.holds},
                    {"lhs_over_q3", row.lhs_over_q3},
                    {"a_term_over_q3", row.a_term_over_q3},
                    {"b_term_over_q3", row.b_term_over_q3},
                    {"threshold", row.m == r.m_star}});
  }
  Outcome out;
  out.results = {{"a", r.a},
                 {"b_up", r.b_up},
                 {"m_star", r.m_star},
                 {"reference_m_star", apnforge::ThresholdReport::kReferenceMStar},
                 {"deviation", r.deviates()},
                 {"dominant_term", r.dominant},
                 {"rows", rows}};
  // A neighbouring threshold is reported as a deviation, not a failure.
  out.pass = r.m_star + 1 >= apnforge::ThresholdReport::kReferenceMStar &&
             r.m_star <= apnforge::ThresholdReport::kReferenceMStar + 1;
  return out;
}

Outcome cmd_selftest(const Options& o) {
  apnforge::SelftestLevel level;
  if (o.level == "quick") {
    level = apnforge::SelftestLevel::kQuick;
  } else if (o.level == "full") {
    level = apnforge::SelftestLevel::kFull;
  } else {
    throw UsageError("--level must be quick or full");
  }
  const auto r = apnforge::run_selftest(level, o.seed);
  Outcome out;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}, {"seconds", c.seconds}});
  }
  out.results = {{"checks", checks}};
  out.pass = r.ok();
  return out;
}

Outcome cmd_field(const Options& o) {
  if (!o.dump_moduli) throw UsageError("field: nothing to do (try --dump-moduli)");
  if (o.max_degree < 1 || o.max_degree > Field::kMaxDegree) throw UsageError("--max-degree must be in 1..48");
  const std::string table = apnforge::format_moduli_table(o.max_degree);
  Outcome out;
  if (o.out.empty()) {
    out.results["table"] = table;
  } else {
    open_out(o.out) << table;
    out.results["path"] = o.out;
  }
  out.results["degrees"] = o.max_degree;
  return out;
}

Outcome cmd_curve(const Options& o) {
  if (o.k < 1 || o.k > 7) throw UsageError("--k must be in 1..7");
  const apnforge::MPoly h2 = apnforge::appendix_fixture("h2");
  const std::uint64_t n = apnforge::curve_points(h2, o.k);
  const auto w = apnforge::weil_interval(std::uint64_t{1} << (3 * o.k), h2.total_degree());
  Outcome out;
  out.results = {{"q", w.q}, {"points", n}, {"weil_lo", w.lo}, {"weil_hi", w.hi}, {"inside", w.contains(n)}};
  // The interval only carries information once it excludes 0.
  out.results["informative"] = w.lo > 0;
  out.pass = w.lo == 0 || w.contains(n);
  return out;
}

Outcome cmd_mu_zero(const Options& o) {
  if (o.max_m < 3 || o.max_m > 8) throw UsageError("--max-m must be in 3..8");
  Json rows = Json::array();
  std::uint64_t match_3s = 0, match_3m = 0, total = 0;
  for (const auto& r : apnforge::mu_zero_kernel_table(o.max_m)) {
    ++total;
    match_3s += r.brute == r.gcd_3_s;
    match_3m += r.brute == r.gcd_3m_sm;
    rows.push_back({{"m", r.m}, {"s", r.s}, {"brute", r.brute}, {"gcd_3_s", r.gcd_3_s}, {"gcd_3m_sm", r.gcd_3m_sm}});
  }
  Outcome out;
  out.results = {{"instances", total}, {"matches_gcd_3_s", match_3s}, {"matches_gcd_3m_sm", match_3m}, {"rows", rows}};
  return out;
}

// APNFORGE_MODULI points to a modulus table; it is checked against the
// built-in canonical moduli, never used to replace them.
void check_moduli_env() {
  const char* path = std::getenv("APNFORGE_MODULI");
  if (path == nullptr || *path == '\0') return;
  std::ifstream in(path);
  if (!in) throw UsageError(std::string("APNFORGE_MODULI: cannot open ") + path);
  std::map<unsigned, std::uint64_t> table;
  try {
    table = apnforge::parse_moduli_table(in);
  } catch (const Error& e) {
    throw UsageError(std::string("APNFORGE_MODULI: ") + e.what());
  }
  for (const auto& [n, modulus] : table) {
    if (n < 1 || n > Field::kMaxDegree || apnforge::canonical_modulus(n) != modulus) {
      throw UsageError("APNFORGE_MODULI: degree " + std::to_string(n) + " disagrees with the canonical modulus");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"apnforge: kernel censuses, permutation parameters and APN checks over GF(2^3m)"};
  app.require_subcommand(1);
  Options o;
  Json params = Json::object();

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "seed for sampled checks");
    cmd->add_option("--threads", o.threads, "worker cap (0 = all cores)");
  };
  auto* census = app.add_subcommand("census", "kernel-dimension census per norm class");
  census->add_option("--m", o.m)->required();
  census->add_option("--s", o.s)->required();
  census->add_option("--out", o.out, "census CSV path");
  auto* find_mu = app.add_subcommand("find-mu", "permutation parameter with norm outside {0,1}");
  find_mu->add_option("--m", o.m)->required();
  find_mu->add_option("--s", o.s)->required();
  find_mu->add_option("--strategy", o.strategy, "exhaustive or table1");
  find_mu->add_option("--out", o.out, "GoodMu JSON path");
  auto* apn = app.add_subcommand("apn", "differential uniformity of the candidate family");
  apn->add_option("--m", o.m)->required();
  apn->add_option("--s", o.s)->required();
  apn->add_option("--mu", o.mu, "mu in hex")->required();
  apn->add_option("--v", o.v, "v in hex, or all");
  apn->add_option("--out", o.out, "function table path (single v)");
  auto* appendix = app.add_subcommand("appendix", "recompute the s = 1 resultants and plane section");
  appendix->add_option("--points", o.points, "random evaluation points");
  auto* bound = app.add_subcommand("bound", "point-count threshold table");
  bound->add_option("--d", o.d);
  bound->add_option("--dim", o.dim);
  bound->add_option("--divisor", o.divisor);
  auto* selftest = app.add_subcommand("selftest", "built-in invariant suite");
  selftest->add_option("--level", o.level, "quick or full");
  selftest->add_flag_callback("--quick", [&] { o.level = "quick"; });
  selftest->add_flag_callback("--full", [&] { o.level = "full"; });
  auto* field = app.add_subcommand("field", "field tables");
  field->add_flag("--dump-moduli", o.dump_moduli);
  field->add_option("--max-degree", o.max_degree);
  field->add_option("--out", o.out);
  auto* curve = app.add_subcommand("curve", "affine points of h2 over GF(8^k)");
  curve->add_option("--k", o.k)->required();
  auto* mu_zero = app.add_subcommand("mu-zero", "kernel dimension of f_0 against the closed forms");
  mu_zero->add_option("--max-m", o.max_m);
  for (auto* cmd : {census, find_mu, apn, appendix, bound, selftest, field, curve, mu_zero}) add_common(cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  for (const CLI::Option* opt : cmd->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& r = opt->results();
    params[opt->get_name().substr(2)] = r.empty() ? "true" : r.front();
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    apnforge::set_thread_count(o.threads);
    check_moduli_env();
    const std::string name = cmd->get_name();
    if (name == "census") outcome = cmd_census(o);
    if (name == "find-mu") outcome = cmd_find_mu(o);
    if (name == "apn") outcome = cmd_apn(o);
    if (name == "appendix") outcome = cmd_appendix(o);
    if (name == "bound") outcome = cmd_bound(o);
    if (name == "selftest") outcome = cmd_selftest(o);
    if (name == "field") outcome = cmd_field(o);
    if (name == "curve") outcome = cmd_curve(o);
    if (name == "mu-zero") outcome = cmd_mu_zero(o);
  } catch (const UsageError& e) {
    std::cerr << "apnforge: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    outcome.results["error"] = e.what();
    outcome.pass = false;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const Json report = {{"schema", 1},
                       {"command", cmd->get_name()},
                       {"params", params},
                       {"results", outcome.results},
                       {"status", outcome.pass ? "pass" : "fail"},
                       {"elapsed", elapsed}};
  std::cout << report.dump(2) << '\n';
  return outcome.pass ? kExitPass : kExitFail;
}
