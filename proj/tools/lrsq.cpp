// lrsq: command-line front end.  Exit 0 on success, 1 when an identity
// check fails, 2 on usage errors.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrsq/finite.hpp"
#include "lrsq/hesselink.hpp"
#include "lrsq/hilbert.hpp"
#include "lrsq/json_io.hpp"
#include "lrsq/lr.hpp"
#include "lrsq/symfunc.hpp"

namespace {

using lrsq::BigInt;
using lrsq::Json;

// A usage problem attributable to one flag.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

struct Outcome {
  std::string verb;
  std::map<std::string, std::string> parameters;
  Json payload;
  std::optional<bool> verified;
  std::string table;
};

struct Options {
  bool json = false;
  unsigned threads = 1;
  int m = -1, n = -1, q = -1, degree = -1, dmax = -1;
  std::string lambda, mu, nu, mus, composition, profile, weights;
  bool brute = false, lr = false, both = false;
};

template <class Fn>
auto flag_guard(const std::string& flag, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag, e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(flag, e.what());
  }
}

void require(bool given, const std::string& flag) {
  if (!given) throw UsageError(flag, "required");
}

int need_int(int value, const std::string& flag, int lo, int hi) {
  require(value != -1, flag);
  if (value < lo || value > hi)
    throw UsageError(flag, "value " + std::to_string(value) + " outside the supported range [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
  return value;
}

lrsq::Partition partition_flag(const std::string& text, const std::string& flag) {
  return flag_guard(flag, [&] { return lrsq::parse_partition(text == "0" ? "" : text); });
}

std::vector<int> int_list(const std::string& text, const std::string& flag, bool allow_negative) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw UsageError(flag, "malformed integer list '" + text + "'");
    if (v < 0 && !allow_negative) throw UsageError(flag, "negative entry in '" + text + "'");
    out.push_back(v);
  }
  if (text.back() == ',') throw UsageError(flag, "malformed integer list '" + text + "'");
  return out;
}

int list_sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// ---- table rendering

std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      line += i + 1 == r.size() ? std::string(width[i] - r[i].size(), ' ') + r[i] : r[i] + std::string(width[i] - r[i].size(), ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string exp_label(const lrsq::Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s;
}

std::string series_table(const lrsq::TruncatedSeries& s) {
  std::string head = "degree";
  if (s.num_vars() > 1) {
    head = "exp(";
    for (std::size_t i = 0; i < s.names().size(); ++i) head += (i ? "," : "") + s.names()[i];
    head += ")";
  }
  std::vector<std::vector<std::string>> rows{{head, "coeff"}};
  if (s.num_vars() == 1) {
    for (int d = 0; d <= s.max_degree(); ++d) rows.push_back({std::to_string(d), lrsq::to_decimal(s.coefficient(d))});
  } else {
    for (const auto& [e, c] : s.terms()) rows.push_back({exp_label(e), lrsq::to_decimal(c)});
  }
  return render_rows(rows);
}

std::string report_table(const lrsq::IdentityReport& r) {
  std::map<lrsq::Exponent, int> keys;
  for (const auto* s : {&r.lhs, &r.rhs}) for (const auto& [e, c] : s->terms()) keys[e];
  if (r.alternate)
    for (const auto& [e, c] : r.alternate->terms()) keys[e];
  if (r.lhs.num_vars() == 1) {
    keys.clear();
    for (int d = 0; d <= r.lhs.max_degree(); ++d) keys[lrsq::Exponent{d}];
  }
  std::vector<std::string> head{"exp", "lhs", "rhs"};
  if (r.alternate) head.push_back("alternate");
  std::vector<std::vector<std::string>> rows{head};
  for (const auto& [e, unused] : keys) {
    std::vector<std::string> row{exp_label(e), lrsq::to_decimal(r.lhs.coefficient(e)), lrsq::to_decimal(r.rhs.coefficient(e))};
    if (r.alternate) row.push_back(lrsq::to_decimal(r.alternate->coefficient(e)));
    rows.push_back(std::move(row));
  }
  std::string out = render_rows(rows);
  out += "equal: " + std::string(r.equal ? "true" : "false") + "\n";
  if (r.first_discrepancy) out += "first discrepancy at exponent (" + exp_label(*r.first_discrepancy) + ")\n";
  return out;
}

std::string scalar_table(const std::string& label, const BigInt& v) { return render_rows({{label, lrsq::to_decimal(v)}}); }

std::string graded_table(const lrsq::GradedMultiplicity& g) {
  std::vector<std::vector<std::string>> rows{{"degree", "coeff"}};
  for (const auto& [d, c] : g.coeffs()) rows.push_back({std::to_string(d), lrsq::to_decimal(c)});
  return render_rows(rows);
}

Outcome series_outcome(std::string verb, std::map<std::string, std::string> params, const lrsq::TruncatedSeries& s) {
  return {std::move(verb), std::move(params), lrsq::to_json(s), std::nullopt, series_table(s)};
}

Outcome report_outcome(std::string verb, std::map<std::string, std::string> params, const lrsq::IdentityReport& r) {
  return {std::move(verb), std::move(params), lrsq::to_json(r), r.equal, report_table(r)};
}

// ---- verbs

Outcome run_lr(const Options& o) {
  require(!o.lambda.empty(), "--lambda");
  const auto lambda = partition_flag(o.lambda, "--lambda");
  if (!o.mus.empty()) {
    const auto tuple = flag_guard("--mus", [&] { return lrsq::parse_partition_tuple(o.mus); });
    const BigInt c = lrsq::lr_multi(lambda, tuple);
    return {"lr", {{"lambda", lrsq::to_string(lambda)}, {"mus", lrsq::to_string(tuple)}}, lrsq::to_json(c), std::nullopt,
            scalar_table("c", c)};
  }
  require(!o.mu.empty(), "--mu");
  require(!o.nu.empty(), "--nu");
  const auto mu = partition_flag(o.mu, "--mu");
  const auto nu = partition_flag(o.nu, "--nu");
  const BigInt c = lrsq::lr_coefficient(lambda, mu, nu);
  return {"lr",
          {{"lambda", lrsq::to_string(lambda)}, {"mu", lrsq::to_string(mu)}, {"nu", lrsq::to_string(nu)}},
          lrsq::to_json(c),
          std::nullopt,
          scalar_table("c", c)};
}

Outcome run_kostka(const Options& o) {
  require(!o.lambda.empty(), "--lambda");
  require(!o.nu.empty(), "--nu");
  const auto lambda = partition_flag(o.lambda, "--lambda");
  const auto nu = partition_flag(o.nu, "--nu");
  const BigInt k = lrsq::kostka(lambda, nu);
  return {"kostka", {{"lambda", lrsq::to_string(lambda)}, {"nu", lrsq::to_string(nu)}}, lrsq::to_json(k), std::nullopt,
          scalar_table("K", k)};
}

Outcome run_lrsum(const Options& o) {
  const int m = need_int(o.m, "--m", 1, 8);
  const int d = need_int(o.degree, "--degree", 0, 10);
  std::optional<std::vector<int>> profile;
  if (!o.profile.empty()) {
    profile = int_list(o.profile, "--profile", false);
    if (static_cast<int>(profile->size()) != m) throw UsageError("--profile", "must have --m entries");
    if (list_sum(*profile) != d) throw UsageError("--profile", "entries must sum to --degree");
  }
  lrsq::LengthBounds bounds;
  std::map<std::string, std::string> params{{"m", std::to_string(m)}, {"degree", std::to_string(d)}};
  if (o.n != -1) {
    bounds.lambda_max = need_int(o.n, "--n", 1, 64);
    params["n"] = std::to_string(o.n);
  }
  if (profile) params["profile"] = o.profile;
  const BigInt s = lrsq::sum_lr_squared(d, m, profile, bounds);
  return {"lrsum", params, lrsq::to_json(s), std::nullopt, scalar_table("sum", s)};
}

Outcome run_series(const std::string& which, const Options& o) {
  const std::string verb = "series " + which;
  const int D = need_int(o.degree, "--degree", 0, 30);
  std::map<std::string, std::string> p{{"degree", std::to_string(D)}};
  if (which == "main-formula") {
    const int m = need_int(o.m, "--m", 1, 6);
    p["m"] = std::to_string(m);
    return series_outcome(verb, p, lrsq::main_formula_lhs(m, D));
  }
  if (which == "stable-block") {
    const int m = need_int(o.m, "--m", 1, 100);
    p["m"] = std::to_string(m);
    return series_outcome(verb, p, lrsq::stable_block_series(m, D));
  }
  if (which == "harmonic") {
    const int m = need_int(o.m, "--m", 2, 100);
    p["m"] = std::to_string(m);
    return series_outcome(verb, p, lrsq::harmonic_stable_series(m, D));
  }
  if (which == "eta") {
    const int m = need_int(o.m, "--m", 1, 100);
    p["m"] = std::to_string(m);
    return series_outcome(verb, p, lrsq::eta_series(m, D));
  }
  if (which == "glq") {
    const int q = need_int(o.q, "--q", 2, 1000);
    p["q"] = std::to_string(q);
    return series_outcome(verb, p, lrsq::glq_class_series(q, D));
  }
  return series_outcome(verb, p, lrsq::partitions_by_length_series(D));
}

Outcome run_verify(const std::string& which, const Options& o) {
  const std::string verb = "verify " + which;
  if (which == "orbit") {
    std::vector<std::vector<int>> comps;
    std::map<std::string, std::string> p;
    if (!o.composition.empty()) {
      comps.push_back(int_list(o.composition, "--composition", false));
      if (list_sum(comps.back()) > lrsq::kMaxOrbitDegree)
        throw UsageError("--composition", "total " + std::to_string(list_sum(comps.back())) + " exceeds the bound " +
                                              std::to_string(lrsq::kMaxOrbitDegree));
      p["composition"] = o.composition;
    } else {
      const int d = need_int(o.degree, "--degree", 1, 6);
      comps = lrsq::compositions(d);
      p["degree"] = std::to_string(d);
    }
    std::vector<std::vector<std::string>> rows{{"composition", "brute", "lr"}};
    Json items = Json::array();
    bool ok = true;
    for (const auto& c : comps) {
      const BigInt brute = lrsq::orbit_count_brute(c);
      const BigInt viaLr = lrsq::orbit_count_lr(c);
      ok = ok && brute == viaLr;
      rows.push_back({exp_label(c), lrsq::to_decimal(brute), lrsq::to_decimal(viaLr)});
      items.push_back({{"composition", c}, {"brute", lrsq::to_decimal(brute)}, {"lr", lrsq::to_decimal(viaLr)}});
    }
    std::string table = render_rows(rows) + "equal: " + (ok ? "true" : "false") + "\n";
    return {verb, p, Json{{"equal", ok}, {"orbits", items}}, ok, table};
  }
  const int D = need_int(o.degree, "--degree", 0, which == "main-formula" ? 12 : 20);
  std::map<std::string, std::string> p{{"degree", std::to_string(D)}};
  if (which == "main-formula") {
    const int m = need_int(o.m, "--m", 1, 6);
    p["m"] = std::to_string(m);
    return report_outcome(verb, p, lrsq::verify_main_formula(m, D, o.threads));
  }
  if (which == "bigraded") {
    need_int(D, "--degree", 0, 10);
    return report_outcome(verb, p, lrsq::bigraded_identity(D, o.threads));
  }
  if (which == "eta-glq") {
    const int q = need_int(o.q, "--q", 2, 1000);
    p["q"] = std::to_string(q);
    return report_outcome(verb, p, lrsq::eta_glq_identity(q, D));
  }
  // block-stable: prod 1/(1 - m t^k) against block invariants with every n_j = D
  const int m = need_int(o.m, "--m", 1, 4);
  need_int(D, "--degree", 0, 7);
  p["m"] = std::to_string(m);
  lrsq::TruncatedSeries rhs(1, D);
  const std::vector<int> blocks(static_cast<std::size_t>(m), std::max(D, 1));
  for (int d = 0; d <= D; ++d) rhs.add_term(lrsq::Exponent{d}, lrsq::block_invariant_dim(blocks, d));
  return report_outcome(verb, p, lrsq::compare_series(lrsq::stable_block_series(m, D), rhs));
}

Outcome run_dim(const std::string& which, const Options& o) {
  const std::string verb = "dim " + which;
  if (which == "invariants") {
    const int n = need_int(o.n, "--n", 1, 64);
    require(!o.profile.empty(), "--profile");
    const auto profile = int_list(o.profile, "--profile", false);
    if (list_sum(profile) > 10) throw UsageError("--profile", "total degree must be <= 10");
    std::map<std::string, std::string> p{{"n", std::to_string(n)}, {"profile", o.profile}};
    const BigInt lr = lrsq::finite_invariant_dim(n, profile);
    if (!o.both) return {verb, p, lrsq::to_json(lr), std::nullopt, scalar_table("dim", lr)};
    if (n > 3) throw UsageError("--n", "the Weyl-integration check needs n <= 3");
    if (list_sum(profile) > 6) throw UsageError("--profile", "the Weyl-integration check needs total degree <= 6");
    const BigInt molien = lrsq::molien_invariant_dim(n, profile);
    const bool ok = lr == molien;
    return {verb, p, Json{{"lr", lrsq::to_decimal(lr)}, {"molien", lrsq::to_decimal(molien)}, {"equal", ok}}, ok,
            render_rows({{"lr", lrsq::to_decimal(lr)}, {"molien", lrsq::to_decimal(molien)}}) + "equal: " +
                (ok ? "true" : "false") + "\n"};
  }
  require(!o.composition.empty(), "--composition");
  const auto blocks = int_list(o.composition, "--composition", false);
  if (blocks.empty() || std::count(blocks.begin(), blocks.end(), 0))
    throw UsageError("--composition", "block sizes must be positive");
  const int d = need_int(o.degree, "--degree", 0, 7);
  std::map<std::string, std::string> p{{"composition", o.composition}, {"degree", std::to_string(d)}};
  const BigInt v = which == "block" ? lrsq::block_invariant_dim(blocks, d) : lrsq::harmonic_finite_dim(blocks, d);
  return {verb, p, lrsq::to_json(v), std::nullopt, scalar_table("dim", v)};
}

lrsq::Weight weight_flag(const std::string& text, int n, const std::string& flag) {
  lrsq::Weight w{int_list(text, flag, true)};
  if (static_cast<int>(w.rank()) != n) throw UsageError(flag, "weight '" + text + "' must have --n entries");
  if (!w.is_dominant()) throw UsageError(flag, "weight '" + text + "' is not dominant");
  return w;
}

Outcome run_hesselink(const Options& o) {
  const int n = need_int(o.n, "--n", 1, lrsq::kMaxWeylRank);
  const int dmax = need_int(o.dmax, "--dmax", 0, 40);
  require(!o.lambda.empty(), "--lambda");
  const auto w = weight_flag(o.lambda, n, "--lambda");
  if (w.sum() != 0)
    std::cerr << "lrsq: warning: --lambda: coordinate sum " << w.sum() << " is nonzero; the multiplicity is 0\n";
  const auto g = lrsq::hesselink_multiplicity(n, w, dmax);
  return {"hesselink",
          {{"n", std::to_string(n)}, {"lambda", o.lambda}, {"dmax", std::to_string(dmax)}},
          lrsq::to_json(g),
          std::nullopt,
          graded_table(g)};
}

Outcome run_spherical(const Options& o) {
  const int n = need_int(o.n, "--n", 1, lrsq::kMaxWeylRank);
  const int dmax = need_int(o.dmax, "--dmax", 0, 40);
  require(!o.weights.empty(), "--weights");
  std::ifstream in(o.weights);
  if (!in) throw UsageError("--weights", "cannot open '" + o.weights + "'");
  std::vector<lrsq::Weight> set;
  std::string line;
  while (std::getline(in, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }), line.end());
    if (line.empty() || line[0] == '#') continue;
    set.push_back(weight_flag(line, n, "--weights"));
  }
  const auto g = lrsq::spherical_hilbert(n, set, dmax);
  return {"spherical", {{"n", std::to_string(n)}, {"weights", o.weights}, {"dmax", std::to_string(dmax)}}, lrsq::to_json(g),
          std::nullopt, graded_table(g)};
}

Outcome run_necklace(const Options& o) {
  const int m = need_int(o.m, "--m", 1, 1000);
  const int K = need_int(o.degree, "--degree", 1, 200);
  std::vector<std::vector<std::string>> rows{{"k", "N_k"}};
  Json values = Json::array();
  for (int k = 1; k <= K; ++k) {
    const BigInt v = lrsq::necklace_count(k, m);
    rows.push_back({std::to_string(k), lrsq::to_decimal(v)});
    values.push_back(lrsq::to_decimal(v));
  }
  return {"necklace", {{"m", std::to_string(m)}, {"degree", std::to_string(K)}}, values, std::nullopt, render_rows(rows)};
}

Outcome run_orbits(const Options& o) {
  require(!o.composition.empty(), "--composition");
  const auto c = int_list(o.composition, "--composition", false);
  const bool brute = o.brute || o.both;
  const bool viaLr = o.lr || o.both || !o.brute;
  if (brute && list_sum(c) > lrsq::kMaxOrbitDegree)
    throw UsageError("--composition", "brute force needs total <= " + std::to_string(lrsq::kMaxOrbitDegree));
  Json payload = Json::object();
  std::vector<std::vector<std::string>> rows;
  std::optional<BigInt> b, l;
  if (brute) {
    b = lrsq::orbit_count_brute(c);
    payload["brute"] = lrsq::to_decimal(*b);
    rows.push_back({"brute", lrsq::to_decimal(*b)});
  }
  if (viaLr) {
    l = lrsq::orbit_count_lr(c);
    payload["lr"] = lrsq::to_decimal(*l);
    rows.push_back({"lr", lrsq::to_decimal(*l)});
  }
  std::optional<bool> verified;
  std::string table = render_rows(rows);
  if (b && l) {
    verified = *b == *l;
    payload["equal"] = *verified;
    table += std::string("equal: ") + (*verified ? "true" : "false") + "\n";
  }
  return {"orbits", {{"composition", o.composition}}, payload, verified, table};
}

Outcome run_glq(const Options& o) {
  const int q = need_int(o.q, "--q", 2, 1000);
  if (!o.brute) {
    const int D = o.degree == -1 ? 8 : need_int(o.degree, "--degree", 0, 30);
    return series_outcome("glq", {{"q", std::to_string(q)}, {"degree", std::to_string(D)}}, lrsq::glq_class_series(q, D));
  }
  const int m = need_int(o.m, "--m", 1, 3);
  if (q > 5) throw UsageError("--q", "brute force needs q <= 5");
  bool prime = true;
  for (int p = 2; p * p <= q; ++p) prime = prime && q % p;
  if (!prime) throw UsageError("--q", std::to_string(q) + " is not prime");
  long long cells = 1;
  for (int i = 0; i < m * m; ++i) cells *= q;
  if (cells > 19683) throw UsageError("--m", "brute force needs q^(m^2) <= 3^9 = 19683");
  const BigInt brute = lrsq::glq_class_count_brute(m, q, o.threads);
  const BigInt series = lrsq::glq_class_series(q, m).coefficient(m);
  const bool ok = brute == series;
  return {"glq",
          {{"q", std::to_string(q)}, {"m", std::to_string(m)}},
          Json{{"brute", lrsq::to_decimal(brute)}, {"series", lrsq::to_decimal(series)}, {"equal", ok}},
          ok,
          render_rows({{"brute", lrsq::to_decimal(brute)}, {"series", lrsq::to_decimal(series)}}) + "equal: " +
              (ok ? "true" : "false") + "\n"};
}

void emit(const Outcome& out, bool json) {
  if (!json) {
    std::cout << out.table;
    return;
  }
  Json j{{"verb", out.verb}, {"parameters", out.parameters}, {"payload", out.payload}};
  if (out.verified) j["verified"] = *out.verified;
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Littlewood-Richardson coefficients and the Hilbert series identities built on them"};
  app.require_subcommand(1);
  Options o;
  std::function<Outcome()> action;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  };
  auto add_m = [&](CLI::App* s) { s->add_option("--m", o.m, "number of matrices / colors / blocks"); };
  auto add_n = [&](CLI::App* s) { s->add_option("--n", o.n, "matrix size or rank"); };
  auto add_q = [&](CLI::App* s) { s->add_option("--q", o.q, "field size"); };
  auto add_degree = [&](CLI::App* s) { s->add_option("--degree", o.degree, "truncation degree"); };

  auto* lr = app.add_subcommand("lr", "LR coefficient c^lambda_{mu,nu}, or c^lambda of a tuple via --mus");
  lr->add_option("--lambda", o.lambda);
  lr->add_option("--mu", o.mu);
  lr->add_option("--nu", o.nu);
  lr->add_option("--mus", o.mus, "';'-separated partitions");
  common(lr);
  lr->callback([&] { action = [&] { return run_lr(o); }; });

  auto* kostka = app.add_subcommand("kostka", "Kostka number K_{lambda,nu}");
  kostka->add_option("--lambda", o.lambda);
  kostka->add_option("--nu", o.nu);
  common(kostka);
  kostka->callback([&] { action = [&] { return run_kostka(o); }; });

  auto* lrsum = app.add_subcommand("lrsum", "sum of squared LR coefficients");
  add_m(lrsum);
  add_n(lrsum);
  add_degree(lrsum);
  lrsum->add_option("--profile", o.profile, "degree profile d_1,...,d_m");
  common(lrsum);
  lrsum->callback([&] { action = [&] { return run_lrsum(o); }; });

  auto nested = [&](const std::string& name, const std::string& desc, const std::vector<std::string>& kinds,
                    std::function<Outcome(const std::string&, const Options&)> run, bool with_brute_opts) {
    auto* parent = app.add_subcommand(name, desc);
    parent->require_subcommand(1);
    for (const auto& kind : kinds) {
      auto* s = parent->add_subcommand(kind);
      add_m(s);
      add_n(s);
      add_q(s);
      add_degree(s);
      s->add_option("--composition", o.composition);
      s->add_option("--profile", o.profile);
      if (with_brute_opts) s->add_flag("--both", o.both, "also run the independent check");
      common(s);
      s->callback([&, kind, run] { action = [&, kind, run] { return run(kind, o); }; });
    }
  };
  nested("series", "truncated power series",
         {"main-formula", "stable-block", "harmonic", "eta", "glq", "partitions-by-length"}, run_series, false);
  nested("verify", "check an identity", {"main-formula", "bigraded", "eta-glq", "orbit", "block-stable"}, run_verify, false);
  nested("dim", "invariant dimensions", {"invariants", "block", "harmonic"}, run_dim, true);

  auto* eta = app.add_subcommand("eta", "eta_m(t) series");
  add_m(eta);
  add_degree(eta);
  common(eta);
  eta->callback([&] { action = [&] { return run_series("eta", o); }; });

  auto* hess = app.add_subcommand("hesselink", "graded multiplicity m_lambda(t) in the harmonics");
  add_n(hess);
  hess->add_option("--lambda", o.lambda, "dominant weight, comma-separated");
  hess->add_option("--dmax", o.dmax, "largest degree");
  common(hess);
  hess->callback([&] { action = [&] { return run_hesselink(o); }; });

  auto* sph = app.add_subcommand("spherical", "sum of m_lambda(t) over a weight set");
  add_n(sph);
  sph->add_option("--weights", o.weights, "file with one weight per line");
  sph->add_option("--dmax", o.dmax, "largest degree");
  common(sph);
  sph->callback([&] { action = [&] { return run_spherical(o); }; });

  auto* neck = app.add_subcommand("necklace", "necklace counts N_1(m) .. N_degree(m)");
  add_m(neck);
  add_degree(neck);
  common(neck);
  neck->callback([&] { action = [&] { return run_necklace(o); }; });

  auto* orbits = app.add_subcommand("orbits", "conjugation orbits of a Young subgroup on S_d");
  orbits->add_option("--composition", o.composition);
  auto* fb = orbits->add_flag("--brute", o.brute, "union-find over all permutations");
  auto* fl = orbits->add_flag("--lr", o.lr, "LR-square sum (default)");
  auto* fboth = orbits->add_flag("--both", o.both, "compare both");
  fb->excludes(fl)->excludes(fboth);
  fl->excludes(fboth);
  common(orbits);
  orbits->callback([&] { action = [&] { return run_orbits(o); }; });

  auto* glq = app.add_subcommand("glq", "conjugacy classes of GL_m(q)");
  add_q(glq);
  add_m(glq);
  add_degree(glq);
  glq->add_flag("--brute", o.brute, "Burnside count for one m");
  common(glq);
  glq->callback([&] { action = [&] { return run_glq(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "lrsq: error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Outcome out = action();
    emit(out, o.json);
    return out.verified && !*out.verified ? 1 : 0;
  } catch (const UsageError& e) {
    std::cerr << "lrsq: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "lrsq: error: " << e.what() << "\n";
    return 2;
  }
}
