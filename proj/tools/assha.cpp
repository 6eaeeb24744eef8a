/*
   Copyright 2026 The assha Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end: curve reports, L-polynomials, oracle verification,
// Sha orders, angle statistics and sweeps over (gamma, a).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "assha/assha.hpp"

namespace {

using namespace assha;

struct RunConfig {
  std::string command;
  std::uint32_t p = 3;
  unsigned f = 1;
  std::vector<std::uint32_t> modulus;
  std::string gamma = "1";
  std::string a = "1";
  std::optional<unsigned> n_max;
  double budget = 1e9;
  unsigned workers = 1;
  std::string format = "json";
  std::string out;
  long inject_fault = -1;
  std::size_t rh_max_degree = 500;
  std::size_t expand_max_degree = 2000;
};

/// Configuration problems; mapped to exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_config_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonPrimeP:
    case ErrorKind::EvenCharacteristic:
    case ErrorKind::ReducibleModulus:
    case ErrorKind::ZeroGamma:
    case ErrorKind::InvalidArgument:
    case ErrorKind::BudgetExceeded:
      return true;
    default:
      return false;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

unsigned parse_unsigned(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse " + what + " from '" + s + "'");
  }
}

std::vector<unsigned> parse_levels(const std::string& s) {
  std::vector<unsigned> out;
  for (const auto& tok : split(s, ',')) {
    const auto dots = tok.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_unsigned(tok, "--a"));
    } else {
      const unsigned lo = parse_unsigned(tok.substr(0, dots), "--a");
      const unsigned hi = parse_unsigned(tok.substr(dots + 2), "--a");
      if (lo > hi) throw ConfigError("empty range in --a");
      for (unsigned x = lo; x <= hi; ++x) out.push_back(x);
    }
  }
  if (out.empty()) throw ConfigError("--a is empty");
  for (unsigned x : out) {
    if (x < 1) throw ConfigError("levels must be >= 1");
  }
  return out;
}

/// "all", or a comma list of element indices or colon-separated coefficient
/// vectors (lowest degree first).
std::vector<Elem> parse_gammas(const std::string& s, const GaloisField& F) {
  std::vector<Elem> out;
  if (s == "all") {
    for (std::uint32_t i = 1; i < F.size(); ++i) out.push_back(Elem{i});
    return out;
  }
  for (const auto& tok : split(s, ',')) {
    Elem g{};
    if (tok.find(':') != std::string::npos) {
      std::vector<std::uint32_t> c;
      for (const auto& d : split(tok, ':')) {
        const unsigned v = parse_unsigned(d, "--gamma");
        if (v >= F.characteristic()) throw ConfigError("gamma coefficient out of range: " + tok);
        c.push_back(v);
      }
      if (c.size() > F.degree()) throw ConfigError("gamma has too many coefficients: " + tok);
      g = F.from_coeffs(c);
    } else {
      const unsigned v = parse_unsigned(tok, "--gamma");
      if (v >= F.size()) throw ConfigError("gamma index out of range: " + tok);
      g = Elem{v};
    }
    if (g.is_zero()) throw ConfigError("gamma must be nonzero");
    out.push_back(g);
  }
  if (out.empty()) throw ConfigError("--gamma is empty");
  return out;
}

/// Collects results, CSV rows and checks for one run.
class Run {
 public:
  explicit Run(const RunConfig& cfg) : cfg_(cfg) {}

  Budget budget() const {
    Budget b;
    b.max_operations = static_cast<std::uint64_t>(cfg_.budget);
    return b;
  }
  const RunConfig& cfg() const { return cfg_; }

  void check(const CurveParams& c, const std::string& name, bool ok, const std::string& detail = "") {
    json j = curve_key(c);
    j.update(to_json(Check{name, ok, detail}));
    checks_.push_back(j);
    if (!ok) failures_.push_back(j);
  }
  void result(json j) { results_.push_back(std::move(j)); }
  void header(std::vector<std::string> cols) {
    if (csv_.empty()) csv_ = csv_row(cols);
  }
  void row(const std::vector<std::string>& fields) { csv_ += csv_row(fields); }

  bool ok() const { return failures_.empty(); }

  /// Invariant violation raised by the library.
  void fail_with(const CurveParams& c, const Error& e) {
    json j = curve_key(c);
    j.update(to_json(Check{to_string(e.kind()), false, e.what()}));
    checks_.push_back(j);
    failures_.push_back(j);
  }

  std::string document() const {
    if (cfg_.format == "csv") return csv_;
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = cfg_.command;
    doc["config"] = config_json();
    doc["status"] = ok() ? "ok" : "failure";
    doc["results"] = results_;
    doc["checks"] = checks_;
    return doc.dump(2) + "\n";
  }

  std::string failure_record() const {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = cfg_.command;
    doc["status"] = "failure";
    doc["violated"] = failures_;
    return doc.dump() + "\n";
  }

 private:
  json config_json() const {
    json j;
    j["p"] = cfg_.p;
    j["f"] = cfg_.f;
    if (!cfg_.modulus.empty()) j["modulus"] = cfg_.modulus;
    j["gamma"] = cfg_.gamma;
    j["a"] = cfg_.a;
    if (cfg_.n_max) j["n_max"] = *cfg_.n_max;
    j["budget"] = static_cast<std::uint64_t>(cfg_.budget);
    return j;
  }

  const RunConfig& cfg_;
  json results_ = json::array();
  json checks_ = json::array();
  json failures_ = json::array();
  std::string csv_;
};

LPolynomial closed_form(const CurveParams& c, Run& run) {
  LPolynomial L = closed_form_lpolynomial(c, {}, run.budget(), run.cfg().workers);
  const long k = run.cfg().inject_fault;
  if (k >= 0 && static_cast<std::size_t>(k) < L.coeffs.size()) L.coeffs[static_cast<std::size_t>(k)] += 1;
  return L;
}

/// Structural checks on an expanded L-polynomial; returns the sign or 0.
int check_lpolynomial(const CurveParams& c, const LPolynomial& L, Run& run) {
  const std::size_t b = 2 * (c.big_q() - 1);
  run.check(c, "degree", L.degree() == b, "deg L = " + std::to_string(L.degree()));
  run.check(c, "constant-term", L.coeff(0) == 1);
  int sign = 0;
  try {
    sign = functional_equation_sign(L);
    run.check(c, "functional-equation", true, "sign " + std::to_string(sign));
  } catch (const Error& e) {
    run.check(c, "functional-equation", false, e.what());
  }
  const NewtonPolygon np = newton_polygon(L, c.p(), c.f());
  const NewtonPolygon expected{{{Fraction(1, 2), b / 2}, {Fraction(3, 2), b / 2}}};
  run.check(c, "newton-slopes", np == expected);
  run.check(c, "non-vanishing", evaluate_at_inverse_q(L) != 0);
  return sign;
}

void cmd_invariants(const CurveParams& c, Run& run) {
  const CurveInvariants inv = curve_invariants(c);
  const PlaceSet places = places_P(*c.tower, c.a, run.budget());
  const auto core = discriminant_core(c);
  const PolyRing<GaloisField> R(c.field());
  const bool squarefree = R.is_squarefree(core);
  run.check(c, "squarefree-discriminant", squarefree && core.degree() == static_cast<long>(2 * c.big_q()));
  run.check(c, "place-degree-sum", places.total_degree() == c.big_q() - 1);
  run.check(c, "height-identity", Fraction(12) * inv.logq_H == Fraction(6 * static_cast<std::int64_t>(c.big_q()) + 6));
  std::size_t torsion = 0;
  try {
    torsion = torsion_structure(c).size();
  } catch (const Error&) {
  }
  run.check(c, "torsion", torsion == 2);
  run.check(c, "isogeny-identity", isogeny_identity_check(c));

  json j = curve_key(c);
  j["j_num_degree"] = inv.j_num.degree();
  j["j_den_degree"] = inv.j_den.degree();
  j["disc_degree"] = inv.disc.degree();
  j["logq_H"] = inv.logq_H.str();
  j["logq_N"] = inv.logq_N;
  j["tamagawa"] = inv.tamagawa;
  j["b"] = inv.b_degree;
  j["torsion_order"] = inv.torsion_order;
  j["places"] = places.count();
  j["place_degree_sum"] = places.total_degree();
  run.result(j);
  run.header({"q", "gamma", "a", "places", "place_degree_sum", "disc_degree", "squarefree", "logq_H", "logq_N",
              "tamagawa", "b", "torsion_order"});
  run.row({std::to_string(c.q()), element_string(c.field(), c.gamma), std::to_string(c.a),
           std::to_string(places.count()), std::to_string(places.total_degree()), std::to_string(inv.disc.degree()),
           squarefree ? "1" : "0", inv.logq_H.str(), std::to_string(inv.logq_N), std::to_string(inv.tamagawa),
           std::to_string(inv.b_degree), std::to_string(inv.torsion_order)});
}

void cmd_lpoly(const CurveParams& c, Run& run) {
  const LPolynomial L = closed_form(c, run);
  const int sign = check_lpolynomial(c, L, run);
  json j = lpolynomial_json(c, L, sign, newton_polygon(L, c.p(), c.f()));
  if (L.degree() <= run.cfg().rh_max_degree) {
    const auto rh = rh_check(L, run.cfg().rh_max_degree);
    run.check(c, "riemann-hypothesis", rh.max_deviation < 1e-9, "max deviation " + num(rh.max_deviation));
    j["rh_deviation"] = rh.max_deviation;
  }
  run.result(j);
  run.header({"q", "gamma", "a", "k", "c_k"});
  for (std::size_t k = 0; k < L.coeffs.size(); ++k) {
    run.row({std::to_string(c.q()), element_string(c.field(), c.gamma), std::to_string(c.a), std::to_string(k),
             L.coeffs[k].str()});
  }
}

void cmd_verify(const CurveParams& c, Run& run) {
  const LPolynomial L = closed_form(c, run);
  const std::size_t b = L.degree();
  const unsigned n = run.cfg().n_max.value_or(default_n_max(c.q(), run.budget()));
  const LogLCoeffs oracle = oracle_log_coeffs(c, n, run.budget(), run.cfg().workers);
  const LogLCoeffs mine = log_coeffs_of(L, n);
  std::size_t agree = 0;
  while (agree < n && oracle.values[agree] == mine.values[agree]) ++agree;
  run.check(c, "oracle-power-sums", agree == n, std::to_string(agree) + " of " + std::to_string(n) + " agree");

  const unsigned d_max = static_cast<unsigned>(std::min<std::size_t>(n, b));
  const auto table = oracle_point_counts(c, d_max, run.budget(), run.cfg().workers);
  const auto series = euler_product_series(table, c.q(), d_max);
  bool euler_ok = true;
  for (unsigned k = 0; k <= d_max; ++k) euler_ok = euler_ok && series[k] == L.coeff(k);
  run.check(c, "euler-product", euler_ok, "through T^" + std::to_string(d_max));

  json j = curve_key(c);
  j["n_max"] = n;
  j["closed_form"] = decimal_strings(mine.values);
  j["oracle"] = decimal_strings(oracle.values);
  bool full = false;
  if (n >= b / 2 + 1 || n >= b) {
    try {
      full = reconstruct_from_power_sums(oracle, b, c.q()) == L;
    } catch (const Error&) {
      full = false;
    }
    run.check(c, "oracle-reconstruction", full, "degree " + std::to_string(b));
  }
  j["full_match"] = full;
  run.result(j);
  run.header({"q", "gamma", "a", "n", "closed_form", "oracle"});
  for (unsigned k = 1; k <= n; ++k) {
    run.row({std::to_string(c.q()), element_string(c.field(), c.gamma), std::to_string(c.a), std::to_string(k),
             mine.at(k).str(), oracle.at(k).str()});
  }
}

void sha_checks(const CurveParams& c, const ShaReport& r, Run& run) {
  run.check(c, "bsd-integrality", r.sha_order > 0);
  run.check(c, "sha-square", r.is_perfect_square);
  run.check(c, "sha-coprime-p", r.gcd_with_p == 1);
  const BigRational expected(-BigInt(c.big_q() - 1), BigInt(2));
  run.check(c, "central-valuation", r.ordp_central == expected, to_fraction_string(r.ordp_central));
}

void cmd_sha(const CurveParams& c, Run& run) {
  const ShaReport r = sha_order(c, run.budget(), run.cfg().workers);
  sha_checks(c, r, run);
  if (2 * (c.big_q() - 1) <= run.cfg().expand_max_degree) {
    const LPolynomial L = closed_form(c, run);
    run.check(c, "sha-consistency", evaluate_at_inverse_q(L) == r.central_value);
  }
  run.result(sha_json(c, r));
  run.header({"q", "gamma", "a", "central_value", "sha_order", "square", "gcd_p", "ordp_central", "brauer_siegel"});
  run.row({std::to_string(c.q()), element_string(c.field(), c.gamma), std::to_string(c.a),
           to_fraction_string(r.central_value), r.sha_order.str(), r.is_perfect_square ? "1" : "0",
           r.gcd_with_p.str(), to_fraction_string(r.ordp_central), num(r.brauer_siegel)});
}

void cmd_angles(const CurveParams& c, Run& run) {
  const AngleSample s = angle_sample(c, 1, run.budget(), run.cfg().workers);
  const DistributionReport r = distribution_report(s, c.p());
  run.check(c, "angle-margins", r.margins.min() > 0 && std::log(r.margins.min()) >= r.log_epsilon_a);
  run.result(distribution_json(c, r));
  run.header({"q", "gamma", "a", "place", "deg", "theta"});
  for (const auto& ang : s.per_place) {
    run.row({std::to_string(c.q()), element_string(c.field(), c.gamma), std::to_string(c.a),
             place_string(ang.place), std::to_string(ang.place.degree), num(ang.theta)});
  }
}

void cmd_sweep(const CurveParams& c, Run& run) {
  const std::size_t b = 2 * (c.big_q() - 1);
  const PlaceSet places = places_P(*c.tower, c.a, run.budget());
  json j = curve_key(c);
  j["places"] = places.count();
  j["b"] = b;
  std::string sign_s, slopes_s, rh_s, oracle_s;
  if (b <= run.cfg().expand_max_degree) {
    const LPolynomial L = closed_form(c, run);
    const int sign = check_lpolynomial(c, L, run);
    const NewtonPolygon np = newton_polygon(L, c.p(), c.f());
    sign_s = std::to_string(sign);
    slopes_s = np.multiplicity_of(Fraction(1, 2)) == b / 2 && np.multiplicity_of(Fraction(3, 2)) == b / 2 ? "1" : "0";
    j["sign"] = sign;
    if (b <= run.cfg().rh_max_degree) {
      const auto rh = rh_check(L, run.cfg().rh_max_degree);
      run.check(c, "riemann-hypothesis", rh.max_deviation < 1e-9, "max deviation " + num(rh.max_deviation));
      rh_s = num(rh.max_deviation);
      j["rh_deviation"] = rh.max_deviation;

      const unsigned n = run.cfg().n_max.value_or(default_n_max(c.q(), run.budget()));
      const bool agree = oracle_log_coeffs(c, n, run.budget(), run.cfg().workers) == log_coeffs_of(L, n);
      run.check(c, "oracle-power-sums", agree, "n <= " + std::to_string(n));
      oracle_s = agree ? "1" : "0";
      j["oracle_ok"] = agree;
    }
  }
  const ShaReport r = sha_order(c, run.budget(), run.cfg().workers);
  sha_checks(c, r, run);
  const AngleSample s = angle_sample(c, 1, run.budget(), run.cfg().workers);
  const DistributionReport d = distribution_report(s, c.p());
  run.check(c, "angle-margins", d.margins.min() > 0 && std::log(d.margins.min()) >= d.log_epsilon_a);
  const double log_L = log_abs(r.central_value);
  j["log_central_value"] = log_L;
  j["log_sha"] = log_abs(r.sha_order);
  j["sha_square"] = r.is_perfect_square;
  j["ordp_central"] = to_fraction_string(r.ordp_central);
  j["brauer_siegel"] = r.brauer_siegel;
  j["ks"] = d.ks_distance;
  j["w_error"] = d.w_error;
  j["moment2"] = d.moments.at(2);
  j["min_margin"] = d.margins.min();
  run.result(j);
  run.header({"q", "gamma", "a", "places", "b", "sign", "slopes_ok", "rh_deviation", "oracle_ok", "log_central_value",
              "log_sha", "sha_square", "gcd_p", "ordp_central", "brauer_siegel", "bs_deviation", "ks", "w_error",
              "moment2", "min_margin"});
  run.row({std::to_string(c.q()), element_string(c.field(), c.gamma), std::to_string(c.a),
           std::to_string(places.count()), std::to_string(b), sign_s, slopes_s, rh_s, oracle_s, num(log_L),
           num(log_abs(r.sha_order)), r.is_perfect_square ? "1" : "0", r.gcd_with_p.str(),
           to_fraction_string(r.ordp_central), num(r.brauer_siegel), num(std::fabs(r.brauer_siegel - 1.0)),
           num(d.ks_distance), num(d.w_error), num(d.moments.at(2)), num(d.margins.min())});
}

int execute(const RunConfig& cfg) {
  std::shared_ptr<const ExtensionTower> tower;
  std::vector<Elem> gammas;
  std::vector<unsigned> levels;
  try {
    if (cfg.budget <= 0) throw ConfigError("--budget must be positive");
    if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("--format must be json or csv");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (!cfg.modulus.empty()) modulus = cfg.modulus;
    tower = std::make_shared<const ExtensionTower>(GaloisField::make(cfg.p, cfg.f, modulus));
    gammas = parse_gammas(cfg.gamma, *tower->base());
    levels = parse_levels(cfg.a);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  Run run(cfg);
  for (unsigned a : levels) {
    for (Elem g : gammas) {
      const CurveParams c(tower, g, a);
      try {
        if (cfg.command == "invariants") cmd_invariants(c, run);
        else if (cfg.command == "lpoly") cmd_lpoly(c, run);
        else if (cfg.command == "verify") cmd_verify(c, run);
        else if (cfg.command == "sha") cmd_sha(c, run);
        else if (cfg.command == "angles") cmd_angles(c, run);
        else if (cfg.command == "sweep") cmd_sweep(c, run);
      } catch (const Error& e) {
        if (is_config_kind(e.kind())) {
          std::cerr << "configuration error: " << e.what() << "\n";
          return 2;
        }
        run.fail_with(c, e);
      }
    }
  }

  const std::string doc = run.document();
  if (cfg.out.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "configuration error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << doc;
  }
  if (!run.ok()) {
    std::cerr << run.failure_record();
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"L-functions, Sha orders and Kloosterman angles of y^2 = x^3 + (t^{q^a} - t) x^2 + gamma x"};
  app.require_subcommand(1, 1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "odd prime characteristic")->capture_default_str();
    sub->add_option("--f", cfg.f, "q = p^f")->capture_default_str();
    sub->add_option("--modulus", cfg.modulus, "monic modulus for F_q, lowest coefficient first")->delimiter(',');
    sub->add_option("--gamma", cfg.gamma, "'all', or comma list of indices or c0:c1:... vectors")
        ->capture_default_str();
    sub->add_option("--a", cfg.a, "level: single value, range lo..hi, or comma list")->capture_default_str();
    sub->add_option("--n-max", cfg.n_max, "oracle depth (default: largest n with q^{2n} <= budget)");
    sub->add_option("--budget", cfg.budget, "operation cap for enumerations")->capture_default_str();
    sub->add_option("--workers", cfg.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json or csv")->capture_default_str();
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--rh-max-degree", cfg.rh_max_degree, "largest degree sent to the root finder")
        ->capture_default_str();
    sub->add_option("--expand-max-degree", cfg.expand_max_degree, "largest degree expanded in sweeps")
        ->capture_default_str();
    sub->add_option("--inject-fault", cfg.inject_fault, "add 1 to this coefficient of the closed form (testing)")
        ->group("");
  };
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"invariants", "curve invariants, reduction and torsion"},
      {"lpoly", "closed-form L-polynomial, sign, slopes, RH"},
      {"verify", "closed form against both brute-force oracles"},
      {"sha", "central value and Sha order"},
      {"angles", "Kloosterman angle statistics"},
      {"sweep", "all of the above over the (gamma, a) grid"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&cfg, n = name] { cfg.command = n; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return execute(cfg);
}
