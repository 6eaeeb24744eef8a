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

// Acceptance runner: one PASS/FAIL line per criterion. With --criterion N only
// that criterion runs; the exit status is nonzero if any selected one fails.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "assha/assha.hpp"

using namespace assha;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct CurveId {
  std::uint32_t p;
  unsigned f;
  std::uint32_t gamma;
  unsigned a;
  auto operator<=>(const CurveId&) const = default;
};

std::string label(const CurveParams& c) {
  return "(q=" + std::to_string(c.q()) + ",g=" + element_string(c.field(), c.gamma) + ",a=" + std::to_string(c.a) +
         ")";
}

/// q in {3, 5, 7, 9} with a up to {6, 3, 2, 2}, every gamma.
std::vector<CurveParams> structural_grid() {
  std::vector<CurveParams> out;
  for (auto [p, f, amax] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
           {3, 1, 6}, {5, 1, 3}, {7, 1, 2}, {3, 2, 2}}) {
    auto tower = std::make_shared<const ExtensionTower>(p, f);
    for (unsigned a = 1; a <= amax; ++a) {
      for (std::uint32_t g = 1; g < tower->q(); ++g) out.emplace_back(tower, Elem{g}, a);
    }
  }
  return out;
}

const LPolynomial& lpoly(const CurveParams& c) {
  static std::map<CurveId, LPolynomial> cache;
  const CurveId id{c.p(), c.f(), c.gamma.index, c.a};
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, closed_form_lpolynomial(c, {}, {}, default_workers())).first;
  return it->second;
}

LPolynomial from_ints(std::initializer_list<long long> v, std::uint64_t q) {
  LPolynomial L;
  L.q = q;
  for (long long x : v) L.coeffs.emplace_back(x);
  return L;
}

/// Collects failures, keeping the first few for the summary line.
struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  Outcome outcome(const std::string& extra = {}) const {
    std::ostringstream s;
    s << checked << " checks";
    if (!extra.empty()) s << ", " << extra;
    if (!failures.empty()) {
      s << "; " << failures.size() << " failed:";
      for (std::size_t i = 0; i < std::min<std::size_t>(failures.size(), 5); ++i) s << " " << failures[i];
    }
    return {failures.empty(), s.str()};
  }
};

Outcome closed_form_vs_full_oracle() {
  Tally t;
  const std::vector<LPolynomial> anchors = {from_ints({1, 0, -15, 0, 81}, 3), from_ints({1, 0, -6, 0, 81}, 3)};
  for (std::uint32_t g = 1; g <= 2; ++g) {
    const auto c = CurveParams::make(3, 1, g, 1);
    const LPolynomial& L = lpoly(c);
    t.expect(L == anchors[g - 1], label(c) + " anchor");
    const auto ps = oracle_log_coeffs(c, 4, {}, default_workers());
    t.expect(reconstruct_from_power_sums(ps, 4, 3) == L, label(c) + " reconstruction");
  }
  return t.outcome();
}

Outcome closed_form_vs_oracle_prefix() {
  Tally t;
  for (auto [p, f, a, n, full] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned, unsigned, bool>>{
           {3, 1, 2, 9, true}, {3, 1, 3, 9, false}, {5, 1, 1, 6, true}, {3, 2, 1, 4, false}}) {
    auto tower = std::make_shared<const ExtensionTower>(p, f);
    t.expect(default_n_max(tower->q()) == n, "default n for q=" + std::to_string(tower->q()));
    for (std::uint32_t g = 1; g < tower->q(); ++g) {
      const CurveParams c(tower, Elem{g}, a);
      const LPolynomial& L = lpoly(c);
      const auto ps = oracle_log_coeffs(c, n, {}, default_workers());
      t.expect(ps == log_coeffs_of(L, n), label(c) + " power sums");
      if (full) t.expect(reconstruct_from_power_sums(ps, L.degree(), c.q()) == L, label(c) + " reconstruction");
    }
  }
  return t.outcome();
}

Outcome degree_and_structure() {
  Tally t;
  std::map<int, std::size_t> signs;
  for (const auto& c : structural_grid()) {
    const LPolynomial& L = lpoly(c);
    t.expect(L.degree() == 2 * (c.big_q() - 1), label(c) + " degree");
    t.expect(L.coeff(0) == 1, label(c) + " constant");
    try {
      ++signs[functional_equation_sign(L)];
    } catch (const Error&) {
      t.expect(false, label(c) + " functional equation");
    }
  }
  std::string rec;
  for (auto [s, n] : signs) rec += (rec.empty() ? "" : " ") + std::string(s > 0 ? "+1" : "-1") + "x" + std::to_string(n);
  return t.outcome("signs " + rec);
}

Outcome riemann_hypothesis() {
  Tally t;
  double worst = 0;
  for (const auto& c : structural_grid()) {
    const LPolynomial& L = lpoly(c);
    if (L.degree() > 500) continue;
    const auto r = rh_check(L, 500);
    worst = std::max(worst, r.max_deviation);
    t.expect(r.max_deviation <= 1e-9, label(c));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation %.3g", worst);
  return t.outcome(buf);
}

Outcome newton_slopes() {
  Tally t;
  for (const auto& c : structural_grid()) {
    const LPolynomial& L = lpoly(c);
    const std::uint64_t h = L.degree() / 2;
    const NewtonPolygon expected{{{Fraction(1, 2), h}, {Fraction(3, 2), h}}};
    t.expect(newton_polygon(L, c.p(), c.f()) == expected, label(c));
  }
  return t.outcome();
}

Outcome bsd_suite() {
  Tally t;
  for (const auto& c : structural_grid()) {
    try {
      const ShaReport r = sha_order(c, {}, default_workers());
      const auto Q = static_cast<long long>(c.big_q());
      t.expect(r.sha_order > 0, label(c) + " positive");
      t.expect(r.is_perfect_square, label(c) + " square");
      t.expect(r.gcd_with_p == 1, label(c) + " coprime");
      t.expect(r.ordp_central == BigRational(BigInt(-(Q - 1)), BigInt(2)), label(c) + " valuation");
    } catch (const Error& e) {
      t.expect(false, label(c) + " " + e.what());
    }
  }
  t.expect(sha_order(CurveParams::make(3, 1, 1, 1)).sha_order == 1, "anchor |Sha| = 1");
  t.expect(sha_order(CurveParams::make(3, 1, 2, 1)).sha_order == 4, "anchor |Sha| = 4");
  return t.outcome();
}

Outcome brauer_siegel_trend() {
  Tally t;
  std::ostringstream vals;
  vals.precision(4);
  for (std::uint32_t g = 1; g <= 2; ++g) {
    std::vector<double> ratio(9);
    vals << (g == 1 ? "" : "; ") << "g=" << g << ":";
    for (unsigned a = 1; a <= 8; ++a) {
      const ShaReport r = sha_order(CurveParams::make(3, 1, g, a), {}, default_workers());
      ratio[a] = r.brauer_siegel;
      vals << " " << r.brauer_siegel;
      t.expect(std::fabs(r.brauer_siegel - r.brauer_siegel_decomposed) <= 1e-9,
               "g=" + std::to_string(g) + " a=" + std::to_string(a) + " decomposition");
    }
    const double envelope = std::fabs(ratio[2] - 1);
    for (unsigned a = 4; a <= 8; ++a) {
      std::ostringstream what;
      what.precision(4);
      what << "g=" << g << " a=" << a << " |r-1|=" << std::fabs(ratio[a] - 1) << ">" << envelope;
      t.expect(std::fabs(ratio[a] - 1) <= envelope, what.str());
    }
  }
  return t.outcome("ratios " + vals.str());
}

Outcome distribution_suite() {
  Tally t;
  std::ostringstream vals;
  vals.precision(4);
  for (std::uint32_t g = 1; g <= 2; ++g) {
    DistributionReport r3, r8;
    for (unsigned a = 3; a <= 8; ++a) {
      const auto c = CurveParams::make(3, 1, g, a);
      try {
        const auto r = distribution_report(angle_sample(c, 1, {}, default_workers()), 3);
        t.expect(r.margins.min() >= std::pow(3.0, -14.0 * a), label(c) + " margin");
        if (a == 3) r3 = r;
        if (a == 8) r8 = r;
      } catch (const Error& e) {
        t.expect(false, label(c) + " " + e.what());
      }
    }
    for (unsigned a = 1; a < 3; ++a) {
      const auto c = CurveParams::make(3, 1, g, a);
      try {
        margin_report(angle_sample(c), 3);
        t.expect(true, "");
      } catch (const Error& e) {
        t.expect(false, label(c) + " " + e.what());
      }
    }
    const std::string gs = "g=" + std::to_string(g);
    t.expect(r8.ks_distance < r3.ks_distance, gs + " KS");
    t.expect(r8.w_error < r3.w_error, gs + " W");
    t.expect(std::fabs(r8.moments[2] + 0.5) <= 0.1, gs + " second moment");
    vals << (g == 1 ? "" : "; ") << gs << " KS " << r3.ks_distance << "->" << r8.ks_distance << " W " << r3.w_error
         << "->" << r8.w_error << " m2 " << r8.moments[2];
  }
  return t.outcome(vals.str());
}

Outcome identity_suite() {
  Tally t;
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {5, 1}, {3, 2}}) {
    const ExtensionTower tower(p, f);
    const std::string qs = "q=" + std::to_string(tower.q());
    for (unsigned d = 1; d <= 3; ++d) {
      for (const auto& v : irreducible_places(tower, d)) {
        if (is_t(v)) continue;
        const CycInt g0 = gauss_sum(tower, v).value;
        for (std::uint32_t g = 1; g < tower.q(); ++g) {
          t.expect(salie_check(tower, v, Elem{g}), qs + " Salie");
          const CycInt k0 = kloosterman_sum(tower, v, Elem{g}).value;
          for (Elem beta : conjugates(tower, d, v.beta)) {
            Place w = v;
            w.beta = beta;
            t.expect(kloosterman_sum(tower, w, Elem{g}).value == k0, qs + " Kl representative");
            if (g == 1) t.expect(gauss_sum(tower, w).value == g0, qs + " Gauss representative");
          }
        }
      }
    }
  }

  const ExtensionTower t3(3, 1);
  for (unsigned d = 1; d <= 4; ++d) {
    for (const auto& v : irreducible_places(t3, d)) {
      if (is_t(v)) continue;
      const CycInt g = gauss_sum(t3, v).value;
      for (unsigned m = 2; m * d <= 8; ++m) {
        const auto big = t3.level(m * d);
        const Elem mult = t3.lift(d, m * d).map(v.beta);
        t.expect(gauss_sum_over(*big, mult) == g.pow(m), "Hasse-Davenport Gauss d=" + std::to_string(d));
        for (std::uint32_t gm = 1; gm < 3; ++gm) {
          const auto kv = kloosterman_sum(t3, v, Elem{gm});
          t.expect(kloosterman_sum_over(*big, mult, t3.embed(Elem{gm}, m * d)) == kloosterman_power_sum(kv, m),
                   "Hasse-Davenport Kl d=" + std::to_string(d));
        }
      }
    }
  }

  for (auto [p, f, a] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
           {3, 1, 1}, {3, 1, 2}, {3, 1, 3}, {5, 1, 1}, {5, 1, 2}, {7, 1, 1}, {3, 2, 1}}) {
    auto tower = std::make_shared<const ExtensionTower>(p, f);
    for (std::uint32_t g = 1; g < tower->q(); ++g) {
      const CurveParams c(tower, Elem{g}, a);
      for (std::uint32_t ch = 2; ch < tower->q(); ++ch) {
        t.expect(closed_form_lpolynomial(c, AdditiveCharacter{Elem{ch}}) == lpoly(c), label(c) + " character");
      }
    }
  }

  for (std::uint32_t p : {3U, 5U, 7U}) t.expect(isogeny_identity_symbolic(p), "isogeny p=" + std::to_string(p));
  for (const auto& c : structural_grid()) {
    if (c.a == 1) t.expect(isogeny_identity_check(c), label(c) + " isogeny");
  }
  return t.outcome();
}

Outcome structural_invariants() {
  Tally t;
  for (const auto& c : structural_grid()) {
    const auto Q = static_cast<std::int64_t>(c.big_q());
    t.expect(places_P(*c.tower, c.a).total_degree() == c.big_q() - 1, label(c) + " place degrees");
    try {
      const auto bad = bad_places_report(c);
      t.expect(bad.squarefree && discriminant_core(c).degree() == 2 * Q, label(c) + " discriminant");
      const auto pts = torsion_structure(c);
      t.expect(pts.size() == 2 && pts[0].at_infinity && pts[1].x.is_zero() && pts[1].y.is_zero(), label(c) + " torsion");
      const auto inv = curve_invariants(c);
      t.expect(Fraction(12) * inv.logq_H == Fraction(2 * Q + 4 * Q + 6), label(c) + " height");
    } catch (const Error& e) {
      t.expect(false, label(c) + " " + e.what());
    }
  }
  return t.outcome();
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"closed form equals full oracle reconstruction", closed_form_vs_full_oracle},
      {"closed form agrees with oracle power sums", closed_form_vs_oracle_prefix},
      {"degree, constant term, functional equation", degree_and_structure},
      {"roots of L(T/q) on the unit circle", riemann_hypothesis},
      {"Newton polygon slopes 1/2 and 3/2", newton_slopes},
      {"Sha integrality, squareness, coprimality, valuation", bsd_suite},
      {"Brauer-Siegel envelope and decomposition", brauer_siegel_trend},
      {"angle distribution convergence and margins", distribution_suite},
      {"character sum and isogeny identities", identity_suite},
      {"place, discriminant, torsion and height invariants", structural_invariants},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria runner"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria()[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s  %s: %s [%.2fs]\n", i + 1, o.ok ? "PASS" : "FAIL", criteria()[i].title,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
