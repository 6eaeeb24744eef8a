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

#ifndef ASSHA_LFUNCTION_HPP
#define ASSHA_LFUNCTION_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "charsums.hpp"
#include "curve.hpp"
#include "parallel.hpp"
#include "places.hpp"
#include "roots.hpp"

namespace assha {

/// L(T) = sum_k coeffs[k] T^k with coeffs[0] = 1.
struct LPolynomial {
  std::vector<BigInt> coeffs;
  std::uint64_t q = 0;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  BigInt coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : BigInt(0); }
  friend bool operator==(const LPolynomial&, const LPolynomial&) = default;
};

/// Power sums c_n = sum_i alpha_i^n of the inverse roots, so that
/// log L(T) = -sum_n c_n T^n / n. values[n - 1] holds c_n.
struct LogLCoeffs {
  std::vector<BigInt> values;

  std::size_t n_max() const { return values.size(); }
  const BigInt& at(std::size_t n) const { return values.at(n - 1); }
  friend bool operator==(const LogLCoeffs&, const LogLCoeffs&) = default;
};

struct SlopeSegment {
  Fraction slope;
  std::uint64_t multiplicity = 0;
  friend bool operator==(const SlopeSegment&, const SlopeSegment&) = default;
};

/// Slopes of the lower hull, normalised so that ord(q) = 1.
struct NewtonPolygon {
  std::vector<SlopeSegment> segments;

  Fraction total() const {
    Fraction s(0);
    for (const auto& seg : segments) s = s + seg.slope * Fraction(static_cast<std::int64_t>(seg.multiplicity));
    return s;
  }
  std::uint64_t multiplicity_of(const Fraction& s) const {
    for (const auto& seg : segments) {
      if (seg.slope == s) return seg.multiplicity;
    }
    return 0;
  }
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

/// Per-place ingredients of the product formula.
struct PlaceFactor {
  Place place;
  CycInt gauss;
  CycInt kloosterman;
};

/// Largest n with q^{2n} <= max_operations.
inline unsigned default_n_max(std::uint64_t q, const Budget& budget = {}) {
  unsigned n = 0;
  double cost = 1;
  const double qq = static_cast<double>(q) * static_cast<double>(q);
  while (cost * qq <= static_cast<double>(budget.max_operations)) {
    cost *= qq;
    ++n;
  }
  return n;
}

inline std::vector<PlaceFactor> place_factors(const CurveParams& c, const AdditiveCharacter& chi = {},
                                              const Budget& budget = {}, unsigned workers = 1) {
  const PlaceSet set = places_P(*c.tower, c.a, budget);
  return parallel_map(set.count(), workers, [&](std::size_t i) {
    const Place& v = set.places[i];
    return PlaceFactor{v, gauss_sum(*c.tower, v, chi, budget).value,
                       kloosterman_sum(*c.tower, v, c.gamma, chi, budget).value};
  });
}

/// Expands prod_v (1 - g Kl T^d + g^2 q^d T^{2d}) in Z[zeta_p][T] and
/// requires every coefficient of the result to be rational.
inline LPolynomial expand_product(const std::vector<PlaceFactor>& factors, std::uint64_t q) {
  if (factors.empty()) return {{BigInt(1)}, q};
  const std::uint32_t p = factors.front().gauss.prime();
  std::size_t b = 0;
  for (const auto& f : factors) b += 2 * f.place.degree;
  std::vector<CycInt> poly(b + 1, CycInt(p));
  poly[0] = CycInt(p, BigInt(1));
  std::size_t cur = 0;
  for (const auto& f : factors) {
    const std::size_t d = f.place.degree;
    const CycInt lin = f.gauss * f.kloosterman;
    const CycInt quad = f.gauss * f.gauss * bigpow(q, d);
    cur += 2 * d;
    for (std::size_t i = cur; i >= d; --i) {
      if (!poly[i - d].is_zero()) poly[i] -= lin * poly[i - d];
      if (i >= 2 * d && !poly[i - 2 * d].is_zero()) poly[i] += quad * poly[i - 2 * d];
      if (i == d) break;
    }
  }
  LPolynomial out;
  out.q = q;
  out.coeffs.reserve(b + 1);
  for (std::size_t k = 0; k <= b; ++k) {
    out.coeffs.push_back(poly[k].require_rational("L-polynomial coefficient " + std::to_string(k)));
  }
  return out;
}

/// L(E_{gamma,a}, T) from the product formula over P_q(a).
inline LPolynomial closed_form_lpolynomial(const CurveParams& c, const AdditiveCharacter& chi = {},
                                           const Budget& budget = {}, unsigned workers = 1) {
  LPolynomial L = expand_product(place_factors(c, chi, budget, workers), c.q());
  const std::uint64_t b = 2 * (c.big_q() - 1);
  if (L.degree() != b || L.coeffs.back() == 0) {
    throw Error(ErrorKind::NotRational, "L-polynomial has degree " + std::to_string(L.degree()) + ", expected " +
                                            std::to_string(b));
  }
  return L;
}

namespace detail {

/// sum_x lambda(x^3 + z x^2 + gamma x) = sum_x lambda(x) lambda(x^2 + gamma + z x),
/// with x^2 + gamma tabulated in x2_plus_g.
inline std::int64_t cubic_character_sum(const GaloisField& F, Elem z, const std::vector<Elem>& x2_plus_g) {
  std::int64_t s = 0;
  for (std::uint32_t idx = 1; idx < F.size(); ++idx) {
    const Elem x{idx};
    const Elem quad = F.add(x2_plus_g[idx], F.mul(z, x));
    const int chi = F.quadratic_character(quad);
    if (chi != 0) s += chi * F.quadratic_character(x);
  }
  return s;
}

inline std::vector<Elem> x2_plus(const GaloisField& F, Elem g) {
  std::vector<Elem> out(F.size());
  for (std::uint32_t idx = 0; idx < F.size(); ++idx) out[idx] = F.add(F.mul(Elem{idx}, Elem{idx}), g);
  return out;
}

}  // namespace detail

/// c_n = sum_{tau, x in F_{q^n}} lambda(x^3 + (tau^{q^a} - tau) x^2 + gamma x)
/// for 1 <= n <= n_max, by direct summation.
inline LogLCoeffs oracle_log_coeffs(const CurveParams& c, unsigned n_max, const Budget& budget = {},
                                    unsigned workers = 1) {
  const double q = static_cast<double>(c.q());
  budget.require(std::pow(q, 2.0 * n_max), "double-sum oracle");
  LogLCoeffs out;
  const std::uint64_t Q = c.big_q();
  for (unsigned n = 1; n <= n_max; ++n) {
    const FieldPtr F = c.tower->level(n);
    const Elem gamma = c.tower->embed(c.gamma, n);
    // tally z = wp(tau); the inner sum depends on z only through its
    // Frobenius orbit over F_q, since gamma lies in F_q
    std::vector<std::uint64_t> count(F->size(), 0);
    for (std::uint32_t idx = 0; idx < F->size(); ++idx) {
      const Elem tau{idx};
      ++count[F->sub(F->pow(tau, Q), tau).index];
    }
    const unsigned fq = c.f();
    std::vector<std::uint32_t> reps;
    std::vector<std::uint64_t> orbit_weight;
    std::vector<bool> seen(F->size(), false);
    for (std::uint32_t idx = 0; idx < F->size(); ++idx) {
      if (seen[idx] || count[idx] == 0) continue;
      std::uint64_t w = 0;
      Elem z{idx};
      do {
        seen[z.index] = true;
        w += count[z.index];
        z = F->frobenius(z, fq);
      } while (z.index != idx);
      reps.push_back(idx);
      orbit_weight.push_back(w);
    }
    const std::vector<Elem> x2g = detail::x2_plus(*F, gamma);
    const auto sums = parallel_map(reps.size(), workers, [&](std::size_t i) {
      return detail::cubic_character_sum(*F, Elem{reps[i]}, x2g);
    });
    BigInt total = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) total += BigInt(sums[i]) * BigInt(orbit_weight[i]);
    out.values.push_back(total);
  }
  return out;
}

/// a_v for every finite place of degree d <= d_max.
struct PointCountRecord {
  Place place;
  std::int64_t a_v = 0;
  bool bad = false;  ///< wp(beta)^2 = 4 gamma: multiplicative reduction
};

inline std::vector<PointCountRecord> oracle_point_counts(const CurveParams& c, unsigned d_max,
                                                         const Budget& budget = {}, unsigned workers = 1) {
  budget.require(std::pow(static_cast<double>(c.q()), 2.0 * d_max), "point-count oracle");
  std::vector<PointCountRecord> out;
  const std::uint64_t Q = c.big_q();
  for (unsigned d = 1; d <= d_max; ++d) {
    const FieldPtr F = c.tower->level(d);
    const Elem gamma = c.tower->embed(c.gamma, d);
    const Elem four_gamma = F->mul(F->from_int(4), gamma);
    const std::vector<Elem> x2g = detail::x2_plus(*F, gamma);
    const auto places = irreducible_places(*c.tower, d, budget);
    auto recs = parallel_map(places.size(), workers, [&](std::size_t i) {
      const Elem beta = places[i].beta;
      const Elem z = F->sub(F->pow(beta, Q), beta);
      PointCountRecord r{places[i], -detail::cubic_character_sum(*F, z, x2g), F->mul(z, z) == four_gamma};
      return r;
    });
    for (auto& r : recs) out.push_back(std::move(r));
  }
  return out;
}

/// prod_v L_v(T)^{-1} mod T^{n+1} with L_v = 1 - a_v T^d + q^d T^{2d} at good
/// places and 1 - a_v T^d at bad ones; infinity contributes 1.
inline std::vector<BigInt> euler_product_series(const std::vector<PointCountRecord>& table, std::uint64_t q,
                                                unsigned n) {
  std::vector<BigInt> s(n + 1, 0);
  s[0] = 1;
  for (const auto& r : table) {
    const std::size_t d = r.place.degree;
    if (d > n) continue;
    const BigInt qd = r.bad ? BigInt(0) : bigpow(q, d);
    // s <- s / L_v, in place from low degree up
    for (std::size_t i = d; i <= n; ++i) {
      s[i] += BigInt(r.a_v) * s[i - d];
      if (i >= 2 * d) s[i] -= qd * s[i - 2 * d];
    }
  }
  return s;
}

/// Newton's identities: power sums of the inverse roots from the coefficients.
inline LogLCoeffs log_coeffs_of(const LPolynomial& L, unsigned n_max) {
  LogLCoeffs out;
  out.values.resize(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    BigInt acc = -BigInt(n) * L.coeff(n);
    for (unsigned j = 1; j < n; ++j) {
      const BigInt e = L.coeff(j);
      if (e != 0) acc -= e * out.values[n - j - 1];
    }
    out.values[n - 1] = acc;
  }
  return out;
}

/// Coefficients c_0..c_m from power sums p_1..p_m by the inverse identities.
inline std::vector<BigInt> coefficients_from_power_sums(const LogLCoeffs& ps, std::size_t m) {
  if (m > ps.n_max()) throw Error(ErrorKind::InvalidArgument, "not enough power sums");
  std::vector<BigInt> e(m + 1, 0);
  e[0] = 1;
  for (std::size_t n = 1; n <= m; ++n) {
    BigInt acc = ps.at(n);
    for (std::size_t j = 1; j < n; ++j) {
      if (e[j] != 0) acc += e[j] * ps.at(n - j);
    }
    if (acc % n != 0) throw Error(ErrorKind::NotRational, "power sums do not come from an integer polynomial");
    e[n] = -acc / n;
  }
  return e;
}

/// epsilon with c_{b-k} = epsilon q^{b-2k} c_k for all k, or
/// NoFunctionalEquation.
inline int functional_equation_sign(const LPolynomial& L) {
  if (L.coeffs.empty() || L.coeffs[0] == 0) throw Error(ErrorKind::InvalidArgument, "L must have nonzero constant term");
  const std::size_t b = L.degree();
  const BigInt qb = bigpow(L.q, b);
  int eps = 0;
  if (L.coeffs[b] == qb * L.coeffs[0]) {
    eps = 1;
  } else if (L.coeffs[b] == -qb * L.coeffs[0]) {
    eps = -1;
  } else {
    throw Error(ErrorKind::NoFunctionalEquation, "leading coefficient is not +-q^b c_0");
  }
  for (std::size_t k = 1; 2 * k <= b; ++k) {
    if (L.coeffs[b - k] != eps * bigpow(L.q, b - 2 * k) * L.coeffs[k]) {
      throw Error(ErrorKind::NoFunctionalEquation, "functional equation fails at k = " + std::to_string(k));
    }
  }
  return eps;
}

/// The full L-polynomial of degree b from oracle power sums. With n_max >= b
/// the coefficients come straight from Newton's identities; otherwise
/// c_0..c_{b/2} are recovered, the sign is fixed by the coefficients above
/// b/2 that are available, and the rest follows from the functional equation.
inline LPolynomial reconstruct_from_power_sums(const LogLCoeffs& ps, std::size_t b, std::uint64_t q) {
  if (b % 2 != 0) throw Error(ErrorKind::InvalidArgument, "degree must be even");
  const std::size_t avail = std::min(ps.n_max(), b);
  if (avail < b / 2 + 1 && avail < b) {
    throw Error(ErrorKind::InvalidArgument, "need at least b/2 + 1 power sums");
  }
  std::vector<BigInt> low = coefficients_from_power_sums(ps, avail);
  LPolynomial L;
  L.q = q;
  if (avail == b) {
    L.coeffs = std::move(low);
  } else {
    int eps = 0;
    for (std::size_t k = b - avail; 2 * k <= b; ++k) {
      if (low[k] == 0) continue;
      const BigInt expected = bigpow(q, b - 2 * k) * low[k];
      int here = 0;
      if (low[b - k] == expected) here = 1;
      else if (low[b - k] == -expected) here = -1;
      else throw Error(ErrorKind::NoFunctionalEquation, "oracle coefficients violate the functional equation");
      if (eps != 0 && here != eps) throw Error(ErrorKind::NoFunctionalEquation, "inconsistent sign");
      eps = here;
    }
    if (eps == 0) throw Error(ErrorKind::NoFunctionalEquation, "sign undetermined by the available coefficients");
    L.coeffs.assign(b + 1, 0);
    for (std::size_t k = 0; k <= avail; ++k) L.coeffs[k] = low[k];
    for (std::size_t k = avail + 1; k <= b; ++k) L.coeffs[k] = eps * bigpow(q, 2 * k - b) * low[b - k];
  }
  functional_equation_sign(L);
  return L;
}

struct RiemannHypothesisReport {
  double max_deviation = 0;  ///< max over roots z of L(z/q) of ||z| - 1|
  std::size_t distinct_roots = 0;
  std::vector<std::complex<double>> roots;  ///< one per distinct root
};

/// Distinct roots of L(z/q) by simultaneous iteration, seeded on the unit circle.
inline RiemannHypothesisReport rh_check(const LPolynomial& L, std::size_t max_degree = 1000,
                                        const RootFindingOptions& opt = {}) {
  const std::size_t b = L.degree();
  if (b > max_degree) throw Error(ErrorKind::BudgetExceeded, "degree " + std::to_string(b) + " above root-finding cap");
  // q^b L(z/q) = sum_k c_k q^{b-k} z^k has integer coefficients
  std::vector<BigInt> scaled(b + 1);
  for (std::size_t k = 0; k <= b; ++k) scaled[k] = L.coeffs[k] * bigpow(L.q, b - k);
  RiemannHypothesisReport r;
  // repeated roots are common (places with equal sums); iterate on the
  // squarefree part so every root is simple
  const std::vector<BigInt> simple = squarefree_part(scaled);
  r.distinct_roots = simple.size() - 1;
  r.roots = aberth_roots(simple, 1.0, opt);
  for (const auto& z : r.roots) r.max_deviation = std::max(r.max_deviation, std::fabs(std::abs(z) - 1.0));
  return r;
}

/// Lower convex hull of (i, v_p(c_i)/f) over nonzero coefficients.
inline NewtonPolygon newton_polygon(const LPolynomial& L, std::uint32_t p, unsigned f) {
  std::vector<std::pair<std::int64_t, Fraction>> pts;
  for (std::size_t i = 0; i < L.coeffs.size(); ++i) {
    if (L.coeffs[i] != 0) {
      pts.emplace_back(static_cast<std::int64_t>(i),
                       Fraction(static_cast<std::int64_t>(valuation(L.coeffs[i], p)), static_cast<std::int64_t>(f)));
    }
  }
  std::vector<std::pair<std::int64_t, Fraction>> hull;
  auto cross_nonpositive = [](const auto& o, const auto& a, const auto& b) {
    // (a - o) x (b - o) <= 0 means a lies on or above the segment o-b
    const Fraction ax(a.first - o.first), bx(b.first - o.first);
    const Fraction ay = a.second - o.second, by = b.second - o.second;
    return ax * by - ay * bx <= Fraction(0);
  };
  for (const auto& pt : pts) {
    while (hull.size() >= 2 && cross_nonpositive(hull[hull.size() - 2], hull.back(), pt)) hull.pop_back();
    hull.push_back(pt);
  }
  NewtonPolygon np;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const std::int64_t dx = hull[i].first - hull[i - 1].first;
    const Fraction slope = (hull[i].second - hull[i - 1].second) * Fraction(1, dx);
    if (!np.segments.empty() && np.segments.back().slope == slope) {
      np.segments.back().multiplicity += static_cast<std::uint64_t>(dx);
    } else {
      np.segments.push_back({slope, static_cast<std::uint64_t>(dx)});
    }
  }
  return np;
}

/// L(1/q) as an exact rational.
inline BigRational evaluate_at_inverse_q(const LPolynomial& L) {
  // q^b L(1/q) = sum_k c_k q^{b-k}
  const std::size_t b = L.degree();
  BigInt num = 0;
  BigInt qpow = 1;
  for (std::size_t k = b + 1; k-- > 0;) {
    num += L.coeffs[k] * qpow;
    qpow *= L.q;
  }
  return BigRational(num, bigpow(L.q, b));
}

}  // namespace assha

#endif  // ASSHA_LFUNCTION_HPP
