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

#ifndef ASSHA_BSD_HPP
#define ASSHA_BSD_HPP

#include <cmath>
#include <vector>

#include "lfunction.hpp"

namespace assha {

struct ShaReport {
  BigRational central_value;
  BigInt sha_order;
  bool is_perfect_square = false;
  BigInt gcd_with_p;
  BigRational ordp_central;  ///< normalised so that ord(q) = 1
  double brauer_siegel = 0;
  double brauer_siegel_decomposed = 0;
  BigRational logq_H;
};

/// L(E, 1/q) = prod_v (q^d + g^2 - g Kl) / q^d, collapsed to a rational.
inline BigRational central_value_from_factors(const std::vector<PlaceFactor>& factors, std::uint64_t q) {
  if (factors.empty()) return BigRational(1);
  const std::uint32_t p = factors.front().gauss.prime();
  // balanced product keeps operand sizes even
  std::vector<CycInt> level;
  level.reserve(factors.size());
  std::uint64_t total_degree = 0;
  for (const auto& f : factors) {
    level.push_back(CycInt(p, bigpow(q, f.place.degree)) + f.gauss * f.gauss - f.gauss * f.kloosterman);
    total_degree += f.place.degree;
  }
  while (level.size() > 1) {
    std::vector<CycInt> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  const BigInt num = level.front().require_rational("central value");
  if (num == 0) throw Error(ErrorKind::ZeroCentralValue, "L(E, 1/q) vanishes");
  return BigRational(num, bigpow(q, total_degree));
}

inline BigRational central_value(const CurveParams& c, const Budget& budget = {}, unsigned workers = 1) {
  const BigRational v = central_value_from_factors(place_factors(c, {}, budget, workers), c.q());
  if (v <= 0) throw Error(ErrorKind::ZeroCentralValue, "central value is not positive");
  return v;
}

/// log H / log q = (q^a + 1) / 2
inline BigRational logq_height(const CurveParams& c) { return BigRational(BigInt(c.big_q() + 1), BigInt(2)); }

/// |Sha| = q^{log_q H - 1} L(1/q) and the derived checks.
inline ShaReport sha_report_from_central_value(const CurveParams& c, const BigRational& L1) {
  ShaReport r;
  r.central_value = L1;
  r.logq_H = logq_height(c);
  const std::uint64_t Q = c.big_q();
  const BigRational sha = L1 * BigRational(bigpow(c.q(), (Q + 1) / 2 - 1));
  if (boost::multiprecision::denominator(sha) != 1 || sha <= 0) {
    throw Error(ErrorKind::NonIntegerSha, "BSD quotient " + to_fraction_string(sha) + " is not a positive integer");
  }
  r.sha_order = boost::multiprecision::numerator(sha);
  const BigInt root = boost::multiprecision::sqrt(r.sha_order);
  r.is_perfect_square = root * root == r.sha_order;
  r.gcd_with_p = boost::multiprecision::gcd(r.sha_order, BigInt(c.p()));

  const BigInt num = boost::multiprecision::numerator(L1);
  const BigInt den = boost::multiprecision::denominator(L1);
  const auto vp = static_cast<std::int64_t>(valuation(num, c.p())) - static_cast<std::int64_t>(valuation(den, c.p()));
  r.ordp_central = BigRational(BigInt(vp), BigInt(c.f()));

  const double log_q = std::log(static_cast<double>(c.q()));
  const double log_H = static_cast<double>(Q + 1) / 2.0 * log_q;
  r.brauer_siegel = log_abs(r.sha_order) / log_H;
  r.brauer_siegel_decomposed = 1.0 - log_q / log_H + log_abs(L1) / log_H;
  return r;
}

inline ShaReport sha_order(const CurveParams& c, const Budget& budget = {}, unsigned workers = 1) {
  return sha_report_from_central_value(c, central_value(c, budget, workers));
}

struct BrauerSiegel {
  double ratio = 0;       ///< log|Sha| / log H
  double decomposed = 0;  ///< 1 - log q / log H + log L(1/q) / log H
};

inline BrauerSiegel brauer_siegel(const CurveParams& c, const Budget& budget = {}, unsigned workers = 1) {
  const ShaReport r = sha_order(c, budget, workers);
  return {r.brauer_siegel, r.brauer_siegel_decomposed};
}

struct CentralValueBounds {
  double lhs = 0;  ///< -C / a
  double mid = 0;  ///< log L(1/q) / log H
  double rhs = 0;  ///< C / a
  bool within = true;
};

/// mid = log L(1/q) / log H against the symmetric envelope C/a.
inline CentralValueBounds central_value_bounds_check(const CurveParams& c, double C = 1.0,
                                                     const Budget& budget = {}, unsigned workers = 1) {
  const BigRational L1 = central_value(c, budget, workers);
  const double log_H = static_cast<double>(c.big_q() + 1) / 2.0 * std::log(static_cast<double>(c.q()));
  CentralValueBounds b;
  b.mid = log_abs(L1) / log_H;
  b.rhs = C / static_cast<double>(c.a);
  b.lhs = -b.rhs;
  b.within = b.mid >= b.lhs && b.mid <= b.rhs;
  return b;
}

}  // namespace assha

#endif  // ASSHA_BSD_HPP
