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

#ifndef ASSHA_DISTRIBUTION_HPP
#define ASSHA_DISTRIBUTION_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "charsums.hpp"
#include "curve.hpp"
#include "parallel.hpp"

namespace assha {

struct AngleSample {
  std::uint64_t q = 0;
  Elem gamma{};
  unsigned a = 0;
  std::uint32_t embedding = 1;
  std::vector<double> angles;     ///< sorted ascending
  std::vector<Angle> per_place;   ///< in place order
};

struct Margins {
  double to_zero = 0;
  double to_half_pi = 0;
  double to_pi = 0;
  double min() const { return std::min({to_zero, to_half_pi, to_pi}); }
};

struct DistributionReport {
  double ks_distance = 0;
  double w_integral = 0;
  double w_error = 0;
  Margins margins;
  double epsilon_a = 0;
  double log_epsilon_a = 0;
  std::map<unsigned, double> moments;
  /// Observed constants in the rate a^{1/2} q^{-a/4}: KS / rate, and
  /// |moment_k - target_k| / (2k rate). Reported, never asserted.
  double ks_constant = 0;
  std::map<unsigned, double> moment_constants;
};

inline AngleSample angle_sample(const CurveParams& c, std::uint32_t k = 1, const Budget& budget = {},
                                unsigned workers = 1) {
  const PlaceSet set = places_P(*c.tower, c.a, budget);
  AngleSample s{c.q(), c.gamma, c.a, k, {}, {}};
  s.per_place = parallel_map(set.count(), workers, [&](std::size_t i) {
    return angle_of(kloosterman_sum(*c.tower, set.places[i], c.gamma, {}, budget), k);
  });
  s.angles.reserve(s.per_place.size());
  for (const auto& a : s.per_place) s.angles.push_back(a.theta);
  std::sort(s.angles.begin(), s.angles.end());
  return s;
}

/// CDF of the Sato-Tate measure (2/pi) sin^2 t dt.
inline double sato_tate_cdf(double theta) {
  return theta / std::numbers::pi - std::sin(2.0 * theta) / (2.0 * std::numbers::pi);
}

/// sup |F_a - F_inf| over [0, pi]; the supremum is attained at a sample
/// point, approached from one side or the other.
inline double ks_discrepancy(const AngleSample& s) {
  if (s.angles.empty()) throw Error(ErrorKind::InvalidArgument, "empty angle sample");
  const double n = static_cast<double>(s.angles.size());
  double d = 0;
  for (std::size_t i = 0; i < s.angles.size(); ++i) {
    const double F = sato_tate_cdf(s.angles[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - F, F - static_cast<double>(i) / n});
  }
  return d;
}

/// W(t) = -log(sin^2 t cos^2 t)
inline double w_function(double theta) {
  const double sc = std::sin(theta) * std::cos(theta);
  return -std::log(sc * sc);
}

inline double log16() { return 4.0 * std::numbers::ln2; }

struct WIntegral {
  double value = 0;
  double error = 0;
};

inline WIntegral w_integral(const AngleSample& s) {
  if (s.angles.empty()) throw Error(ErrorKind::InvalidArgument, "empty angle sample");
  detail::CompensatedSum acc;
  for (double t : s.angles) acc.add(w_function(t));
  const double v = acc.value() / static_cast<double>(s.angles.size());
  return {v, std::fabs(v - log16())};
}

/// log of q^{-a(6p-4)}
inline double log_epsilon(std::uint64_t q, std::uint32_t p, unsigned a) {
  return -static_cast<double>(a) * (6.0 * p - 4.0) * std::log(static_cast<double>(q));
}

/// Distances of the sample to 0, pi/2 and pi; MarginViolation if any falls
/// below q^{-a(6p-4)}.
inline Margins margin_report(const AngleSample& s, std::uint32_t p) {
  if (s.angles.empty()) throw Error(ErrorKind::InvalidArgument, "empty angle sample");
  Margins m;
  m.to_zero = s.angles.front();
  m.to_pi = std::numbers::pi - s.angles.back();
  m.to_half_pi = std::numbers::pi;
  for (double t : s.angles) m.to_half_pi = std::min(m.to_half_pi, std::fabs(t - std::numbers::pi / 2));
  const double eps = std::exp(log_epsilon(s.q, p, s.a));
  if (!(m.min() > 0) || m.min() < eps) {
    throw Error(ErrorKind::MarginViolation, "angle within " + std::to_string(m.min()) + " of {0, pi/2, pi}");
  }
  return m;
}

/// int cos(k t) d mu_a
inline double moment_test(const AngleSample& s, unsigned k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "moment order must be positive");
  if (s.angles.empty()) throw Error(ErrorKind::InvalidArgument, "empty angle sample");
  detail::CompensatedSum acc;
  for (double t : s.angles) acc.add(std::cos(static_cast<double>(k) * t));
  return acc.value() / static_cast<double>(s.angles.size());
}

/// int cos(k t) d mu_inf: 0 except -1/2 at k = 2.
inline double sato_tate_moment(unsigned k) { return k == 2 ? -0.5 : 0.0; }

inline DistributionReport distribution_report(const AngleSample& s, std::uint32_t p, unsigned max_moment = 4) {
  DistributionReport r;
  r.ks_distance = ks_discrepancy(s);
  const WIntegral w = w_integral(s);
  r.w_integral = w.value;
  r.w_error = w.error;
  r.margins = margin_report(s, p);
  r.log_epsilon_a = log_epsilon(s.q, p, s.a);
  r.epsilon_a = std::exp(r.log_epsilon_a);
  const double rate = std::sqrt(static_cast<double>(s.a)) *
                     std::pow(static_cast<double>(s.q), -static_cast<double>(s.a) / 4.0);
  r.ks_constant = r.ks_distance / rate;
  for (unsigned k = 1; k <= max_moment; ++k) {
    r.moments[k] = moment_test(s, k);
    r.moment_constants[k] = std::fabs(r.moments[k] - sato_tate_moment(k)) / (2.0 * k * rate);
  }
  return r;
}

}  // namespace assha

#endif  // ASSHA_DISTRIBUTION_HPP
