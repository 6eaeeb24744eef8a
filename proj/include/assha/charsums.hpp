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

#ifndef ASSHA_CHARSUMS_HPP
#define ASSHA_CHARSUMS_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "cyclotomic.hpp"
#include "galois_field.hpp"
#include "places.hpp"

namespace assha {

/// psi^{(c)}(x) = zeta_p^{Tr_{F_q/F_p}(c x)} on F_q, c in F_q^x; c = 1 is the
/// canonical choice.
struct AdditiveCharacter {
  Elem c{1};
};

// Sums over an arbitrary finite field F with the character
// x -> zeta^{Tr_{F/F_p}(m x)}. These are the primitive building blocks; the
// place-level functions below pick F = F_v and m = c * beta_v.

/// -sum_x lambda(x) psi(m x)
inline CycInt gauss_sum_over(const GaloisField& field, Elem m) {
  const std::uint32_t p = field.characteristic();
  std::vector<std::int64_t> hist(p, 0);
  for (std::uint32_t idx = 1; idx < field.size(); ++idx) {
    const Elem x{idx};
    hist[field.trace(field.mul(m, x))] -= field.quadratic_character(x);
  }
  return CycInt::from_histogram(p, hist);
}

/// -sum_{x != 0} psi(m (x + gamma/x))
inline CycInt kloosterman_sum_over(const GaloisField& field, Elem m, Elem gamma) {
  if (gamma.is_zero()) throw Error(ErrorKind::ZeroGamma, "Kloosterman sum needs gamma != 0");
  const std::uint32_t p = field.characteristic();
  std::vector<std::int64_t> hist(p, 0);
  for (std::uint32_t idx = 1; idx < field.size(); ++idx) {
    const Elem x{idx};
    const Elem y = field.add(x, field.div(gamma, x));
    hist[field.trace(field.mul(m, y))] -= 1;
  }
  return CycInt::from_histogram(p, hist);
}

/// -sum_y lambda(y^2 - 4 gamma) psi(m y)
inline CycInt salie_sum_over(const GaloisField& field, Elem m, Elem gamma) {
  if (gamma.is_zero()) throw Error(ErrorKind::ZeroGamma, "Salie form needs gamma != 0");
  const std::uint32_t p = field.characteristic();
  std::vector<std::int64_t> hist(p, 0);
  const Elem four_gamma = field.mul(field.from_int(4), gamma);
  for (std::uint32_t idx = 0; idx < field.size(); ++idx) {
    const Elem y{idx};
    const int chi = field.quadratic_character(field.sub(field.mul(y, y), four_gamma));
    hist[field.trace(field.mul(m, y))] -= chi;
  }
  return CycInt::from_histogram(p, hist);
}

struct GaussValue {
  Place place;
  CycInt value;
  int epsilon_class = 0;  ///< iota_1(value) = q^{deg/2} exp(i epsilon_class pi/2)
};

struct KloostermanValue {
  Place place;
  Elem gamma{};
  CycInt value;        ///< Kl_gamma(v) = kl + kl'
  BigInt modulus_norm; ///< kl * kl' = q^{deg v}
};

struct Angle {
  double theta = 0;
  Place place;
  std::uint32_t embedding = 1;
};

namespace detail {
inline void require_enumerable(const ExtensionTower& tower, unsigned d, const Budget& budget) {
  budget.require(std::pow(static_cast<double>(tower.q()), static_cast<double>(d)), "character sum");
}

inline Elem character_multiplier(const ExtensionTower& tower, const Place& v, const AdditiveCharacter& chi) {
  if (chi.c.is_zero()) throw Error(ErrorKind::InvalidArgument, "additive character must be nontrivial");
  return tower.level(v.degree)->mul(tower.embed(chi.c, v.degree), v.beta);
}
}  // namespace detail

/// g(v) with the lifted character psi^{(beta_v)}; the quarter-turn class is
/// read off the k = 1 embedding and certified by g^2 = lambda_v(-1) q^{deg v}.
inline GaussValue gauss_sum(const ExtensionTower& tower, const Place& v, const AdditiveCharacter& chi = {},
                            const Budget& budget = {}) {
  detail::require_enumerable(tower, v.degree, budget);
  const FieldPtr field = tower.level(v.degree);
  GaussValue out{v, gauss_sum_over(*field, detail::character_multiplier(tower, v, chi)), 0};

  const int lambda_minus_one = field->quadratic_character(field->neg(field->one()));
  const BigInt qd = bigpow(tower.q(), v.degree);
  const CycInt square = out.value * out.value;
  if (square != CycInt(tower.p(), lambda_minus_one * qd)) {
    throw Error(ErrorKind::NotRational, "Gauss sum square identity failed for " + out.value.str());
  }
  // The value lies exactly on an axis with modulus q^{d/2} >= sqrt(3), so the
  // sign of the relevant coordinate is far above rounding error.
  const ComplexApprox z = complex_embedding(out.value, 1);
  const double scale = std::sqrt(std::pow(static_cast<double>(tower.q()), static_cast<double>(v.degree)));
  if (lambda_minus_one == 1) {
    if (std::fabs(z.im) > 1e-6 * scale) throw Error(ErrorKind::NotRational, "Gauss sum off the real axis");
    out.epsilon_class = z.re > 0 ? 0 : 2;
  } else {
    if (std::fabs(z.re) > 1e-6 * scale) throw Error(ErrorKind::NotRational, "Gauss sum off the imaginary axis");
    out.epsilon_class = z.im > 0 ? 1 : 3;
  }
  return out;
}

/// Kl_gamma(v); asserts on construction that it is a (1 - zeta)-adic unit.
inline KloostermanValue kloosterman_sum(const ExtensionTower& tower, const Place& v, Elem gamma,
                                        const AdditiveCharacter& chi = {}, const Budget& budget = {}) {
  if (gamma.is_zero()) throw Error(ErrorKind::ZeroGamma, "gamma must be nonzero");
  detail::require_enumerable(tower, v.degree, budget);
  const FieldPtr field = tower.level(v.degree);
  KloostermanValue out{v, gamma,
                       kloosterman_sum_over(*field, detail::character_multiplier(tower, v, chi),
                                            tower.embed(gamma, v.degree)),
                       bigpow(tower.q(), v.degree)};
  const auto ord = out.value.ord_one_minus_zeta();
  if (!ord || *ord != 0) {
    throw Error(ErrorKind::DegenerateAngle, "Kloosterman sum is not a p-adic unit: " + out.value.str());
  }
  return out;
}

/// Salie form of Kl_gamma(v) compared exactly with the direct sum.
inline bool salie_check(const ExtensionTower& tower, const Place& v, Elem gamma, const AdditiveCharacter& chi = {},
                        const Budget& budget = {}) {
  const KloostermanValue kl = kloosterman_sum(tower, v, gamma, chi, budget);
  const FieldPtr field = tower.level(v.degree);
  const CycInt salie =
      salie_sum_over(*field, detail::character_multiplier(tower, v, chi), tower.embed(gamma, v.degree));
  return salie == kl.value;
}

/// s_m = kl^m + kl'^m from s_0 = 2, s_1 = Kl, s_{m+1} = Kl s_m - q^d s_{m-1}.
inline CycInt kloosterman_power_sum(const KloostermanValue& kv, unsigned m) {
  const std::uint32_t p = kv.value.prime();
  CycInt prev(p, BigInt(2));
  if (m == 0) return prev;
  CycInt cur = kv.value;
  for (unsigned i = 1; i < m; ++i) {
    CycInt next = kv.value * cur - prev * kv.modulus_norm;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// theta in (0, pi) with iota_k(Kl) = 2 q^{deg/2} cos theta.
inline Angle angle_of(const KloostermanValue& kv, std::uint32_t k = 1) {
  const ComplexApprox z = complex_embedding(kv.value, k);
  const double bound = 2.0 * std::exp(0.5 * log_abs(kv.modulus_norm));
  const double ratio = z.re / bound;
  if (!(ratio > -1.0 && ratio < 1.0) || kv.value.is_zero()) {
    throw Error(ErrorKind::DegenerateAngle, "Kloosterman value " + kv.value.str() + " at the Weil boundary or zero");
  }
  return {std::acos(ratio), kv.place, k};
}

}  // namespace assha

#endif  // ASSHA_CHARSUMS_HPP
