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

#ifndef ASSHA_CURVE_HPP
#define ASSHA_CURVE_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "galois_field.hpp"
#include "polynomial.hpp"

namespace assha {

/// E_{gamma,a}: y^2 = x^3 + wp_a(t) x^2 + gamma x over F_q(t), wp_a(t) = t^{q^a} - t.
struct CurveParams {
  std::shared_ptr<const ExtensionTower> tower;
  Elem gamma{1};
  unsigned a = 1;

  CurveParams() = default;
  CurveParams(std::shared_ptr<const ExtensionTower> t, Elem g, unsigned level) : tower(std::move(t)), gamma(g), a(level) {
    validate();
  }

  static CurveParams make(std::uint32_t p, unsigned f, std::uint32_t gamma_index, unsigned a) {
    return CurveParams(std::make_shared<const ExtensionTower>(p, f), Elem{gamma_index}, a);
  }

  void validate() const {
    if (!tower) throw Error(ErrorKind::InvalidArgument, "curve without a base field");
    if (gamma.is_zero()) throw Error(ErrorKind::ZeroGamma, "gamma must be nonzero");
    if (gamma.index >= tower->q()) throw Error(ErrorKind::InvalidArgument, "gamma is not an element of F_q");
    if (a < 1) throw Error(ErrorKind::InvalidArgument, "a must be >= 1");
  }

  const GaloisField& field() const { return *tower->base(); }
  std::uint64_t q() const { return tower->q(); }
  std::uint32_t p() const { return tower->p(); }
  unsigned f() const { return tower->f(); }
  /// q^a
  std::uint64_t big_q() const { return ipow(q(), a); }
};

inline Polynomial<Elem> wp_polynomial(const CurveParams& c) {
  const GaloisField& F = c.field();
  Polynomial<Elem> w;
  w.coeffs.assign(c.big_q() + 1, F.zero());
  w.coeffs.back() = F.one();
  w.coeffs[1] = F.neg(F.one());
  return w;
}

/// wp_a(t)^2 - 4 gamma
inline Polynomial<Elem> discriminant_core(const CurveParams& c) {
  const GaloisField& F = c.field();
  const PolyRing<GaloisField> R(F);
  const auto w = wp_polynomial(c);
  return R.sub(R.mul(w, w), R.constant(F.mul(F.from_int(4), c.gamma)));
}

struct CurveInvariants {
  Polynomial<Elem> j_num;
  Polynomial<Elem> j_den;  ///< monic, coprime to j_num
  Polynomial<Elem> disc;
  Fraction logq_H;
  std::int64_t logq_N = 0;
  int tamagawa = 0;
  std::int64_t b_degree = 0;
  int torsion_order = 0;
};

inline CurveInvariants curve_invariants(const CurveParams& c) {
  const GaloisField& F = c.field();
  const PolyRing<GaloisField> R(F);
  const auto w = wp_polynomial(c);
  const auto w2 = R.mul(w, w);
  const auto core3 = R.sub(w2, R.constant(F.mul(F.from_int(3), c.gamma)));
  const auto core4 = R.sub(w2, R.constant(F.mul(F.from_int(4), c.gamma)));
  const Elem gamma2 = F.mul(c.gamma, c.gamma);

  CurveInvariants inv;
  inv.j_num = R.scale(R.mul(R.mul(core3, core3), core3), F.from_int(256));
  inv.j_den = R.scale(core4, gamma2);
  // Any common factor of numerator and denominator divides gcd(core3, core4).
  const auto g = R.gcd(core3, core4);
  if (g.degree() > 0) {
    const auto full = R.gcd(inv.j_num, inv.j_den);
    inv.j_num = R.divmod(inv.j_num, full).first;
    inv.j_den = R.divmod(inv.j_den, full).first;
  }
  const Elem lead_inv = F.inv(inv.j_den.lead());
  inv.j_num = R.scale(inv.j_num, lead_inv);
  inv.j_den = R.scale(inv.j_den, lead_inv);
  inv.disc = R.scale(core4, F.mul(F.from_int(16), gamma2));

  const auto Q = static_cast<std::int64_t>(c.big_q());
  inv.logq_H = Fraction(Q + 1, 2);
  inv.logq_N = 2 * (Q + 1);
  inv.tamagawa = 4;
  inv.b_degree = 2 * (Q - 1);
  inv.torsion_order = 2;
  if (Fraction(12) * inv.logq_H != Fraction(2 * Q + 4 * Q + 6) || inv.logq_N != 4 * inv.logq_H.num ||
      inv.logq_H.den != 1) {
    throw Error(ErrorKind::InvalidArgument, "height/conductor bookkeeping inconsistent");
  }
  return inv;
}

struct FiberRecord {
  std::string type;
  std::int64_t delta = 0;
  int conductor_exponent = 0;
};

struct BadReductionReport {
  std::int64_t finite_places_degree_sum = 0;
  bool squarefree = false;
  FiberRecord infinite_fiber;
  std::string finite_fiber_type;
};

/// Degree bookkeeping of the reduction table: I_1 at each divisor of
/// wp_a^2 - 4 gamma, I*_{4q^a} at infinity.
inline BadReductionReport bad_places_report(const CurveParams& c) {
  const GaloisField& F = c.field();
  const PolyRing<GaloisField> R(F);
  const auto core = discriminant_core(c);
  BadReductionReport r;
  r.squarefree = R.is_squarefree(core);
  if (!r.squarefree) throw Error(ErrorKind::NonSquarefreeDiscriminant, "wp_a^2 - 4 gamma has a repeated factor");
  // Squarefree, so the degrees of the distinct prime divisors add up to the degree.
  r.finite_places_degree_sum = core.degree();
  const auto Q = static_cast<std::int64_t>(c.big_q());
  r.infinite_fiber = {"I*_" + std::to_string(4 * Q), 4 * Q + 6, 2};
  r.finite_fiber_type = "I_1 at each divisor of wp_a^2-4gamma";
  const CurveInvariants inv = curve_invariants(c);
  if (Fraction(r.finite_places_degree_sum + r.infinite_fiber.delta) != Fraction(12) * inv.logq_H) {
    throw Error(ErrorKind::InvalidArgument, "minimal discriminant degree does not match the height");
  }
  return r;
}

struct TorsionPoint {
  bool at_infinity = false;
  Polynomial<Elem> x;
  Polynomial<Elem> y;
};

/// {O, (0,0)}: (0,0) lies on the model, and the remaining 2-torsion abscissae
/// solve x^2 + wp_a x + gamma, whose discriminant is squarefree of positive
/// degree and hence not a square in F_q[t].
inline std::vector<TorsionPoint> torsion_structure(const CurveParams& c) {
  const GaloisField& F = c.field();
  const PolyRing<GaloisField> R(F);
  // (0, 0) is on the model since x^3 + wp x^2 + gamma x vanishes at x = 0.
  const Polynomial<Elem> zero;
  const auto core = discriminant_core(c);
  if (core.degree() <= 0 || !R.is_squarefree(core)) {
    throw Error(ErrorKind::NonSquarefreeDiscriminant, "extra rational 2-torsion cannot be excluded");
  }
  return {TorsionPoint{true, {}, {}}, TorsionPoint{false, zero, zero}};
}

/// Sparse polynomial in up to three variables over a field.
template <class Field>
class MultiPoly {
 public:
  using Monomial = std::array<unsigned, 3>;

  explicit MultiPoly(const Field& f) : f_(&f) {}
  static MultiPoly constant(const Field& f, Elem c) {
    MultiPoly r(f);
    r.set({0, 0, 0}, c);
    return r;
  }
  static MultiPoly variable(const Field& f, unsigned which, unsigned power = 1) {
    MultiPoly r(f);
    Monomial m{0, 0, 0};
    m[which] = power;
    r.set(m, f.one());
    return r;
  }

  bool is_zero() const { return terms_.empty(); }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.set(m, r.f_->add(r.get(m), c));
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.set(m, r.f_->sub(r.get(m), c));
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(*a.f_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        const Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
        r.set(m, r.f_->add(r.get(m), r.f_->mul(ca, cb)));
      }
    }
    return r;
  }

 private:
  Elem get(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? f_->zero() : it->second;
  }
  void set(const Monomial& m, Elem c) {
    if (c.is_zero()) {
      terms_.erase(m);
    } else {
      terms_[m] = c;
    }
  }

  const Field* f_;
  std::map<Monomial, Elem> terms_;
};

namespace detail {
/// With X = y^2/x^2 - w and Y = y (1 - g/x^2), y^2 = x^3 + w x^2 + g x,
/// checks x^6 Y^2 = x^6 (X + w)(X^2 - 4g) identically in x, w (and g when symbolic).
template <class Field>
bool isogeny_identity(const Field& F, const MultiPoly<Field>& g) {
  using MP = MultiPoly<Field>;
  const MP x = MP::variable(F, 0);
  const MP w = MP::variable(F, 1);
  const MP x2 = x * x;
  const MP cubic = x2 * x + w * x2 + g * x;  // y^2
  const MP four = MP::constant(F, F.from_int(4));
  // X = (y^2 - w x^2) / x^2,  Y = y (x^2 - g) / x^2
  const MP X_num = cubic - w * x2;
  const MP lhs = x2 * cubic * (x2 - g) * (x2 - g);              // x^6 Y^2
  const MP rhs = (X_num + w * x2) * (X_num * X_num - four * g * x2 * x2);  // x^6 (X+w)(X^2-4g)
  return (lhs - rhs).is_zero();
}
}  // namespace detail

/// The 2-isogeny E_{gamma,a} -> y^2 = (x + wp)(x^2 - 4 gamma), checked as a
/// polynomial identity with wp replaced by an indeterminate.
inline bool isogeny_identity_check(const CurveParams& c) {
  const GaloisField& F = c.field();
  return detail::isogeny_identity(F, MultiPoly<GaloisField>::constant(F, c.gamma));
}

/// Same identity with gamma symbolic as well, over F_p.
inline bool isogeny_identity_symbolic(std::uint32_t p) {
  const PrimeField F(p);
  return detail::isogeny_identity(F, MultiPoly<PrimeField>::variable(F, 2));
}

}  // namespace assha

#endif  // ASSHA_CURVE_HPP
