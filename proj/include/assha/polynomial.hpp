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

#ifndef ASSHA_POLYNOMIAL_HPP
#define ASSHA_POLYNOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace assha {

/// Element handle of a finite field: the base-p integer whose digits are the
/// coefficients in the power basis (coefficient of X^0 least significant).
/// The natural order on indices is the deterministic element order used
/// throughout.
struct Elem {
  std::uint32_t index = 0;

  constexpr bool is_zero() const noexcept { return index == 0; }
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Dense polynomial, lowest degree first, never carrying a zero leading
/// coefficient. The zero polynomial has no coefficients.
template <class E>
struct Polynomial {
  std::vector<E> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const noexcept { return coeffs.empty(); }
  const E& lead() const { return coeffs.back(); }
  E coeff(int i) const { return i >= 0 && i <= degree() ? coeffs[static_cast<std::size_t>(i)] : E{}; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Order used for enumeration output: by degree, then by coefficients read
/// from the leading one down (base-q numbering of monic polynomials).
template <class E>
bool poly_less(const Polynomial<E>& a, const Polynomial<E>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ia = a.coeffs[static_cast<std::size_t>(i)];
    const auto ib = b.coeffs[static_cast<std::size_t>(i)];
    if (ia != ib) return ia < ib;
  }
  return false;
}

/// Arithmetic in F[t] for any field type exposing zero/one/add/sub/neg/mul/inv,
/// from_int and size().
template <class Field>
class PolyRing {
 public:
  using Poly = Polynomial<Elem>;

  explicit PolyRing(const Field& field) : f_(field) {}

  const Field& field() const noexcept { return f_; }

  Poly trim(Poly a) const {
    while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
    return a;
  }
  Poly from(std::vector<Elem> c) const { return trim(Poly{std::move(c)}); }
  Poly constant(Elem c) const { return trim(Poly{{c}}); }
  Poly monomial(Elem c, int deg) const {
    Poly r;
    if (c.is_zero()) return r;
    r.coeffs.assign(static_cast<std::size_t>(deg) + 1, f_.zero());
    r.coeffs.back() = c;
    return r;
  }
  Poly x() const { return monomial(f_.one(), 1); }

  Poly add(const Poly& a, const Poly& b) const {
    Poly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), f_.zero());
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
      r.coeffs[i] = f_.add(i < a.coeffs.size() ? a.coeffs[i] : f_.zero(),
                           i < b.coeffs.size() ? b.coeffs[i] : f_.zero());
    }
    return trim(std::move(r));
  }

  Poly neg(const Poly& a) const {
    Poly r = a;
    for (auto& c : r.coeffs) c = f_.neg(c);
    return r;
  }

  Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

  Poly scale(const Poly& a, Elem s) const {
    Poly r = a;
    for (auto& c : r.coeffs) c = f_.mul(c, s);
    return trim(std::move(r));
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, f_.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (a.coeffs[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
        r.coeffs[i + j] = f_.add(r.coeffs[i + j], f_.mul(a.coeffs[i], b.coeffs[j]));
      }
    }
    return trim(std::move(r));
  }

  /// Quotient and remainder; `b` must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const {
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    Poly rem = a;
    Poly quo;
    if (a.degree() < b.degree()) return {quo, rem};
    quo.coeffs.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), f_.zero());
    const Elem inv_lead = f_.inv(b.lead());
    const auto db = static_cast<std::size_t>(b.degree());
    for (int i = a.degree(); i >= b.degree(); --i) {
      const Elem c = rem.coeffs[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      const Elem factor = f_.mul(c, inv_lead);
      const auto shift = static_cast<std::size_t>(i) - db;
      quo.coeffs[shift] = factor;
      for (std::size_t j = 0; j <= db; ++j) {
        rem.coeffs[shift + j] = f_.sub(rem.coeffs[shift + j], f_.mul(factor, b.coeffs[j]));
      }
    }
    return {trim(std::move(quo)), trim(std::move(rem))};
  }

  Poly mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }

  Poly monic(const Poly& a) const {
    if (a.is_zero()) return a;
    return scale(a, f_.inv(a.lead()));
  }

  /// Monic gcd (zero only when both inputs are zero).
  Poly gcd(Poly a, Poly b) const {
    while (!b.is_zero()) {
      Poly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  Poly derivative(const Poly& a) const {
    Poly r;
    if (a.degree() < 1) return r;
    r.coeffs.resize(a.coeffs.size() - 1);
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
      r.coeffs[i - 1] = f_.mul(a.coeffs[i], f_.from_int(static_cast<std::int64_t>(i)));
    }
    return trim(std::move(r));
  }

  Poly powmod(Poly base, std::uint64_t exp, const Poly& modulus) const {
    Poly result = mod(constant(f_.one()), modulus);
    base = mod(base, modulus);
    while (exp > 0) {
      if (exp & 1U) result = mod(mul(result, base), modulus);
      exp >>= 1U;
      if (exp > 0) base = mod(mul(base, base), modulus);
    }
    return result;
  }

  Elem eval(const Poly& a, Elem x) const {
    Elem acc = f_.zero();
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) acc = f_.add(f_.mul(acc, x), *it);
    return acc;
  }

  /// Irreducibility over the coefficient field of size q: B of degree d is
  /// irreducible iff X^{q^d} = X mod B and gcd(X^{q^{d/l}} - X, B) = 1 for
  /// every prime l dividing d.
  bool is_irreducible(const Poly& b) const {
    const int d = b.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const std::uint64_t q = f_.size();
    // frob[i] = X^{q^i} mod B
    std::vector<Poly> frob(static_cast<std::size_t>(d) + 1);
    frob[0] = mod(x(), b);
    for (int i = 1; i <= d; ++i) frob[static_cast<std::size_t>(i)] = powmod(frob[static_cast<std::size_t>(i) - 1], q, b);
    if (frob[static_cast<std::size_t>(d)] != frob[0]) return false;
    for (const auto ell : prime_factors(static_cast<std::uint64_t>(d))) {
      const Poly h = sub(frob[static_cast<std::size_t>(d) / ell], x());
      if (gcd(h, b).degree() != 0) return false;
    }
    return true;
  }

  /// True iff gcd(B, B') is constant. A vanishing derivative means B is a
  /// p-th power and is reported as not squarefree.
  bool is_squarefree(const Poly& b) const {
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "squarefree test of the zero polynomial");
    if (b.degree() == 0) return true;
    const Poly db = derivative(b);
    if (db.is_zero()) return false;
    return gcd(b, db).degree() == 0;
  }

 private:
  const Field& f_;
};

/// Coefficients as decimal residues of their indices, lowest degree first.
inline std::vector<std::uint32_t> to_indices(const Polynomial<Elem>& a) {
  std::vector<std::uint32_t> out;
  out.reserve(a.coeffs.size());
  for (auto c : a.coeffs) out.push_back(c.index);
  return out;
}

}  // namespace assha

#endif  // ASSHA_POLYNOMIAL_HPP
