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

#ifndef ASSHA_PLACES_HPP
#define ASSHA_PLACES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "galois_field.hpp"
#include "polynomial.hpp"

namespace assha {

/// A finite place of F_q(t): monic irreducible polynomial over F_q together
/// with its least root beta in F_{q^deg}.
struct Place {
  Polynomial<Elem> poly;
  unsigned degree = 0;
  Elem beta{};
};

struct PlaceSet {
  unsigned a = 0;
  std::vector<Place> places;

  std::size_t count() const noexcept { return places.size(); }
  std::uint64_t total_degree() const noexcept {
    std::uint64_t s = 0;
    for (const auto& v : places) s += v.degree;
    return s;
  }
};

/// (1/d) sum_{e | d} mu(e) q^{d/e}
inline std::uint64_t irreducible_count(std::uint64_t q, unsigned d) {
  std::int64_t acc = 0;
  for (int e : divisors(static_cast<int>(d))) {
    acc += moebius(e) * static_cast<std::int64_t>(ipow(q, d / static_cast<unsigned>(e)));
  }
  return static_cast<std::uint64_t>(acc) / d;
}

/// The orbit beta, beta^q, ..., beta^{q^{d-1}} of an element of F_{q^d}.
inline std::vector<Elem> conjugates(const ExtensionTower& tower, unsigned d, Elem beta) {
  const FieldPtr field = tower.level(d);
  std::vector<Elem> orbit{beta};
  Elem cur = field->frobenius(beta, tower.f());
  while (cur != beta) {
    orbit.push_back(cur);
    cur = field->frobenius(cur, tower.f());
  }
  return orbit;
}

/// Every monic irreducible polynomial of degree d over F_q (t included when
/// d = 1), each with its least root, in polynomial order. Built from the
/// Frobenius orbits of size exactly d in F_{q^d}.
inline std::vector<Place> irreducible_places(const ExtensionTower& tower, unsigned d, const Budget& budget = {}) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  const double size = std::pow(static_cast<double>(tower.q()), static_cast<double>(d));
  budget.require(size * d, "irreducible enumeration");
  const FieldPtr field = tower.level(d);
  const Embedding& emb = tower.base_embedding(d);
  const PolyRing<GaloisField> ring(*field);
  std::vector<bool> seen(field->size(), false);
  std::vector<Place> out;
  for (std::uint32_t idx = 0; idx < field->size(); ++idx) {
    if (seen[idx]) continue;
    const Elem beta{idx};
    const auto orbit = conjugates(tower, d, beta);
    for (auto e : orbit) seen[e.index] = true;
    if (orbit.size() != d) continue;
    Polynomial<Elem> minpoly = ring.constant(field->one());
    for (auto e : orbit) minpoly = ring.mul(minpoly, ring.from({field->neg(e), field->one()}));
    Place v;
    v.degree = d;
    v.beta = beta;
    for (auto c : minpoly.coeffs) v.poly.coeffs.push_back(emb.preimage(c));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const Place& x, const Place& y) { return poly_less(x.poly, y.poly); });
  return out;
}

/// Monic irreducible polynomials of degree d over F_q.
inline std::vector<Polynomial<Elem>> enumerate_irreducibles(const ExtensionTower& tower, unsigned d,
                                                            const Budget& budget = {}) {
  std::vector<Polynomial<Elem>> out;
  for (auto& v : irreducible_places(tower, d, budget)) out.push_back(std::move(v.poly));
  return out;
}

inline bool is_t(const Place& v) { return v.degree == 1 && v.beta.is_zero(); }

/// P_q(a): places v != 0, infinity with deg v | a.
inline PlaceSet places_P(const ExtensionTower& tower, unsigned a, const Budget& budget = {}) {
  if (a < 1) throw Error(ErrorKind::InvalidArgument, "level a must be >= 1");
  PlaceSet set;
  set.a = a;
  for (int d : divisors(static_cast<int>(a))) {
    for (auto& v : irreducible_places(tower, static_cast<unsigned>(d), budget)) {
      if (!is_t(v)) set.places.push_back(std::move(v));
    }
  }
  std::sort(set.places.begin(), set.places.end(),
            [](const Place& x, const Place& y) { return poly_less(x.poly, y.poly); });
  return set;
}

/// Constants (c', c) with c' q^a/a <= |P_q(a)| <= c q^a/a for every a >= 1,
/// from q^n/n - q^{n/2} <= pi_q(n) <= q^n/n.
struct PlaceCountBounds {
  double lower = 0.5;
  double upper = 2.0;
};

}  // namespace assha

#endif  // ASSHA_PLACES_HPP
