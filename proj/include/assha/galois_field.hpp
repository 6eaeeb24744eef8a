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

#ifndef ASSHA_GALOIS_FIELD_HPP
#define ASSHA_GALOIS_FIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "common.hpp"
#include "polynomial.hpp"

namespace assha {

/// F_p with plain modular arithmetic. Used to select and validate moduli
/// before any extension field exists.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint64_t size() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  Elem zero() const noexcept { return {0}; }
  Elem one() const noexcept { return {1}; }
  Elem from_int(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    return {static_cast<std::uint32_t>(((v % m) + m) % m)};
  }
  Elem add(Elem a, Elem b) const noexcept {
    const std::uint32_t s = a.index + b.index;
    return {s >= p_ ? s - p_ : s};
  }
  Elem neg(Elem a) const noexcept { return {a.index == 0 ? 0 : p_ - a.index}; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.index) * b.index % p_)};
  }
  Elem pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = one();
    while (e > 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a.is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
    return pow(a, p_ - 2);
  }

 private:
  std::uint32_t p_;
};

/// F_{p^k} realised as F_p[X]/(m) for a monic irreducible m of degree k.
///
/// Fields with at most 2^20 elements carry log/antilog tables relative to the
/// least primitive element, a Zech table for addition and an absolute-trace
/// table; larger fields fall back to coefficient-vector arithmetic.
class GaloisField {
 public:
  static constexpr std::uint64_t kTableLimit = 1ULL << 20U;
  static constexpr std::int32_t kNoZech = -1;

  /// Validates (p, k, modulus). Without a modulus the lexicographically least
  /// monic irreducible of degree k is chosen (X itself for k = 1).
  static std::shared_ptr<const GaloisField> make(std::uint32_t p, unsigned k,
                                                 std::optional<std::vector<std::uint32_t>> modulus = {}) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
    if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
    const double size = std::pow(static_cast<double>(p), static_cast<double>(k));
    if (size >= 4294967295.0) throw Error(ErrorKind::InvalidArgument, "field too large for 32-bit indices");
    const PrimeField fp(p);
    const PolyRing<PrimeField> ring(fp);
    std::vector<std::uint32_t> m;
    if (modulus) {
      m = *modulus;
      if (m.size() != k + 1 || m.back() != 1) {
        throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(k));
      }
      for (auto c : m) {
        if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
      }
      if (!ring.is_irreducible(to_prime_poly(m))) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible");
    } else {
      m = canonical_modulus(p, k);
    }
    return std::shared_ptr<const GaloisField>(new GaloisField(p, k, std::move(m)));
  }

  /// Lexicographically least monic irreducible polynomial of degree k over F_p.
  static std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, unsigned k) {
    const PrimeField fp(p);
    const PolyRing<PrimeField> ring(fp);
    const std::uint64_t count = ipow(p, k);
    std::vector<std::uint32_t> m(k + 1, 0);
    m[k] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (unsigned i = 0; i < k; ++i) {
        m[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (ring.is_irreducible(to_prime_poly(m))) return m;
    }
    throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return size_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool has_tables() const noexcept { return !log_.empty(); }

  Elem zero() const noexcept { return {0}; }
  Elem one() const noexcept { return {1}; }
  Elem from_int(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    return {static_cast<std::uint32_t>(((v % m) + m) % m)};
  }
  /// Element X (the class of the modulus root); equals from_int(0) only for k = 1.
  Elem root() const noexcept { return k_ == 1 ? zero() : Elem{p_}; }

  Elem from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > k_) throw Error(ErrorKind::InvalidArgument, "too many coefficients");
    std::uint64_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= p_) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
      idx = idx * p_ + c[i];
    }
    return {static_cast<std::uint32_t>(idx)};
  }
  std::vector<std::uint32_t> coeffs(Elem x) const {
    std::vector<std::uint32_t> c(k_);
    std::uint32_t v = x.index;
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  }

  Elem add(Elem a, Elem b) const noexcept {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (has_tables()) {
      const std::uint32_t la = log_[a.index];
      const std::uint32_t lb = log_[b.index];
      const std::uint32_t diff = lb >= la ? lb - la : lb + order_ - la;
      const std::int32_t z = zech_[diff];
      if (z == kNoZech) return zero();
      return exp_[la + static_cast<std::uint32_t>(z)];
    }
    return digit_add(a, b);
  }
  Elem neg(Elem a) const noexcept {
    std::uint32_t v = a.index;
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    while (v > 0) {
      const std::uint32_t d = v % p_;
      r += (d == 0 ? 0 : p_ - d) * place;
      v /= p_;
      place *= p_;
    }
    return {r};
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    if (has_tables()) return exp_[log_[a.index] + log_[b.index]];
    return slow_mul(a, b);
  }

  Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    if (has_tables()) {
      const std::uint64_t l = (static_cast<std::uint64_t>(log_[a.index]) * (e % order_)) % order_;
      return exp_[l];
    }
    Elem r = one();
    while (e > 0) {
      if (e & 1U) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1U;
    }
    return r;
  }

  Elem inv(Elem a) const {
    if (a.is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
    if (has_tables()) return exp_[(order_ - log_[a.index]) % order_];
    return pow(a, size_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// x^{p^times}
  Elem frobenius(Elem x, unsigned times = 1) const {
    for (unsigned i = 0; i < times % k_; ++i) x = pow(x, p_);
    return x;
  }

  /// x^{q0} where q0 = p^j; exponent may exceed the field size.
  Elem power_of_p(Elem x, unsigned j) const { return frobenius(x, j); }

  /// Absolute trace to F_p, as a residue in [0, p).
  std::uint32_t trace(Elem x) const {
    if (!trace_.empty()) return trace_[x.index];
    Elem acc = x;
    Elem cur = x;
    for (unsigned i = 1; i < k_; ++i) {
      cur = pow(cur, p_);
      acc = add(acc, cur);
    }
    return acc.index;
  }

  /// Quadratic character extended by zero: 0, +1 on nonzero squares, -1 otherwise.
  int quadratic_character(Elem x) const {
    if (x.is_zero()) return 0;
    if (has_tables()) return (log_[x.index] & 1U) == 0 ? 1 : -1;
    return pow(x, (size_ - 1) / 2) == one() ? 1 : -1;
  }

  /// Discrete log relative to generator(); tables only.
  std::uint32_t log(Elem x) const { return log_[x.index]; }
  Elem exp(std::uint64_t e) const { return exp_[e % order_]; }
  std::int32_t zech(std::uint32_t n) const { return zech_[n % order_]; }
  std::uint32_t order() const noexcept { return order_; }
  Elem generator() const noexcept { return generator_; }

  std::string describe() const {
    std::string s = "F_" + std::to_string(p_) + "^" + std::to_string(k_) + " mod [";
    for (std::size_t i = 0; i < modulus_.size(); ++i) s += (i ? "," : "") + std::to_string(modulus_[i]);
    return s + "]";
  }

 private:
  GaloisField(std::uint32_t p, unsigned k, std::vector<std::uint32_t> m)
      : p_(p), k_(k), size_(ipow(p, k)), modulus_(std::move(m)) {
    order_ = static_cast<std::uint32_t>(size_ - 1);
    generator_ = find_generator();
    if (size_ <= kTableLimit) build_tables();
  }

  static Polynomial<Elem> to_prime_poly(const std::vector<std::uint32_t>& m) {
    Polynomial<Elem> r;
    for (auto c : m) r.coeffs.push_back(Elem{c});
    while (!r.coeffs.empty() && r.coeffs.back().is_zero()) r.coeffs.pop_back();
    return r;
  }

  Elem digit_add(Elem a, Elem b) const noexcept {
    std::uint32_t x = a.index;
    std::uint32_t y = b.index;
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    while (x > 0 || y > 0) {
      std::uint32_t s = x % p_ + y % p_;
      if (s >= p_) s -= p_;
      r += s * place;
      x /= p_;
      y /= p_;
      place *= p_;
    }
    return {r};
  }

  Elem slow_mul(Elem a, Elem b) const {
    const auto ca = coeffs(a);
    const auto cb = coeffs(b);
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      if (ca[i] == 0) continue;
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_;
    }
    for (std::size_t i = prod.size(); i-- > k_;) {
      const std::uint64_t c = prod[i];
      if (c == 0) continue;
      // X^k = -sum m_j X^j
      for (unsigned j = 0; j < k_; ++j) {
        prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - modulus_[j]) % p_ * c) % p_;
      }
      prod[i] = 0;
    }
    std::uint64_t idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + prod[i];
    return {static_cast<std::uint32_t>(idx)};
  }

  Elem slow_pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e > 0) {
      if (e & 1U) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1U;
    }
    return r;
  }

  Elem find_generator() const {
    if (size_ == 2) return one();
    const auto factors = prime_factors(order_);
    for (std::uint32_t idx = 1; idx < size_; ++idx) {
      bool primitive = true;
      for (auto ell : factors) {
        if (slow_pow(Elem{idx}, order_ / ell) == one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) return Elem{idx};
    }
    throw Error(ErrorKind::InvalidArgument, "no primitive element");
  }

  void build_tables() {
    exp_.assign(2 * static_cast<std::size_t>(order_), zero());
    log_.assign(size_, 0);
    Elem cur = one();
    for (std::uint32_t i = 0; i < order_; ++i) {
      exp_[i] = cur;
      exp_[i + order_] = cur;
      log_[cur.index] = i;
      cur = slow_mul(cur, generator_);
    }
    zech_.assign(order_, kNoZech);
    for (std::uint32_t n = 0; n < order_; ++n) {
      const Elem s = digit_add(one(), exp_[n]);
      zech_[n] = s.is_zero() ? kNoZech : static_cast<std::int32_t>(log_[s.index]);
    }
    trace_.assign(size_, 0);
    for (std::uint32_t idx = 1; idx < size_; ++idx) {
      Elem acc{idx};
      Elem cur_c{idx};
      for (unsigned i = 1; i < k_; ++i) {
        cur_c = exp_[static_cast<std::uint64_t>(log_[cur_c.index]) * p_ % order_];
        acc = digit_add(acc, cur_c);
      }
      trace_[idx] = acc.index;
    }
  }

  std::uint32_t p_;
  unsigned k_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t order_ = 0;
  Elem generator_{};
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> zech_;
  std::vector<std::uint32_t> trace_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Process-wide cache of canonical fields F_{p^k}.
inline FieldPtr canonical_field(std::uint32_t p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
  }
  FieldPtr f = GaloisField::make(p, k);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(p, k), f).first->second;
}

/// Field homomorphism src -> dst determined by the image of the modulus root.
class Embedding {
 public:
  Embedding() = default;
  Embedding(FieldPtr src, FieldPtr dst, Elem root_image) : src_(std::move(src)), dst_(std::move(dst)), root_(root_image) {
    if (dst_->degree() % src_->degree() != 0 || dst_->characteristic() != src_->characteristic()) {
      throw Error(ErrorKind::NotASubfield, src_->describe() + " does not embed into " + dst_->describe());
    }
    powers_.push_back(dst_->one());
    for (unsigned i = 1; i < src_->degree(); ++i) powers_.push_back(dst_->mul(powers_.back(), root_));
    if (src_->size() <= (1U << 16U)) {
      table_.reserve(src_->size());
      for (std::uint32_t idx = 0; idx < src_->size(); ++idx) table_.push_back(compute(Elem{idx}));
      for (std::uint32_t idx = 0; idx < src_->size(); ++idx) inverse_.emplace(table_[idx].index, idx);
    }
  }

  /// Least root (in element order) of the source modulus inside dst. When
  /// `agree_on` is given, only roots whose induced map sends agree_on.first to
  /// agree_on.second are accepted.
  static Embedding least(FieldPtr src, FieldPtr dst, std::optional<std::pair<Elem, Elem>> agree_on = {}) {
    if (dst->degree() % src->degree() != 0 || dst->characteristic() != src->characteristic()) {
      throw Error(ErrorKind::NotASubfield, src->describe() + " does not embed into " + dst->describe());
    }
    if (src->degree() == 1) return Embedding(src, dst, dst->zero());
    if (dst->size() > (1ULL << 26U)) throw Error(ErrorKind::BudgetExceeded, "embedding search in " + dst->describe());
    const auto& m = src->modulus();
    for (std::uint32_t idx = 1; idx < dst->size(); ++idx) {
      const Elem r{idx};
      Elem acc = dst->zero();
      for (std::size_t i = m.size(); i-- > 0;) acc = dst->add(dst->mul(acc, r), dst->from_int(m[i]));
      if (!acc.is_zero()) continue;
      Embedding e(src, dst, r);
      if (!agree_on || e.map(agree_on->first) == agree_on->second) return e;
    }
    throw Error(ErrorKind::NotASubfield, "no compatible root found");
  }

  const GaloisField& source() const { return *src_; }
  const GaloisField& target() const { return *dst_; }
  Elem root_image() const noexcept { return root_; }

  Elem map(Elem x) const {
    if (!table_.empty()) return table_[x.index];
    return compute(x);
  }

  /// Preimage of an element fixed by the source-size Frobenius.
  Elem preimage(Elem y) const {
    if (!inverse_.empty()) {
      auto it = inverse_.find(y.index);
      if (it == inverse_.end()) throw Error(ErrorKind::NotASubfield, "element is not in the image");
      return Elem{it->second};
    }
    for (std::uint32_t idx = 0; idx < src_->size(); ++idx) {
      if (compute(Elem{idx}) == y) return Elem{idx};
    }
    throw Error(ErrorKind::NotASubfield, "element is not in the image");
  }

 private:
  Elem compute(Elem x) const {
    const auto c = src_->coeffs(x);
    Elem acc = dst_->zero();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) acc = dst_->add(acc, dst_->mul(dst_->from_int(c[i]), powers_[i]));
    }
    return acc;
  }

  FieldPtr src_;
  FieldPtr dst_;
  Elem root_{};
  std::vector<Elem> powers_;
  std::vector<Elem> table_;
  std::unordered_map<std::uint32_t, std::uint32_t> inverse_;
};

/// Relative trace of x down to a subfield: sum of x^{q0^i}, returned as an
/// element of `subfield` through the least embedding.
inline Elem relative_trace(const FieldPtr& field, Elem x, const FieldPtr& subfield) {
  if (subfield->characteristic() != field->characteristic() || field->degree() % subfield->degree() != 0) {
    throw Error(ErrorKind::NotASubfield, subfield->describe() + " is not a subfield of " + field->describe());
  }
  const unsigned m = field->degree() / subfield->degree();
  Elem acc = x;
  Elem cur = x;
  for (unsigned i = 1; i < m; ++i) {
    cur = field->frobenius(cur, subfield->degree());
    acc = field->add(acc, cur);
  }
  return Embedding::least(subfield, field).preimage(acc);
}

/// The tower F_q = F_{p^f} subset F_{q^d}, each level its own canonical
/// quotient of F_p[X], with F_q embedded by the least root of its modulus.
class ExtensionTower {
 public:
  ExtensionTower(std::uint32_t p, unsigned f) : base_(canonical_field(p, f)) {}
  explicit ExtensionTower(FieldPtr base) : base_(std::move(base)) {}

  const FieldPtr& base() const noexcept { return base_; }
  std::uint64_t q() const noexcept { return base_->size(); }
  std::uint32_t p() const noexcept { return base_->characteristic(); }
  unsigned f() const noexcept { return base_->degree(); }

  /// F_{q^d}
  FieldPtr level(unsigned d) const {
    if (d == 1) return base_;
    return canonical_field(base_->characteristic(), base_->degree() * d);
  }

  /// F_q -> F_{q^d}
  const Embedding& base_embedding(unsigned d) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = base_emb_.find(d);
    if (it != base_emb_.end()) return *it->second;
    auto e = std::make_unique<Embedding>(d == 1 ? Embedding(base_, base_, base_->root())
                                                : Embedding::least(base_, level(d)));
    return *base_emb_.emplace(d, std::move(e)).first->second;
  }

  Elem embed(Elem c, unsigned d) const { return base_embedding(d).map(c); }

  /// F_{q^d} -> F_{q^{md}}, compatible with the base embeddings.
  const Embedding& lift(unsigned d, unsigned md) const {
    if (md % d != 0) throw Error(ErrorKind::NotASubfield, "degree does not divide");
    const Embedding& lo = base_embedding(d);
    const Embedding& hi = base_embedding(md);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = lift_.find({d, md});
    if (it != lift_.end()) return *it->second;
    std::unique_ptr<Embedding> e;
    if (d == md) {
      e = std::make_unique<Embedding>(level(d), level(d), level(d)->root());
    } else {
      const Elem g = base_->root();
      std::optional<std::pair<Elem, Elem>> constraint;
      if (base_->degree() > 1) constraint = std::make_pair(lo.map(g), hi.map(g));
      e = std::make_unique<Embedding>(Embedding::least(level(d), level(md), constraint));
    }
    return *lift_.emplace(std::make_pair(d, md), std::move(e)).first->second;
  }

 private:
  FieldPtr base_;
  mutable std::mutex mu_;
  mutable std::map<unsigned, std::unique_ptr<Embedding>> base_emb_;
  mutable std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Embedding>> lift_;
};

}  // namespace assha

#endif  // ASSHA_GALOIS_FIELD_HPP
