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

#ifndef ASSHA_CYCLOTOMIC_HPP
#define ASSHA_CYCLOTOMIC_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace assha {

/// Element sum_{i=0}^{p-2} c_i zeta_p^i of Z[zeta_p]. The basis omits
/// zeta^{p-1}, which is always rewritten as -(1 + zeta + ... + zeta^{p-2}).
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(std::uint32_t p) : p_(p), c_(p - 1) {}
  CycInt(std::uint32_t p, const BigInt& rational) : CycInt(p) { c_[0] = rational; }
  CycInt(std::uint32_t p, std::vector<BigInt> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (c_.size() != p - 1) throw Error(ErrorKind::InvalidArgument, "CycInt needs p-1 coefficients");
  }

  /// zeta^e for any integer exponent.
  static CycInt zeta_power(std::uint32_t p, std::int64_t e) {
    std::vector<BigInt> hist(p);
    hist[static_cast<std::size_t>(((e % p) + p) % p)] = 1;
    return from_histogram(p, hist);
  }

  /// sum_{t=0}^{p-1} hist[t] zeta^t, folded into canonical form.
  static CycInt from_histogram(std::uint32_t p, const std::vector<BigInt>& hist) {
    CycInt r(p);
    for (std::uint32_t i = 0; i + 1 < p; ++i) r.c_[i] = hist[i] - hist[p - 1];
    return r;
  }
  static CycInt from_histogram(std::uint32_t p, const std::vector<std::int64_t>& hist) {
    CycInt r(p);
    for (std::uint32_t i = 0; i + 1 < p; ++i) r.c_[i] = hist[i] - hist[p - 1];
    return r;
  }

  std::uint32_t prime() const noexcept { return p_; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  const BigInt& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (x != 0) return false;
    }
    return true;
  }

  /// The rational integer c_0 when all other coefficients vanish.
  std::optional<BigInt> as_rational_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return std::nullopt;
    }
    return c_.empty() ? BigInt(0) : c_[0];
  }

  /// Same as as_rational_integer() but raising NotRational with the offending vector.
  BigInt require_rational(const std::string& context) const {
    auto r = as_rational_integer();
    if (!r) throw Error(ErrorKind::NotRational, context + ": " + str());
    return *r;
  }

  friend bool operator==(const CycInt&, const CycInt&) = default;

  CycInt& operator+=(const CycInt& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycInt& operator-=(const CycInt& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycInt& operator*=(const BigInt& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator-(CycInt a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend CycInt operator*(CycInt a, const BigInt& s) { return a *= s; }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    a.check(b);
    const std::uint32_t p = a.p_;
    std::vector<BigInt> hist(p);
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::uint32_t j = 0; j + 1 < p; ++j) {
        if (b.c_[j] == 0) continue;
        hist[(i + j) % p] += a.c_[i] * b.c_[j];
      }
    }
    return from_histogram(p, hist);
  }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

  CycInt pow(unsigned e) const {
    CycInt r(p_, BigInt(1));
    CycInt base = *this;
    while (e > 0) {
      if (e & 1U) r *= base;
      e >>= 1U;
      if (e > 0) base *= base;
    }
    return r;
  }

  /// Galois conjugate zeta -> zeta^k, 1 <= k <= p-1.
  CycInt conjugate(std::uint32_t k) const {
    if (k == 0 || k >= p_) throw Error(ErrorKind::BadIndex, "conjugation index out of range");
    std::vector<BigInt> hist(p_);
    for (std::uint32_t i = 0; i + 1 < p_; ++i) hist[(static_cast<std::uint64_t>(i) * k) % p_] += c_[i];
    return from_histogram(p_, hist);
  }

  /// Product of all p-1 Galois conjugates (the absolute norm).
  BigInt norm() const {
    CycInt acc(p_, BigInt(1));
    for (std::uint32_t k = 1; k < p_; ++k) acc *= conjugate(k);
    return acc.require_rational("norm");
  }

  /// Exact (1 - zeta)-adic valuation; nullopt for zero.
  std::optional<std::uint64_t> ord_one_minus_zeta() const {
    if (is_zero()) return std::nullopt;
    std::uint64_t v = 0;
    CycInt cur = *this;
    while (true) {
      BigInt sum = 0;
      for (const auto& x : cur.c_) sum += x;
      if (sum % p_ != 0) return v;
      // (1 - zeta) y = x: y_i = sum_{j<=i} x_j - (i+1) s with s = sum(x)/p
      const BigInt s = sum / p_;
      CycInt y(p_);
      BigInt prefix = 0;
      for (std::uint32_t i = 0; i + 1 < p_; ++i) {
        prefix += cur.c_[i];
        y.c_[i] = prefix - BigInt(i + 1) * s;
      }
      cur = std::move(y);
      ++v;
    }
  }

  /// sum |c_i|, as a double.
  double l1_norm() const {
    double s = 0;
    for (const auto& x : c_) s += std::fabs(x.convert_to<double>());
    return s;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].str();
    return s + "]";
  }

 private:
  void check(const CycInt& o) const {
    if (o.p_ != p_) throw Error(ErrorKind::MixedPrimes, "p=" + std::to_string(p_) + " vs p=" + std::to_string(o.p_));
  }

  std::uint32_t p_ = 0;
  std::vector<BigInt> c_;
};

/// Element of Q(zeta_p) with a rational-integer denominator.
class CycRat {
 public:
  CycRat() = default;
  CycRat(CycInt num, BigInt den = 1) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const CycInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  friend CycRat operator*(const CycRat& a, const CycRat& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend CycRat operator+(const CycRat& a, const CycRat& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend bool operator==(const CycRat&, const CycRat&) = default;

  std::optional<BigRational> as_rational() const {
    auto n = num_.as_rational_integer();
    if (!n) return std::nullopt;
    return BigRational(*n, den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    BigInt g = den_;
    for (const auto& x : num_.coeffs()) g = boost::multiprecision::gcd(g, x);
    if (g > 1) {
      std::vector<BigInt> c = num_.coeffs();
      for (auto& x : c) x /= g;
      num_ = CycInt(num_.prime(), std::move(c));
      den_ /= g;
    }
  }

  CycInt num_;
  BigInt den_ = 1;
};

/// Image of a cyclotomic number under zeta -> exp(2 pi i k / p).
struct ComplexApprox {
  double re = 0;
  double im = 0;
  std::uint32_t embedding = 1;

  double abs() const { return std::hypot(re, im); }
};

namespace detail {
/// Neumaier compensated sum.
struct CompensatedSum {
  double sum = 0;
  double comp = 0;
  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};
}  // namespace detail

inline ComplexApprox complex_embedding(const CycInt& x, std::uint32_t k) {
  const std::uint32_t p = x.prime();
  if (k == 0 || k >= p) throw Error(ErrorKind::BadIndex, "embedding index must be in [1, p-1]");
  detail::CompensatedSum re;
  detail::CompensatedSum im;
  for (std::uint32_t i = 0; i + 1 < p; ++i) {
    const double c = x[i].convert_to<double>();
    if (c == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((static_cast<std::uint64_t>(i) * k) % p) / p;
    re.add(c * std::cos(angle));
    im.add(c * std::sin(angle));
  }
  return {re.value(), im.value(), k};
}

inline ComplexApprox complex_embedding(const CycRat& x, std::uint32_t k) {
  ComplexApprox z = complex_embedding(x.numerator(), k);
  const double scale = std::exp(-log_abs(x.denominator()));
  z.re *= scale;
  z.im *= scale;
  return z;
}

}  // namespace assha

#endif  // ASSHA_CYCLOTOMIC_HPP
