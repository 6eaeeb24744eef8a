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

#ifndef ASSHA_ROOTS_HPP
#define ASSHA_ROOTS_HPP

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "common.hpp"

namespace assha {

namespace detail {

/// Owning MPFR scalar with a fixed precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

struct MpComplex {
  MpReal re;
  MpReal im;
  explicit MpComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
};

/// Scratch registers for complex arithmetic at one precision.
class MpComplexOps {
 public:
  explicit MpComplexOps(mpfr_prec_t prec) : t1_(prec), t2_(prec), t3_(prec), t4_(prec) {}

  // r = a * b (r may alias a or b)
  void mul(MpComplex& r, const MpComplex& a, const MpComplex& b) {
    mpfr_mul(t1_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t3_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t4_.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), t1_.get(), t2_.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t3_.get(), t4_.get(), MPFR_RNDN);
  }
  // r = a / b (r may alias a or b)
  void div(MpComplex& r, const MpComplex& a, const MpComplex& b) {
    mpfr_sqr(t1_.get(), b.re.get(), MPFR_RNDN);
    mpfr_sqr(t2_.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(t1_.get(), t1_.get(), t2_.get(), MPFR_RNDN);  // |b|^2
    mpfr_mul(t2_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t3_.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(t2_.get(), t2_.get(), t3_.get(), MPFR_RNDN);  // re numerator
    mpfr_mul(t3_.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t4_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(t3_.get(), t3_.get(), t4_.get(), MPFR_RNDN);  // im numerator
    mpfr_div(r.re.get(), t2_.get(), t1_.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), t3_.get(), t1_.get(), MPFR_RNDN);
  }
  static void add(MpComplex& r, const MpComplex& a, const MpComplex& b) {
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  }
  static void sub(MpComplex& r, const MpComplex& a, const MpComplex& b) {
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  }
  double abs(const MpComplex& a) {
    mpfr_hypot(t1_.get(), a.re.get(), a.im.get(), MPFR_RNDN);
    return t1_.to_double();
  }

 private:
  MpReal t1_, t2_, t3_, t4_;
};

}  // namespace detail

namespace detail {

using ModPoly = std::vector<std::uint64_t>;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

inline void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ModPoly reduce(const std::vector<BigInt>& f, std::uint64_t m) {
  ModPoly out(f.size());
  const BigInt M(m);
  for (std::size_t i = 0; i < f.size(); ++i) {
    BigInt r = f[i] % M;
    if (r < 0) r += M;
    out[i] = static_cast<std::uint64_t>(r);
  }
  trim(out);
  return out;
}

/// Monic gcd over F_m, m a prime below 2^32.
inline ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t m) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), m - 2, m);
    while (a.size() >= b.size()) {
      const std::uint64_t factor = mulmod(a.back(), inv, m);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = (a[shift + i] + m - mulmod(factor, b[i], m)) % m;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t inv = powmod(a.back(), m - 2, m);
    for (auto& c : a) c = mulmod(c, inv, m);
  }
  return a;
}

inline BigInt content(const std::vector<BigInt>& f) {
  BigInt g = 0;
  for (const auto& c : f) g = boost::multiprecision::gcd(g, c);
  return g;
}

/// Exact quotient f / g over Z, or nullopt if g does not divide f.
inline std::optional<std::vector<BigInt>> exact_divide(std::vector<BigInt> f, const std::vector<BigInt>& g) {
  if (g.empty() || g.back() == 0) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  if (f.size() < g.size()) {
    for (const auto& c : f) {
      if (c != 0) return std::nullopt;
    }
    return std::vector<BigInt>{};
  }
  std::vector<BigInt> quo(f.size() - g.size() + 1);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const BigInt& top = f[k + g.size() - 1];
    if (top % g.back() != 0) return std::nullopt;
    quo[k] = top / g.back();
    if (quo[k] == 0) continue;
    for (std::size_t i = 0; i < g.size(); ++i) f[k + i] -= quo[k] * g[i];
  }
  for (const auto& c : f) {
    if (c != 0) return std::nullopt;
  }
  return quo;
}

}  // namespace detail

/// Primitive gcd of f and f' over Z by CRT over word-size primes, certified by
/// exact division.
inline std::vector<BigInt> derivative_gcd(const std::vector<BigInt>& f) {
  std::vector<BigInt> df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * BigInt(i));
  if (df.empty()) return {BigInt(1)};
  const BigInt lead = f.back();
  std::vector<BigInt> acc;
  BigInt modulus = 0;
  std::size_t best_degree = f.size();
  std::vector<BigInt> last_candidate;
  for (std::uint64_t m = (1ULL << 31U) - 1; m > (1ULL << 30U); m -= 2) {
    if (!is_prime(m) || lead % BigInt(m) == 0 || (f.size() - 1) % m == 0) continue;
    detail::ModPoly g = detail::gcd_mod(detail::reduce(f, m), detail::reduce(df, m), m);
    const std::size_t deg = g.size() - 1;
    if (deg > best_degree) continue;  // unlucky prime
    // scale so the leading coefficient is lead mod m
    const std::uint64_t lm = static_cast<std::uint64_t>(BigInt(((lead % BigInt(m)) + BigInt(m)) % BigInt(m)));
    for (auto& c : g) c = detail::mulmod(c, lm, m);
    if (deg < best_degree) {
      best_degree = deg;
      acc.assign(g.begin(), g.end());
      modulus = m;
      last_candidate.clear();
      if (deg == 0) return {BigInt(1)};
      continue;
    }
    // CRT: x = acc + modulus * t with t = (g - acc) / modulus mod m
    const std::uint64_t minv = detail::powmod(static_cast<std::uint64_t>(modulus % BigInt(m)), m - 2, m);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      const auto ai = static_cast<std::uint64_t>(((acc[i] % BigInt(m)) + BigInt(m)) % BigInt(m));
      const std::uint64_t t = detail::mulmod((g[i] + m - ai) % m, minv, m);
      acc[i] += modulus * BigInt(t);
    }
    modulus *= m;
    std::vector<BigInt> cand(acc.size());
    const BigInt half = modulus / 2;
    for (std::size_t i = 0; i < acc.size(); ++i) cand[i] = acc[i] > half ? acc[i] - modulus : acc[i];
    const BigInt c = detail::content(cand);
    for (auto& x : cand) x /= c;
    if (cand == last_candidate && detail::exact_divide(f, cand) && detail::exact_divide(df, cand)) return cand;
    last_candidate = std::move(cand);
  }
  throw Error(ErrorKind::RootFindingFailure, "modular gcd ran out of primes");
}

/// f / gcd(f, f'): the same roots, each with multiplicity one.
inline std::vector<BigInt> squarefree_part(const std::vector<BigInt>& f) {
  std::vector<BigInt> g = derivative_gcd(f);
  if (g.size() == 1) return f;
  auto q = detail::exact_divide(f, g);
  if (!q) throw Error(ErrorKind::RootFindingFailure, "gcd does not divide the polynomial");
  return *q;
}

struct RootFindingOptions {
  int max_iterations = 2000;
  /// Minimum working precision in bits; raised automatically with the
  /// dynamic range of the coefficients.
  long min_precision_bits = 128;
  /// Per-root step size at which a root is frozen; 0 selects 2^{-prec/3},
  /// after which the cubically convergent step has reached full precision
  /// for simple roots.
  double convergence = 0;
};

/// All complex roots of sum_k coeffs[k] z^k by Aberth-Ehrlich simultaneous
/// iteration in MPFR arithmetic. Seeds are spread uniformly on a circle of
/// radius `seed_radius` with a small phase offset to break symmetry.
inline std::vector<std::complex<double>> aberth_roots(const std::vector<BigInt>& coeffs, double seed_radius = 1.0,
                                                      const RootFindingOptions& opt = {}) {
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == 0) --deg;
  if (deg == 0) throw Error(ErrorKind::InvalidArgument, "root finding on the zero polynomial");
  const std::size_t n = deg - 1;
  if (n == 0) return {};
  if (coeffs[0] == 0) throw Error(ErrorKind::InvalidArgument, "strip zero roots before root finding");

  double range_bits = 0;
  const double lead_log = log_abs(coeffs[n]);
  for (std::size_t k = 0; k <= n; ++k) {
    if (coeffs[k] != 0) range_bits = std::max(range_bits, (log_abs(coeffs[k]) - lead_log) / std::log(2.0));
  }
  const auto prec = static_cast<mpfr_prec_t>(
      std::max<double>(static_cast<double>(opt.min_precision_bits), range_bits + std::log2(static_cast<double>(n) + 1) + 96));

  const double tol = opt.convergence > 0 ? opt.convergence : std::ldexp(1.0, -static_cast<int>(prec / 3));
  using detail::MpComplex;
  using detail::MpReal;
  detail::MpComplexOps ops(prec);

  std::vector<MpComplex> a;  // monic-normalised coefficients
  a.reserve(n + 1);
  {
    MpReal lead(prec);
    mpfr_set_z(lead.get(), coeffs[n].backend().data(), MPFR_RNDN);
    for (std::size_t k = 0; k <= n; ++k) {
      a.emplace_back(prec);
      mpfr_set_z(a.back().re.get(), coeffs[k].backend().data(), MPFR_RNDN);
      mpfr_div(a.back().re.get(), a.back().re.get(), lead.get(), MPFR_RNDN);
    }
  }

  // Double-precision pass from the circle seeds; its output seeds the MPFR
  // pass, which then only needs a few corrective sweeps.
  std::vector<std::complex<double>> seeds(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double phi = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.25) / static_cast<double>(n) + 0.1;
    seeds[j] = std::polar(seed_radius, phi);
  }
  {
    std::vector<double> ad(n + 1);
    bool finite = true;
    for (std::size_t k = 0; k <= n; ++k) {
      ad[k] = a[k].re.to_double();
      finite = finite && std::isfinite(ad[k]);
    }
    if (finite) {
      std::vector<std::complex<double>> zd = seeds;
      bool ok = true;
      for (int iter = 0; iter < 500 && ok; ++iter) {
        double max_step = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::complex<double> pv = ad[n], dv = 0;
          for (std::size_t k = n; k-- > 0;) {
            dv = dv * zd[i] + pv;
            pv = pv * zd[i] + ad[k];
          }
          if (pv == 0.0) continue;
          const std::complex<double> ratio = pv / dv;
          std::complex<double> sum = 0;
          for (std::size_t j = 0; j < n; ++j) {
            if (j != i) sum += 1.0 / (zd[i] - zd[j]);
          }
          const std::complex<double> w = ratio / (1.0 - ratio * sum);
          if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
            ok = false;
            break;
          }
          zd[i] -= w;
          max_step = std::max(max_step, std::abs(w));
        }
        if (max_step < 1e-14) break;
      }
      if (ok) seeds = zd;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(seeds[i] - seeds[j]) < 1e-12) seeds[i] *= std::polar(1.0 + 1e-9, 1e-9 * static_cast<double>(i + 1));
    }
  }

  std::vector<MpComplex> z;
  z.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    z.emplace_back(prec);
    mpfr_set_d(z.back().re.get(), seeds[j].real(), MPFR_RNDN);
    mpfr_set_d(z.back().im.get(), seeds[j].imag(), MPFR_RNDN);
  }

  MpComplex pv(prec), dv(prec), ratio(prec), sum(prec), diff(prec), tmp(prec), one(prec), w(prec);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  std::vector<bool> done(n, false);

  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    double max_step = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      // Horner for P and P'
      pv = a[n];
      mpfr_set_zero(dv.re.get(), 1);
      mpfr_set_zero(dv.im.get(), 1);
      for (std::size_t k = n; k-- > 0;) {
        ops.mul(dv, dv, z[i]);
        detail::MpComplexOps::add(dv, dv, pv);
        ops.mul(pv, pv, z[i]);
        detail::MpComplexOps::add(pv, pv, a[k]);
      }
      if (mpfr_zero_p(pv.re.get()) && mpfr_zero_p(pv.im.get())) {
        done[i] = true;
        continue;
      }
      ops.div(ratio, pv, dv);
      mpfr_set_zero(sum.re.get(), 1);
      mpfr_set_zero(sum.im.get(), 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        detail::MpComplexOps::sub(diff, z[i], z[j]);
        ops.div(tmp, one, diff);
        detail::MpComplexOps::add(sum, sum, tmp);
      }
      ops.mul(tmp, ratio, sum);
      detail::MpComplexOps::sub(tmp, one, tmp);
      ops.div(w, ratio, tmp);
      detail::MpComplexOps::sub(z[i], z[i], w);
      const double step = ops.abs(w);
      max_step = std::max(max_step, step);
      if (step < tol) done[i] = true;
    }
    if (max_step < tol ||
        std::all_of(done.begin(), done.end(), [](bool b) { return b; })) {
      std::vector<std::complex<double>> out;
      out.reserve(n);
      for (const auto& r : z) out.emplace_back(r.re.to_double(), r.im.to_double());
      return out;
    }
  }
  throw Error(ErrorKind::RootFindingFailure, "Aberth iteration did not converge");
}

}  // namespace assha

#endif  // ASSHA_ROOTS_HPP
