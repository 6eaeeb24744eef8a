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

#ifndef ASSHA_COMMON_HPP
#define ASSHA_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace assha {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// Every failure the library can signal. Names match the contract of the
/// operation that raises them; the `*Bug`-style traps (NotRational,
/// NoFunctionalEquation, ...) indicate an internal inconsistency.
enum class ErrorKind {
  NonPrimeP,
  EvenCharacteristic,
  ReducibleModulus,
  NotASubfield,
  MixedPrimes,
  BadIndex,
  NotRational,
  BudgetExceeded,
  ZeroGamma,
  DegenerateAngle,
  NonSquarefreeDiscriminant,
  NoFunctionalEquation,
  RootFindingFailure,
  ZeroCentralValue,
  NonIntegerSha,
  MarginViolation,
  InvalidArgument,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::NotASubfield: return "NotASubfield";
    case ErrorKind::MixedPrimes: return "MixedPrimes";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ZeroGamma: return "ZeroGamma";
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
    case ErrorKind::NonSquarefreeDiscriminant: return "NonSquarefreeDiscriminant";
    case ErrorKind::NoFunctionalEquation: return "NoFunctionalEquation";
    case ErrorKind::RootFindingFailure: return "RootFindingFailure";
    case ErrorKind::ZeroCentralValue: return "ZeroCentralValue";
    case ErrorKind::NonIntegerSha: return "NonIntegerSha";
    case ErrorKind::MarginViolation: return "MarginViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Operation cap shared by every exhaustive loop. One unit is one
/// innermost field-arithmetic step.
struct Budget {
  std::uint64_t max_operations = 1'000'000'000ULL;

  void require(double operations, const std::string& what) const {
    if (operations > static_cast<double>(max_operations)) {
      throw Error(ErrorKind::BudgetExceeded,
                  what + " needs ~" + std::to_string(static_cast<long double>(operations)) +
                      " operations, budget is " + std::to_string(max_operations));
    }
  }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline int moebius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

/// Exact integer power; throws if the result overflows 64 bits.
inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) throw Error(ErrorKind::InvalidArgument, "integer power overflow");
    r *= base;
  }
  return r;
}

inline BigInt bigpow(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.backend().data(), base, exp);
  return r;
}

/// Natural log of a positive big integer. Works far beyond double range:
/// splits off the binary exponent and refines with the leading mantissa.
inline double log_abs(const BigInt& x) {
  if (x == 0) return -INFINITY;
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.backend().data());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

inline double log_abs(const BigRational& x) {
  return log_abs(boost::multiprecision::numerator(x)) - log_abs(boost::multiprecision::denominator(x));
}

/// p-adic valuation; `x` must be nonzero.
inline std::uint64_t valuation(const BigInt& x, std::uint64_t p) {
  BigInt tmp;
  BigInt prime = p;
  return mpz_remove(tmp.backend().data(), x.backend().data(), prime.backend().data());
}

/// Exact rational with 64-bit parts; used for slopes and normalized
/// valuations which stay small.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend auto operator<=>(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) { return {a.num * b.num, a.den * b.den}; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

/// n/d, or n alone when d = 1.
inline std::string to_fraction_string(const BigRational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace assha

#endif  // ASSHA_COMMON_HPP
