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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "assha/lfunction.hpp"
#include "assha/roots.hpp"

using namespace assha;

namespace {

using Poly = std::vector<BigInt>;

Poly ints(std::initializer_list<long long> v) {
  Poly out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// a and b agree up to a nonzero rational scalar
bool proportional(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] * b.back() != b[i] * a.back()) return false;
  }
  return true;
}

void sort_roots(std::vector<std::complex<double>>& r) {
  std::sort(r.begin(), r.end(), [](auto x, auto y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); });
}

}  // namespace

TEST(SquarefreePart, RemovesRepeatedFactors) {
  const Poly a = ints({1, -3});
  const Poly b = ints({1, 1});
  const Poly c = ints({1, 0, -15, 0, 81});
  EXPECT_TRUE(proportional(squarefree_part(mul(mul(a, a), b)), mul(a, b)));
  EXPECT_TRUE(proportional(squarefree_part(mul(mul(c, c), mul(c, a))), mul(c, a)));
  EXPECT_TRUE(proportional(derivative_gcd(mul(mul(c, c), c)), mul(c, c)));
  EXPECT_EQ(squarefree_part(c), c);
  EXPECT_EQ(derivative_gcd(ints({5})), ints({1}));
}

TEST(SquarefreePart, LargeCoefficients) {
  // a product whose coefficients exceed several word-size primes
  Poly f = ints({1});
  const Poly w1 = ints({1, -7, 1369});    // 1 - 7T + 37^2 T^2
  const Poly w2 = ints({1, 50, 1369});
  for (int i = 0; i < 6; ++i) f = mul(f, w1);
  for (int i = 0; i < 3; ++i) f = mul(f, w2);
  EXPECT_TRUE(proportional(squarefree_part(f), mul(w1, w2)));
}

TEST(Aberth, KnownRoots) {
  auto r = aberth_roots(ints({-2, 0, 1}));
  sort_roots(r);
  ASSERT_EQ(r.size(), 2U);
  EXPECT_NEAR(r[0].real(), -std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(r[1].real(), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(r[0].imag(), 0.0, 1e-14);

  auto s = aberth_roots(ints({-6, 11, -6, 1}), 2.0);
  sort_roots(s);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(s[i] - std::complex<double>(i + 1, 0)), 0.0, 1e-13);

  auto u = aberth_roots(ints({1, 0, 0, 0, 0, 1}));  // z^5 = -1
  ASSERT_EQ(u.size(), 5U);
  for (const auto& z : u) {
    EXPECT_NEAR(std::abs(z), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(std::pow(z, 5) + 1.0), 0.0, 1e-12);
  }
}

TEST(Aberth, RejectsDegenerateInput) {
  for (const Poly& f : {ints({0, 0}), ints({}), ints({0, 1, 1})}) {
    try {
      aberth_roots(f);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
  }
}

TEST(RiemannCheck, ExactExamples) {
  const auto sq = rh_check({ints({1, -6, 9}), 3});
  EXPECT_EQ(sq.distinct_roots, 1U);
  EXPECT_NEAR(sq.max_deviation, 0.0, 1e-15);

  const auto bad = rh_check({ints({1, -10, 9}), 3});  // roots z = 3 and 1/3
  EXPECT_EQ(bad.distinct_roots, 2U);
  EXPECT_NEAR(bad.max_deviation, 2.0, 1e-12);

  const auto anchor = rh_check({ints({1, 0, -15, 0, 81}), 3});
  EXPECT_EQ(anchor.distinct_roots, 4U);
  EXPECT_LT(anchor.max_deviation, 1e-15);
}

TEST(RiemannCheck, DegreeCap) {
  try {
    rh_check({ints({1, 0, -15, 0, 81}), 3}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(RiemannCheck, RandomWeilProductsWithRepeats) {
  std::mt19937_64 rng(20261018);
  for (std::uint64_t q : {3ULL, 5ULL, 9ULL, 27ULL}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::uniform_int_distribution<long long> coef(-2 * static_cast<long long>(q) + 1, 2 * static_cast<long long>(q) - 1);
      std::uniform_int_distribution<int> mult(1, 4);
      Poly f = ints({1});
      const int factors = 3 + trial;
      for (int i = 0; i < factors; ++i) {
        const Poly w = ints({1, coef(rng), static_cast<long long>(q * q)});
        for (int m = mult(rng); m > 0; --m) f = mul(f, w);
      }
      const auto rep = rh_check({f, q});
      ASSERT_LT(rep.max_deviation, 1e-12) << "q=" << q << " trial " << trial;
      ASSERT_LE(rep.distinct_roots, static_cast<std::size_t>(2 * factors));
    }
  }
}
