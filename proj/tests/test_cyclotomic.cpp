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

#include <random>

#include "assha/cyclotomic.hpp"

using namespace assha;

namespace {

CycInt cyc(std::uint32_t p, std::vector<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  v.resize(p - 1);
  return {p, v};
}

CycInt random_cyc(std::mt19937_64& rng, std::uint32_t p) {
  std::uniform_int_distribution<long> dist(-100, 100);
  std::vector<long> c(p - 1);
  for (auto& x : c) x = dist(rng);
  return cyc(p, c);
}

}  // namespace

TEST(CycArith, Examples) {
  const CycInt zeta = CycInt::zeta_power(3, 1);
  EXPECT_EQ(zeta * zeta, cyc(3, {-1, -1}));
  const CycInt g = cyc(3, {-1, -2});
  EXPECT_EQ(g * g, CycInt(3, BigInt(-3)));
  EXPECT_EQ(g + CycInt(3), g);
  EXPECT_EQ(CycInt::zeta_power(5, 5), CycInt(5, BigInt(1)));
  EXPECT_EQ(CycInt::zeta_power(5, -1), CycInt::zeta_power(5, 4));
}

TEST(CycArith, MixedPrimesRejected) {
  try {
    (void)(CycInt(3, BigInt(1)) + CycInt(5, BigInt(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedPrimes);
  }
}

TEST(CycArith, RationalIntegers) {
  EXPECT_EQ(CycInt(3, BigInt(-3)).as_rational_integer(), BigInt(-3));
  EXPECT_FALSE(CycInt::zeta_power(3, 1).as_rational_integer().has_value());
  try {
    CycInt::zeta_power(3, 1).require_rational("test");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRational);
  }
  // sum of all p-th roots of unity
  CycInt s(7);
  for (int i = 0; i < 7; ++i) s += CycInt::zeta_power(7, i);
  EXPECT_TRUE(s.is_zero());
}

TEST(CycArith, NormsOfGaloisOrbitsAreRational) {
  std::mt19937_64 rng(1234);
  for (std::uint32_t p : {3U, 5U, 7U, 11U}) {
    for (int t = 0; t < 20; ++t) {
      const CycInt x = random_cyc(rng, p);
      EXPECT_NO_THROW(x.norm());
    }
  }
}

TEST(CycArith, ConjugationIsARingMorphism) {
  std::mt19937_64 rng(99);
  for (std::uint32_t p : {3U, 5U, 7U}) {
    for (int t = 0; t < 50; ++t) {
      const CycInt x = random_cyc(rng, p), y = random_cyc(rng, p);
      for (std::uint32_t k = 1; k < p; ++k) {
        ASSERT_EQ((x * y).conjugate(k), x.conjugate(k) * y.conjugate(k));
        ASSERT_EQ((x + y).conjugate(k), x.conjugate(k) + y.conjugate(k));
      }
    }
  }
  EXPECT_THROW(CycInt(3).conjugate(3), Error);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(CycInt(5, BigInt(1)).ord_one_minus_zeta(), 0U);
  for (std::uint32_t p : {3U, 5U, 7U}) EXPECT_EQ(CycInt(p, BigInt(p)).ord_one_minus_zeta(), p - 1);
  EXPECT_FALSE(CycInt(3).ord_one_minus_zeta().has_value());
  const CycInt one_minus_zeta = CycInt(5, BigInt(1)) - CycInt::zeta_power(5, 1);
  EXPECT_EQ(one_minus_zeta.ord_one_minus_zeta(), 1U);
  EXPECT_EQ(one_minus_zeta.pow(7).ord_one_minus_zeta(), 7U);
}

TEST(Valuation, AdditiveOnRandomPairs) {
  std::mt19937_64 rng(2024);
  for (std::uint32_t p : {3U, 5U, 7U}) {
    for (int t = 0; t < 1000 / 3 + 1; ++t) {
      const CycInt x = random_cyc(rng, p), y = random_cyc(rng, p);
      if (x.is_zero() || y.is_zero()) continue;
      ASSERT_EQ((x * y).ord_one_minus_zeta(), *x.ord_one_minus_zeta() + *y.ord_one_minus_zeta());
    }
  }
}

TEST(Embedding, Examples) {
  const ComplexApprox g = complex_embedding(cyc(3, {-1, -2}), 1);
  EXPECT_NEAR(g.re, 0.0, 1e-15);
  EXPECT_NEAR(g.im, -std::sqrt(3.0), 1e-15);
  const ComplexApprox five = complex_embedding(CycInt(3, BigInt(5)), 1);
  EXPECT_EQ(five.re, 5.0);
  EXPECT_EQ(five.im, 0.0);
  const CycInt all = CycInt(3, BigInt(1)) + CycInt::zeta_power(3, 1) + CycInt::zeta_power(3, 2);
  EXPECT_EQ(complex_embedding(all, 1).abs(), 0.0);
  EXPECT_THROW(complex_embedding(all, 0), Error);
  EXPECT_THROW(complex_embedding(all, 3), Error);
}

TEST(Embedding, RingMorphismWithinTolerance) {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {3U, 5U, 7U, 11U}) {
    for (int t = 0; t < 100; ++t) {
      const CycInt x = random_cyc(rng, p), y = random_cyc(rng, p);
      for (std::uint32_t k = 1; k < p; ++k) {
        const ComplexApprox a = complex_embedding(x, k), b = complex_embedding(y, k);
        const ComplexApprox prod = complex_embedding(x * y, k);
        const double re = a.re * b.re - a.im * b.im, im = a.re * b.im + a.im * b.re;
        const double scale = x.l1_norm() * y.l1_norm();
        ASSERT_NEAR(prod.re, re, 1e-12 * scale);
        ASSERT_NEAR(prod.im, im, 1e-12 * scale);
        const ComplexApprox sum = complex_embedding(x + y, k);
        ASSERT_NEAR(sum.re, a.re + b.re, 1e-12 * (x.l1_norm() + y.l1_norm()));
      }
    }
  }
}

TEST(Embedding, ConjugationPermutesEmbeddings) {
  std::mt19937_64 rng(11);
  const std::uint32_t p = 7;
  const CycInt x = random_cyc(rng, p);
  for (std::uint32_t k = 1; k < p; ++k) {
    for (std::uint32_t j = 1; j < p; ++j) {
      const ComplexApprox a = complex_embedding(x.conjugate(k), j);
      const ComplexApprox b = complex_embedding(x, static_cast<std::uint32_t>((k * j) % p));
      EXPECT_NEAR(a.re, b.re, 1e-10);
      EXPECT_NEAR(a.im, b.im, 1e-10);
    }
  }
}

TEST(CycRational, ReducesAndEvaluates) {
  const CycRat r(cyc(3, {6, 9}), BigInt(-12));
  EXPECT_EQ(r.denominator(), BigInt(4));
  EXPECT_EQ(r.numerator(), cyc(3, {-2, -3}));
  const CycRat half(CycInt(3, BigInt(1)), BigInt(2));
  EXPECT_EQ((half + half).as_rational(), BigRational(1));
  EXPECT_EQ((half * half).as_rational(), BigRational(1, 4));
  EXPECT_FALSE(CycRat(CycInt::zeta_power(3, 1)).as_rational().has_value());
  const ComplexApprox z = complex_embedding(CycRat(CycInt(3, BigInt(3)), BigInt(6)), 1);
  EXPECT_NEAR(z.re, 0.5, 1e-15);
}
