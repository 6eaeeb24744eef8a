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

#include "assha/bsd.hpp"

using namespace assha;

namespace {

BigRational rat(long long n, long long d) { return BigRational(BigInt(n), BigInt(d)); }

}  // namespace

TEST(CentralValue, SmallestCurves) {
  EXPECT_EQ(central_value(CurveParams::make(3, 1, 1, 1)), rat(1, 3));
  EXPECT_EQ(central_value(CurveParams::make(3, 1, 2, 1)), rat(4, 3));
  EXPECT_EQ(central_value(CurveParams::make(3, 1, 1, 2)), rat(100, 81));
  EXPECT_EQ(central_value(CurveParams::make(3, 1, 2, 2)), rat(100, 81));
}

TEST(CentralValue, AgreesWithExpandedPolynomial) {
  for (auto [p, f, a] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
           {3, 1, 1}, {3, 1, 2}, {3, 1, 3}, {3, 1, 4}, {5, 1, 1}, {5, 1, 2}, {7, 1, 1}, {3, 2, 1}, {3, 2, 2}}) {
    const ExtensionTower tower(p, f);
    for (std::uint32_t g = 1; g < tower.q(); ++g) {
      const auto c = CurveParams::make(p, f, g, a);
      ASSERT_EQ(central_value(c), evaluate_at_inverse_q(closed_form_lpolynomial(c))) << tower.q() << " " << g << " " << a;
    }
  }
}

TEST(CentralValue, DegenerateInputs) {
  EXPECT_EQ(central_value_from_factors({}, 3), BigRational(1));
  PlaceFactor zero{Place{{}, 1, Elem{1}}, CycInt(3, std::vector<BigInt>{BigInt(1), BigInt(2)}), CycInt(3)};
  try {
    central_value_from_factors({zero}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroCentralValue);
  }
}

TEST(Sha, SmallestCurves) {
  const ShaReport r1 = sha_order(CurveParams::make(3, 1, 1, 1));
  EXPECT_EQ(r1.sha_order, 1);
  EXPECT_TRUE(r1.is_perfect_square);
  EXPECT_EQ(r1.ordp_central, rat(-1, 1));
  EXPECT_EQ(r1.logq_H, rat(2, 1));
  EXPECT_NEAR(r1.brauer_siegel, 0.0, 1e-15);

  const ShaReport r2 = sha_order(CurveParams::make(3, 1, 2, 1));
  EXPECT_EQ(r2.sha_order, 4);
  EXPECT_EQ(r2.gcd_with_p, 1);
  EXPECT_NEAR(r2.brauer_siegel, std::log(4.0) / std::log(9.0), 1e-14);
  EXPECT_NEAR(r2.brauer_siegel, 0.6309, 1e-4);
}

TEST(Sha, FrozenValuesQ5) {
  const std::vector<long long> sha = {841, 1936, 16, 81};
  for (std::uint32_t g = 1; g <= 4; ++g) {
    const ShaReport r = sha_order(CurveParams::make(5, 1, g, 1));
    EXPECT_EQ(r.sha_order, sha[g - 1]);
    EXPECT_EQ(r.central_value, rat(sha[g - 1], 25));
    EXPECT_EQ(r.ordp_central, rat(-2, 1));
  }
  EXPECT_EQ(sha_order(CurveParams::make(3, 1, 1, 2)).sha_order, 100);
}

TEST(Sha, StructuralPropertiesOnGrid) {
  std::vector<std::tuple<std::uint32_t, unsigned, unsigned>> grid = {{5, 1, 1}, {5, 1, 2}, {7, 1, 1}, {7, 1, 2},
                                                                     {3, 2, 1}, {3, 2, 2}, {5, 2, 1}};
  for (unsigned a = 1; a <= 7; ++a) grid.emplace_back(3, 1, a);
  for (auto [p, f, a] : grid) {
    const ExtensionTower tower(p, f);
    for (std::uint32_t g = 1; g < tower.q(); ++g) {
      const auto c = CurveParams::make(p, f, g, a);
      const ShaReport r = sha_order(c);
      const auto Q = static_cast<long long>(c.big_q());
      ASSERT_TRUE(r.is_perfect_square) << tower.q() << " " << g << " " << a;
      ASSERT_EQ(r.gcd_with_p, 1);
      ASSERT_EQ(r.ordp_central, rat(-(Q - 1), 2));
      ASSERT_NEAR(r.brauer_siegel, r.brauer_siegel_decomposed, 1e-12);
      ASSERT_EQ(r.logq_H, rat(Q + 1, 2));
    }
  }
}

TEST(Sha, NonIntegerQuotientIsRejected) {
  try {
    sha_report_from_central_value(CurveParams::make(3, 1, 1, 1), rat(1, 9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegerSha);
  }
}

TEST(BrauerSiegelTest, MatchesReport) {
  const auto c = CurveParams::make(3, 1, 2, 3);
  const BrauerSiegel bs = brauer_siegel(c);
  const ShaReport r = sha_order(c);
  EXPECT_EQ(bs.ratio, r.brauer_siegel);
  EXPECT_EQ(bs.decomposed, r.brauer_siegel_decomposed);
}

TEST(CentralValueBoundsTest, SmallestCurves) {
  const auto b1 = central_value_bounds_check(CurveParams::make(3, 1, 1, 1));
  EXPECT_NEAR(b1.mid, -0.5, 1e-14);
  EXPECT_EQ(b1.rhs, 1.0);
  EXPECT_EQ(b1.lhs, -1.0);
  EXPECT_TRUE(b1.within);
  const auto b2 = central_value_bounds_check(CurveParams::make(3, 1, 2, 1));
  EXPECT_NEAR(b2.mid, std::log(4.0 / 3.0) / std::log(9.0), 1e-14);
  EXPECT_NEAR(b2.mid, 0.1309, 1e-4);
  EXPECT_FALSE(central_value_bounds_check(CurveParams::make(3, 1, 1, 1), 0.25).within);
}
