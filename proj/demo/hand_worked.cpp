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

// Walks through the smallest example by hand: q = 3, a = 1, gamma = 2.
// Build target demo_hand_worked; prints each intermediate quantity.

#include <cstdio>
#include <iostream>

#include "assha/assha.hpp"

using namespace assha;

int main() {
  const auto c = CurveParams::make(3, 1, 2, 1);
  std::cout << "E: y^2 = x^3 + (t^3 - t) x^2 + 2x over F_3(t)\n\n";

  // P_3(1): the two places t + 1, t + 2 (t itself is excluded)
  for (const auto& v : places_P(*c.tower, 1).places) {
    const GaussValue g = gauss_sum(*c.tower, v);
    const KloostermanValue kl = kloosterman_sum(*c.tower, v, c.gamma);
    std::cout << "place " << place_string(v) << "  beta = " << v.beta.index << "\n"
              << "  Gauss sum      g  = " << g.value.str() << "   (phase class " << g.epsilon_class << ")\n"
              << "  Kloosterman    Kl = " << kl.value.str() << "\n"
              << "  local factor      1 - g Kl T + 3 g^2 T^2\n";
  }

  const LPolynomial L = closed_form_lpolynomial(c);
  std::cout << "\nL(T) coefficients:";
  for (const auto& x : L.coeffs) std::cout << " " << x;
  std::cout << "\nsign of the functional equation: " << functional_equation_sign(L) << "\n";

  const auto from_L = log_coeffs_of(L, 4);
  const auto oracle = oracle_log_coeffs(c, 4);
  std::cout << "power sums from L:      ";
  for (const auto& x : from_L.values) std::cout << " " << x;
  std::cout << "\npower sums by brute force:";
  for (const auto& x : oracle.values) std::cout << " " << x;
  std::cout << "\n";

  const auto np = newton_polygon(L, 3, 1);
  std::cout << "3-adic slopes:";
  for (const auto& s : np.segments) std::cout << " " << s.slope.str() << " x" << s.multiplicity;
  std::cout << "\nmax ||z| - 1| over roots of L(z/3): " << rh_check(L).max_deviation << "\n";

  const ShaReport r = sha_order(c);
  std::cout << "\nL(1/3) = " << to_fraction_string(r.central_value) << "\n"
            << "|Sha| = 3^(H - 1) L(1/3) = " << r.sha_order << (r.is_perfect_square ? " (a square)" : "") << "\n"
            << "log|Sha| / log H = " << r.brauer_siegel << "\n";

  const AngleSample s = angle_sample(c);
  std::cout << "\nKloosterman angles:";
  for (double t : s.angles) std::printf(" %.6f", t);
  std::cout << "\n";
  return 0;
}
