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

#ifndef ASSHA_REPORT_HPP
#define ASSHA_REPORT_HPP

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "bsd.hpp"
#include "distribution.hpp"
#include "lfunction.hpp"

namespace assha {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// One asserted invariant and its outcome.
struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

inline json to_json(const Check& c) { return {{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}}; }

/// Coefficient vector of a base-field element, lowest degree first.
inline std::string element_string(const GaloisField& F, Elem x) {
  if (F.degree() == 1) return std::to_string(x.index);
  std::string s;
  for (auto c : F.coeffs(x)) s += (s.empty() ? "" : ":") + std::to_string(c);
  return s;
}

/// Monic polynomial in t, coefficients written as field-element indices.
inline std::string place_string(const Place& v) {
  std::string s;
  const auto& c = v.poly.coeffs;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!s.empty()) s += "+";
    const bool unit = c[i].index == 1 && i > 0;
    if (!unit) s += std::to_string(c[i].index);
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

inline json curve_key(const CurveParams& c) {
  return {{"q", c.q()}, {"gamma", element_string(c.field(), c.gamma)}, {"a", c.a}};
}

inline std::vector<std::string> decimal_strings(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

inline json to_json(const NewtonPolygon& np) {
  json arr = json::array();
  for (const auto& s : np.segments) arr.push_back({{"slope", s.slope.str()}, {"multiplicity", s.multiplicity}});
  return arr;
}

inline json lpolynomial_json(const CurveParams& c, const LPolynomial& L, int sign, const NewtonPolygon& np) {
  json j = curve_key(c);
  j["degree"] = L.degree();
  j["coeffs"] = decimal_strings(L.coeffs);
  j["sign"] = sign;
  j["slopes"] = to_json(np);
  return j;
}

inline json sha_json(const CurveParams& c, const ShaReport& r) {
  json j = curve_key(c);
  j["central_value"] = to_fraction_string(r.central_value);
  j["sha_order"] = r.sha_order.str();
  j["square"] = r.is_perfect_square;
  j["gcd_p"] = r.gcd_with_p.str();
  j["ordp_central"] = to_fraction_string(r.ordp_central);
  j["logq_H"] = to_fraction_string(r.logq_H);
  j["brauer_siegel"] = r.brauer_siegel;
  j["brauer_siegel_decomposed"] = r.brauer_siegel_decomposed;
  return j;
}

inline json distribution_json(const CurveParams& c, const DistributionReport& r) {
  json j = curve_key(c);
  j["ks"] = r.ks_distance;
  j["w_integral"] = r.w_integral;
  j["w_error"] = r.w_error;
  j["margins"] = {{"to_zero", r.margins.to_zero}, {"to_half_pi", r.margins.to_half_pi}, {"to_pi", r.margins.to_pi}};
  j["epsilon_a"] = r.epsilon_a;
  j["log_epsilon_a"] = r.log_epsilon_a;
  json m = json::object();
  for (const auto& [k, v] : r.moments) m[std::to_string(k)] = v;
  j["moments"] = m;
  json mc = json::object();
  for (const auto& [k, v] : r.moment_constants) mc[std::to_string(k)] = v;
  j["rate_constants"] = {{"ks", r.ks_constant}, {"moments", mc}};
  return j;
}

/// Quotes a CSV field when needed.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string s;
  for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + csv_field(fields[i]);
  return s + "\n";
}

/// Shortest round-trip decimal form, as used in the JSON output.
inline std::string num(double x) { return json(x).dump(); }

}  // namespace assha

#endif  // ASSHA_REPORT_HPP
