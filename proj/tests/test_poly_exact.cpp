// Copyright 2026 The twistlo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "test_support.hpp"
#include "twistlo/poly_exact.hpp"
#include "twistlo/serialize.hpp"

using namespace twistlo;
using testing::code;
using testing::error_code;

namespace {

BivarPoly from_terms(std::initializer_list<std::tuple<int, int, long>> terms) {
  BivarPoly p;
  for (auto [ds, dT, c] : terms) p = p + BivarPoly::monomial(ds, dT, mpz_class(c));
  return p;
}

}  // namespace

TEST_CASE("tau recursion and oddness") {
  const BivarPoly tr = trace_poly();
  CHECK(tau_poly(0) == BivarPoly());
  CHECK(tau_poly(1) == BivarPoly::constant(1));
  CHECK(tau_poly(2) == tr);
  for (int m = -30; m <= 30; ++m) {
    CHECK(tau_poly(m + 1) == tr * tau_poly(m) - tau_poly(m - 1));
    CHECK(tau_poly(-m) == -tau_poly(m));
  }
}

TEST_CASE("trace polynomial") {
  // s^2 - T s + 2 s + 2
  CHECK(trace_poly() == from_terms({{2, 0, 1}, {1, 1, -1}, {1, 0, 2}, {0, 0, 2}}));
}

TEST_CASE("phi_{-2} coefficients") {
  // -T^2 s + 2 T s^2 + 3 T s + 2 T - s^3 - 3 s^2 - 4 s - 3
  const BivarPoly expected = from_terms({{1, 2, -1},
                                         {2, 1, 2},
                                         {1, 1, 3},
                                         {0, 1, 2},
                                         {3, 0, -1},
                                         {2, 0, -3},
                                         {1, 0, -4},
                                         {0, 0, -3}});
  CHECK(riley_poly(-2) == expected);
  // At s = 1 this is -T^2 + 7T - 11.
  for (int T = -3; T <= 8; ++T) {
    CHECK(eval_exact(riley_poly(-2), mpq_class(1), mpq_class(T)) == -T * T + 7 * T - 11);
  }
}

TEST_CASE("phi_2 value and phi_1 closed form") {
  CHECK(eval_exact(riley_poly(2), mpq_class(1), mpq_class(4)) == -2);
  // T = s + 2 + 1/(s+1) is a root of phi_1 for every s.
  for (int k = 1; k <= 20; ++k) {
    const mpq_class s(k, 7);
    const mpq_class T = s + 2 + 1 / (s + 1);
    CHECK(eval_exact(riley_poly(1), s, T) == 0);
  }
}

TEST_CASE("degree in T equals |n|") {
  for (int n = -12; n <= 12; ++n) {
    if (n == 0 || n == -1) continue;
    CHECK(riley_poly(n).degree_T() == std::abs(n));
  }
  CHECK(BivarPoly().degree_T() == -1);
  CHECK(BivarPoly().degree_s() == -1);
}

TEST_CASE("n = 0 and n = -1 are rejected") {
  CHECK(error_code([] { riley_poly(0); }) == code(Errc::Domain));
  CHECK(error_code([] { riley_poly(-1); }) == code(Errc::Domain));
}

TEST_CASE("double evaluation agrees with exact rational evaluation") {
  const BivarPoly p = riley_poly(5);
  const double s = 0.375, T = 4.8125;  // dyadic, exact in both
  const mpq_class exact = eval_exact(p, mpq_class(s), mpq_class(T));
  CHECK(eval_exact(p, s, T) == doctest::Approx(exact.get_d()).epsilon(1e-15));
}

TEST_CASE("cross-oracle points") {
  const auto j = testing::oracle_points();
  int count = 0;
  for (const auto& pt : j["points"]) {
    const int n = pt["n"];
    const double s = pt["s"], T = pt["T"], v = pt["phi"];
    const double got = eval_exact(riley_poly(n), s, T);
    CHECK(std::abs(got - v) <= 1e-8 * (1.0 + std::abs(v)));
    ++count;
  }
  CHECK(count == 100);
}

TEST_CASE("json round trip") {
  for (int n : {-7, -2, 1, 4}) {
    const BivarPoly p = riley_poly(n);
    CHECK(poly_from_json(poly_to_json(p)) == p);
  }
  const auto j = poly_to_json(riley_poly(-2));
  CHECK(j.size() == 8);
  CHECK(j[0].contains("coeff"));
}

TEST_CASE("text form") {
  CHECK(BivarPoly().to_string() == "0");
  CHECK_FALSE(riley_poly(3).to_string().empty());
}
