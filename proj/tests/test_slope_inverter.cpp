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
#include "twistlo/slope_inverter.hpp"

using namespace twistlo;
using testing::code;
using testing::error_code;

TEST_CASE("g at s = 1") {
  CHECK(g_eval(1, 1.0).g == doctest::Approx(2.6070663536573102).epsilon(1e-13));
  CHECK(g_eval(2, 1.0).g == doctest::Approx(1.3399825230072272).epsilon(1e-11));
  CHECK(g_eval(-2, 1.0).g == doctest::Approx(1.5955540215125569).epsilon(1e-11));
  const SlopeSample smp = g_eval(1, 1.0);
  CHECK(smp.s == 1.0);
  CHECK(smp.T == doctest::Approx(3.5));
  CHECK(smp.B == doctest::Approx(0.22078900754823925).epsilon(1e-13));
}

TEST_CASE("g for n = 1 at small s") {
  CHECK(g_eval(1, 1e-3).g == doctest::Approx(0.0046444193296744769).epsilon(1e-12));
}

TEST_CASE("g matches reference roots") {
  const auto j = testing::oracle_points();
  for (const auto& r : j["roots"]) {
    const SlopeSample smp = g_eval(r["n"].get<int>(), r["s"].get<double>());
    CHECK(std::abs(smp.g - r["g"].get<double>()) < 1e-10);
    CHECK(smp.t == doctest::Approx(r["t"].get<double>()).epsilon(1e-12));
  }
}

TEST_CASE("limits") {
  // t tends to the golden ratio squared as s -> 0 when n = 1.
  CHECK(std::abs(g_eval(1, 1e-6).t - 2.6180339887498948) < 1e-4);
  for (int n : {-6, -3, -2, 1, 2, 3, 6}) {
    CAPTURE(n);
    const double g0 = g_eval(n, 1e-6).g;
    const double g1 = g_eval(n, 1e6).g;
    CHECK(g0 > 0.0);
    CHECK(g0 < 1e-4);
    CHECK(g1 < 4.0);
    CHECK(g1 > 4.0 - 1e-5);
    if (n != 1) CHECK(g_eval(n, 1e-6).T > 1e5);  // T blows up at small s
  }
}

TEST_CASE("scan") {
  const auto v = scan(2, 1e-3, 1e5, 41);
  REQUIRE(v.size() == 41);
  CHECK(v.front().s == 1e-3);
  CHECK(v.back().s == 1e5);
  for (std::size_t i = 1; i < v.size(); ++i) {
    CHECK(v[i].s > v[i - 1].s);
    CHECK(v[i].s / v[i - 1].s == doctest::Approx(std::pow(1e8, 1.0 / 40)).epsilon(1e-12));
  }
  CHECK(error_code([] { scan(2, 1.0, 1.0, 5); }) == code(Errc::Domain));
  CHECK(error_code([] { scan(2, 0.0, 1.0, 5); }) == code(Errc::Domain));
  CHECK(error_code([] { scan(2, 1.0, 2.0, 1); }) == code(Errc::Domain));
}

TEST_CASE("scan range and reproducibility") {
  const auto v = scan(1, 1e-3, 1e5, 200);
  double lo = 10, hi = -10;
  for (const auto& smp : v) {
    lo = std::min(lo, smp.g);
    hi = std::max(hi, smp.g);
    CHECK(std::abs(smp.g + std::log(smp.B) / std::log(std::sqrt(smp.t))) < 1e-12);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 3.99);
  for (std::size_t i : {0u, 57u, 199u}) {
    const SlopeSample again = g_eval(1, v[i].s);
    CHECK(again.g == v[i].g);
    CHECK(again.T == v[i].T);
  }
  CHECK(scan(3, 0.1, 10.0, 10).size() == 10);
}

TEST_CASE("inversion hits rational slopes") {
  for (int n : {1, 2, 3, -2, -3}) {
    for (auto [p, q] : {std::pair{1L, 2L}, {1L, 1L}, {2L, 1L}, {3L, 1L}, {7L, 2L}}) {
      CAPTURE(n);
      CAPTURE(p);
      CAPTURE(q);
      const Inversion inv = invert(n, p, q);
      CHECK(std::abs(inv.sample.g - double(p) / double(q)) < 1e-9);
      CHECK_FALSE(inv.brackets.empty());
      CHECK(inv.sample.s >= 1e-6);
      CHECK(inv.sample.s <= 1e8);
    }
  }
}

TEST_CASE("inversion is deterministic") {
  const Inversion a = invert(2, 5, 3);
  const Inversion b = invert(2, 5, 3);
  CHECK(a.sample.s == b.sample.s);
  CHECK(a.sample.g == b.sample.g);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("inversion errors") {
  CHECK(error_code([] { invert(1, 4, 1); }) == code(Errc::SlopeOutOfRange));
  CHECK(error_code([] { invert(1, 0, 1); }) == code(Errc::SlopeOutOfRange));
  CHECK(error_code([] { invert(1, -1, 2); }) == code(Errc::SlopeOutOfRange));
  CHECK(error_code([] { invert(2, 9, 2); }) == code(Errc::SlopeOutOfRange));
  CHECK(error_code([] { invert(1, 1, 0); }) == code(Errc::Domain));
  CHECK(error_code([] { invert(1, 1, -2); }) == code(Errc::Domain));
  CHECK(error_code([] { invert(1, 2, 4); }) == code(Errc::Domain));
  CHECK(error_code([] { invert(0, 1, 1); }) == code(Errc::Domain));
  // A window that misses the crossing.
  InvertOptions narrow;
  narrow.s_min = 100.0;
  narrow.s_max = 1000.0;
  CHECK(error_code([&] { invert(1, 1, 1, narrow); }) == code(Errc::NoBracketFound));
}
