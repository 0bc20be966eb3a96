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
#include "twistlo/rep_numeric.hpp"
#include "twistlo/word.hpp"

using namespace twistlo;
using testing::code;
using testing::error_code;

TEST_CASE("words") {
  CHECK(to_string(word_w()) == "xYXy");
  CHECK(to_string(word_w_star()) == "yXYx");
  CHECK(to_string(inverse(parse_word("xYXy"))) == "YxyX");
  CHECK(to_string(power(word_w(), 2)) == "xYXyxYXy");
  CHECK(to_string(power(word_w(), -1)) == "YxyX");
  CHECK(power(word_w(), 0).empty());
  CHECK(to_string(concat(parse_word("xy"), parse_word("YX"))) == "xyYX");
  CHECK(to_string(relator_word(1)) == "xYXyxYxyXY");
  CHECK(error_code([] { parse_word("xz"); }) == code(Errc::InvalidArgument));
}

TEST_CASE("generator matrices") {
  const Generators g = gen_matrices(1.0, 4.0);
  CHECK(g.x.det() == doctest::Approx(1.0));
  CHECK(g.y.det() == doctest::Approx(1.0));
  CHECK(g.x.trace() == doctest::Approx(2.5));
  CHECK(g.y.trace() == doctest::Approx(2.5));
  CHECK(error_code([] { gen_matrices(1.0, 1.0); }) == code(Errc::Domain));
  CHECK(error_code([] { gen_matrices(0.0, 4.0); }) == code(Errc::Domain));
}

TEST_CASE("W closed form at s = 1, t = 4") {
  const Mat2 w = w_closed_form(1.0, 4.0);
  CHECK(w.m11 == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
  CHECK(w.m12 == doctest::Approx(1.9444444444444444).epsilon(1e-14));
  CHECK(w.m21 == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(w.m22 == doctest::Approx(1.4166666666666667).epsilon(1e-14));
  const Generators g = gen_matrices(1.0, 4.0);
  CHECK(max_abs_diff(w, word_eval(word_w(), g.x, g.y)) < 1e-13);
  CHECK(trace_w(1.0, 4.0) == doctest::Approx(w.trace()));
}

TEST_CASE("relation residual off the curve") {
  CHECK(relation_residual(1, 1.0, 4.0) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("relation holds at solutions") {
  for (int n : {-6, -3, -2, 1, 2, 3, 6}) {
    for (double s : {0.1, 0.5, 1.0, 2.0, 10.0}) {
      const RepSolution sol = solve(n, s);
      CAPTURE(n);
      CAPTURE(s);
      CHECK(relation_residual(n, s, sol.t) < 1e-8);
    }
  }
}

TEST_CASE("powers of W") {
  for (int n : {-5, -2, 1, 3, 7}) {
    const RepSolution sol = solve(n == 1 ? 1 : n, 2.0);
    const Generators g = gen_matrices(sol);
    const Mat2 brute = word_eval(power(word_w(), n), g.x, g.y);
    CHECK(max_abs_diff(w_power(n, sol), brute) < 1e-9 * (1.0 + brute.max_abs()));
    CHECK(max_abs_diff(w_power(n, sol.s, sol.t), brute) < 1e-9 * (1.0 + brute.max_abs()));
    CHECK(max_abs_diff(w_matrix(sol), w_closed_form(sol.s, sol.t)) < 1e-12);
  }
  CHECK(tau_for_trace(3, 1.5) == doctest::Approx(1.25));
  CHECK(tau_for_trace(3, 3.0) == doctest::Approx(8.0));
}

TEST_CASE("W* entry pattern") {
  const RepSolution sol = solve(3, 1.5);
  const Generators g = gen_matrices(sol);
  const Mat2 wn = w_power(3, sol);
  const double sigma = sigma_of(sol.s, sol.t);
  const Mat2 star = w_star_from_w(wn, sigma);
  const Mat2 brute = word_eval(power(word_w_star(), 3), g.x, g.y);
  CHECK(max_abs_diff(star, brute) < 1e-10);
  CHECK(star.m11 == wn.m11);
  CHECK(star.m22 == wn.m22);
}

TEST_CASE("longitude at s = 1") {
  struct Row {
    int n;
    double B;
  };
  for (Row r : {Row{1, 0.22078900754823925}, Row{2, 0.33639043786708304},
                Row{-2, 0.30721067470242295}}) {
    const RepSolution sol = solve(r.n, 1.0);
    const LongitudeResult L = longitude(r.n, sol);
    CHECK(L.holonomy.B == doctest::Approx(r.B).epsilon(1e-12));
    CHECK(L.holonomy.B_matrix == doctest::Approx(r.B).epsilon(1e-10));
    CHECK(L.holonomy.offdiag_residual < 1e-9);
    CHECK(L.matrix.m11 > 0);
    CHECK(L.matrix.m11 * L.matrix.m22 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(L.holonomy.A == doctest::Approx(std::sqrt(sol.t)));
    CHECK(std::abs(L.holonomy.entry_identity_residual) < 1e-9 * L.holonomy.entry_identity_scale);
  }
}

TEST_CASE("longitude agrees with the word evaluation") {
  for (int n : {-3, 2, 4}) {
    const RepSolution sol = solve(n, 0.7);
    const Generators g = gen_matrices(sol);
    const Mat2 brute = word_eval(longitude_word(n), g.x, g.y);
    const Mat2 L = longitude(n, sol).matrix;
    CHECK(max_abs_diff(L, brute) < 1e-8 * (1.0 + brute.max_abs()));
  }
}

TEST_CASE("longitude requires the matching n") {
  const RepSolution sol = solve(2, 1.0);
  CHECK(error_code([&] { longitude(3, sol); }) == code(Errc::InvalidArgument));
}

TEST_CASE("longitude B against reference roots") {
  const auto j = testing::oracle_points();
  for (const auto& r : j["roots"]) {
    const RepSolution sol = solve(r["n"].get<int>(), r["s"].get<double>());
    CHECK(longitude_B(sol) == doctest::Approx(r["B"].get<double>()).epsilon(1e-10));
  }
}
