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

#include "twistlo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "twistlo/cover_lift.hpp"
#include "twistlo/error.hpp"
#include "twistlo/poly_exact.hpp"
#include "twistlo/rep_numeric.hpp"
#include "twistlo/slope_inverter.hpp"

namespace twistlo {

namespace {

constexpr double kPi = std::numbers::pi;

class Check {
 public:
  Check(std::string name, double threshold) {
    r_.name = std::move(name);
    r_.threshold = threshold;
  }

  // Records an error measure; passes when measure <= threshold.
  void measure(double value, const std::string& where) {
    ++r_.cases;
    const bool ok = std::isfinite(value) && value <= r_.threshold;
    if (std::isfinite(value)) r_.worst = std::max(r_.worst, value);
    if (!ok) fail_case(where + ": " + std::to_string(value));
  }

  void expect(bool ok, const std::string& where) {
    ++r_.cases;
    if (!ok) fail_case(where);
  }

  void fail_case(const std::string& where) {
    if (r_.passed) r_.detail = where;
    r_.passed = false;
  }

  // Runs body, turning a library error into a failed case.
  void guard(const std::string& where, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      ++r_.cases;
      fail_case(where + ": " + std::string(errc_name(e.code())) + ": " + e.what());
    }
  }

  CheckResult result() && { return std::move(r_); }

 private:
  CheckResult r_;
};

std::string at(int n, double s) {
  std::ostringstream os;
  os << "n=" << n << " s=" << s;
  return os.str();
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

CheckResult check_chebyshev_values() {
  Check c("chebyshev_special_values", 1e-12);
  for (int m = 1; m <= 12; ++m) {
    const double tr = 2.0 * std::cos(kPi / (2 * m + 1));
    const double a = tau_num(m, tr), b = tau_num(m + 1, tr);
    c.measure(rel(a, b), "pi/(2m+1), m=" + std::to_string(m));
    c.expect(a > 0, "positive at m=" + std::to_string(m));
    if (m >= 2) {
      const double tr3 = 2.0 * std::cos(3.0 * kPi / (2 * m + 1));
      const double a3 = tau_num(m, tr3), b3 = tau_num(m + 1, tr3);
      c.measure(rel(a3, b3), "3pi/(2m+1), m=" + std::to_string(m));
      c.expect(a3 < 0, "negative at m=" + std::to_string(m));
    }
  }
  return std::move(c).result();
}

CheckResult check_tau_recursion() {
  Check c("tau_polynomial_recursion", 0);
  const BivarPoly tr = trace_poly();
  for (int m = -30; m <= 30; ++m) {
    const BivarPoly lhs = tau_poly(m + 1) - tr * tau_poly(m) + tau_poly(m - 1);
    c.expect(lhs.is_zero(), "recursion at m=" + std::to_string(m));
    c.expect(tau_poly(-m) == -tau_poly(m), "oddness at m=" + std::to_string(m));
  }
  return std::move(c).result();
}

CheckResult check_riley_degree(const VerifyGrid& g) {
  Check c("riley_degree_in_T", 0);
  for (int n : g.n_values) {
    c.expect(riley_poly(n).degree_T() == std::abs(n), "n=" + std::to_string(n));
  }
  return std::move(c).result();
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyGrid& g) {
  std::vector<CheckResult> out;
  out.push_back(check_chebyshev_values());
  out.push_back(check_tau_recursion());
  out.push_back(check_riley_degree(g));

  Check brackets("bracket_sign_change", 0);
  Check band("solution_in_band", 0);
  Check exact("exact_riley_residual", 1e-9);
  Check trace("trace_in_open_interval", 0);
  Check relation("relation_residual", 1e-8);
  Check diag("longitude_diagonal", 1e-6);
  Check positive("longitude_entry_positive", 0);
  Check bclosed("longitude_B_closed_form", 1e-10);
  Check entry_identity("longitude_offdiagonal_identity", 1e-9);
  Check wstar("w_star_entry_pattern", 1e-8);
  Check wpow("w_power_matches_product", 1e-8);
  Check lomega("lifted_longitude_omega", 1e-6);

  for (int n : g.n_values) {
    const BivarPoly phi = riley_poly(n);
    for (double s : g.s_values) {
      const std::string where = at(n, s);
      if (n != 1) {
        brackets.guard(where, [&] {
          const Bracket b = bracket(n, s);
          brackets.expect(b.sign_lo * b.sign_hi == -1 && s + 2 <= b.lo && b.lo < b.hi &&
                              b.hi <= s + 2 + 4 / s,
                          where);
        });
      }
      band.guard(where, [&] {
        const RepSolution sol = solve(n, s);
        band.expect(sol.T > s + 2 && sol.T < s + 2 + 4 / s, where);
        exact.measure(std::abs(eval_exact(phi, s, sol.T)), where);
        trace.expect(sol.trace_W > -2 && sol.trace_W < 2, where);
        relation.measure(relation_residual(n, s, sol.t), where);

        const LongitudeResult lon = longitude(n, sol);
        const HolonomyData& h = lon.holonomy;
        diag.measure(h.offdiag_residual / lon.matrix.max_abs(), where);
        positive.expect(h.B_matrix > 0 && h.B > 0, where);
        bclosed.measure(std::abs(h.B_matrix - h.B) / h.B, where);
        entry_identity.measure(std::abs(h.entry_identity_residual) / h.entry_identity_scale, where);

        const Generators gm = gen_matrices(sol);
        const Mat2 wn = w_power(n, sol);
        const Mat2 ws_word = word_eval(power(word_w_star(), n), gm.x, gm.y);
        const Mat2 ws_pattern = w_star_from_w(wn, h.sigma);
        wstar.measure(max_abs_diff(ws_word, ws_pattern) / (1.0 + ws_word.max_abs()), where);
        const Mat2 wn_word = word_eval(power(word_w(), n), gm.x, gm.y);
        wpow.measure(max_abs_diff(wn, wn_word) / (1.0 + wn_word.max_abs()), where);

        const LiftedGenerators lg = lift_generators(n, sol);
        const CoverElem L = evaluate_word(longitude_word(n), lg.x, lg.y);
        lomega.measure(std::abs(L.omega), where);
      });
    }
  }
  for (Check* c : {&brackets, &band, &exact, &trace, &relation, &diag, &positive, &bclosed,
                   &entry_identity, &wstar, &wpow, &lomega}) {
    out.push_back(std::move(*c).result());
  }

  // Finite-sample versions of the limits of t, B_s and g at s -> 0 and s -> oo.
  Check limits("slope_limit_trends", 0);
  limits.guard("n=1 s=1e-6", [&] {
    const double golden = (3.0 + std::sqrt(5.0)) / 2.0;
    limits.expect(std::abs(solve(1, 1e-6).t - golden) < 1e-4, "t(n=1, s=1e-6) -> (3+sqrt5)/2");
  });
  for (int n : g.n_values) {
    limits.guard(at(n, 1e6), [&] {
      const SlopeSample big = g_eval(n, 1e6);
      const SlopeSample small = g_eval(n, 1e-6);
      limits.expect(std::abs(big.t - big.s - 2) < 0.01, at(n, 1e6) + " t - s -> 2");
      limits.expect(std::abs(big.s / big.t - 1) < 0.01, at(n, 1e6) + " s/t -> 1");
      limits.expect(std::abs(small.B - 1) < 0.01, at(n, 1e-6) + " B -> 1");
      limits.expect(std::abs(big.B * big.t * big.t - 1) < 0.01, at(n, 1e6) + " B t^2 -> 1");
      limits.expect(small.g < 0.005, at(n, 1e-6) + " g -> 0");
      limits.expect(big.g > 3.995, at(n, 1e6) + " g -> 4");
    });
  }
  out.push_back(std::move(limits).result());

  // Group law of the universal cover on random elements.
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> radius(0.0, 0.95), angle(-kPi, kPi), wide(-20.0, 20.0);
  auto random_elem = [&] {
    return CoverElem{std::polar(radius(rng), angle(rng)), wide(rng)};
  };
  Check hom("cover_projection_homomorphism", 1e-10);
  Check assoc("cover_associativity", 1e-10);
  Check real_axis("real_axis_subgroup", 0);
  Check central("central_commutation", 0);
  for (int i = 0; i < 1000; ++i) {
    const CoverElem a = random_elem(), b = random_elem(), c = random_elem();
    const std::string where = "case " + std::to_string(i);
    hom.measure(max_abs_diff(unchart(a * b), unchart(a) * unchart(b)), where);
    const CoverElem l = (a * b) * c, r = a * (b * c);
    assoc.measure(std::max(std::abs(l.gamma - r.gamma), std::abs(l.omega - r.omega)), where);

    const double x = 2.0 * radius(rng) - 0.95, y = 2.0 * radius(rng) - 0.95;
    const CoverElem xy = CoverElem{{x, 0}, 0} * CoverElem{{y, 0}, 0};
    real_axis.expect(xy.omega == 0.0 && xy.gamma.imag() == 0.0 && std::abs(xy.gamma.real()) < 1,
                     where);

    const long k = static_cast<long>(i % 7) - 3;
    const CoverElem za = CoverElem::deck(k) * a, az = a * CoverElem::deck(k);
    central.expect(std::abs(za.gamma - az.gamma) <= 1e-14 && za.omega == az.omega &&
                       za.omega == a.omega + CoverElem::deck(k).omega,
                   where);
  }
  for (Check* c : {&hom, &assoc, &real_axis, &central}) out.push_back(std::move(*c).result());
  return out;
}

Json verify_report_to_json(const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    Json j{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases},
           {"worst", r.worst}, {"threshold", r.threshold}};
    if (!r.passed) j["detail"] = r.detail;
    checks.push_back(std::move(j));
  }
  return {{"library_version", library_version()}, {"all_passed", all}, {"checks", checks}};
}

}  // namespace twistlo
