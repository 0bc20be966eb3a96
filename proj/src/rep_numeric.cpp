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

#include "twistlo/rep_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twistlo/error.hpp"

namespace twistlo {

namespace {

constexpr double kOffDiagonalRelTol = 1e-6;

double sigma_from_solution(const RepSolution& sol) {
  // T-2 = s + u and T-2-s = u with u = c/s.
  const double u = sol.offset / sol.s;
  return sol.s * (sol.s + u) / u;
}

Mat2 w_power_impl(int n, const Mat2& w, auto&& tau) {
  const double tn = tau(n);
  return {w.m11 * tn - tau(n - 1), w.m12 * tn, w.m21 * tn, tau(n + 1) - w.m11 * tn};
}

}  // namespace

double Mat2::max_abs() const {
  return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
}

Mat2 inverse(const Mat2& m) {
  const double d = m.det();
  return {m.m22 / d, -m.m12 / d, -m.m21 / d, m.m11 / d};
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12),
                   std::abs(a.m21 - b.m21), std::abs(a.m22 - b.m22)});
}

Generators gen_matrices(double s, double t) {
  if (!(s > 0) || !std::isfinite(s)) fail(Errc::Domain, "s must be a positive finite number");
  if (!(t - 1.0 > 1e-12) || !std::isfinite(t)) {
    std::ostringstream os;
    os << "t = " << t << " too close to 1: sqrt(t) - 1/sqrt(t) vanishes";
    fail(Errc::Domain, os.str());
  }
  const double r = std::sqrt(t);
  const double k = (t - 1.0) / r;
  Generators g;
  g.x = {r, 0, 0, 1.0 / r};
  g.y = {(t - s - 1.0) / k, s / (k * k) - 1.0, -s, (s + 1.0 - 1.0 / t) / k};
  return g;
}

Generators gen_matrices(const RepSolution& sol) {
  const double s = sol.s;
  const double t = sol.t;
  const double u = sol.offset / s;
  const double r = std::sqrt(t);
  const double k = std::sqrt(s + u);
  Generators g;
  g.x = {r, 0, 0, 1.0 / r};
  g.y = {(u + 1.0 - 1.0 / t) / k, -u / (s + u), -s, (s + 1.0 - 1.0 / t) / k};
  return g;
}

Mat2 word_eval(const Word& w, const Mat2& x, const Mat2& y) {
  return evaluate_word(w, x, y);
}

Mat2 w_closed_form(double s, double t) {
  const double r = std::sqrt(t);
  const double k2 = (t - 1.0) * (t - 1.0) / t;
  return {1.0 + s - s * t + s * s * t / (t - 1.0),
          (t - 1.0 + s * t) / r * (k2 - s) / k2,
          s * (1.0 + s - t) / r,
          1.0 + s - s * s / (t - 1.0) - s / t};
}

Mat2 w_matrix(const RepSolution& sol) {
  const double s = sol.s;
  const double t = sol.t;
  const double u = sol.offset / s;            // T - 2 - s
  const double d = u + 1.0 - 1.0 / t;         // t - s - 1
  const double r = std::sqrt(t);
  return {1.0 + s - s * t * d / (t - 1.0),
          (t - 1.0 + s * t) / r * u / (s + u),
          -s * d / r,
          1.0 + s * d / (t - 1.0) - s / t};
}

double trace_w(double s, double t) {
  const double k2 = (t - 1.0) * (t - 1.0) / t;  // T - 2
  return 2.0 - s * (k2 - s);
}

double tau_for_trace(int m, double trace) {
  if (std::abs(trace) <= 2.0) return tau_num(m, trace);
  if (m < 0) return -tau_for_trace(-m, trace);
  double prev = 0.0, cur = 1.0;
  if (m == 0) return 0.0;
  for (int k = 1; k < m; ++k) {
    const double next = trace * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Mat2 w_power(int n, double s, double t) {
  const double tr = trace_w(s, t);
  return w_power_impl(n, w_closed_form(s, t), [tr](int m) { return tau_for_trace(m, tr); });
}

Mat2 w_power(int n, const RepSolution& sol) {
  const double theta = sol.theta;
  return w_power_impl(n, w_matrix(sol), [theta](int m) { return tau_at_angle(m, theta); });
}

double sigma_of(double s, double t) {
  const double k2 = (t - 1.0) * (t - 1.0) / t;
  return s * k2 / (k2 - s);
}

Mat2 w_star_from_w(const Mat2& wn, double sigma) {
  return {wn.m11, wn.m21 / sigma, wn.m12 * sigma, wn.m22};
}

double relation_residual(int n, double s, double t) {
  const Generators g = gen_matrices(s, t);
  const Mat2 wn = w_power(n, s, t);
  return max_abs_diff(wn * g.x, g.y * wn);
}

double longitude_B(const RepSolution& sol) {
  const double s = sol.s;
  const double t = sol.t;
  return (sol.offset / s + 1.0 - 1.0 / t) / ((1.0 + s) * t - 1.0);
}

LongitudeResult longitude(int n, const RepSolution& sol) {
  if (n != sol.n) fail(Errc::InvalidArgument, "solution was computed for a different n");
  const Mat2 wn = w_power(n, sol);
  const double sigma = sigma_from_solution(sol);
  const Mat2 L = w_star_from_w(wn, sigma) * wn;

  LongitudeResult res;
  res.matrix = L;
  HolonomyData& h = res.holonomy;
  h.A = std::sqrt(sol.t);
  h.B = longitude_B(sol);
  h.B_matrix = L.m11;
  h.sigma = sigma;
  h.offdiag_residual = std::max(std::abs(L.m12), std::abs(L.m21));
  h.diag_product = L.m11 * L.m22;
  h.entry_identity_residual = wn.m11 * wn.m12 * sigma + wn.m21 * wn.m22;
  h.entry_identity_scale = 1.0 + std::abs(wn.m11 * wn.m12 * sigma) + std::abs(wn.m21 * wn.m22);

  if (h.offdiag_residual > kOffDiagonalRelTol * L.max_abs()) {
    std::ostringstream os;
    os.precision(17);
    os << "longitude matrix is not diagonal: off-diagonal " << h.offdiag_residual
       << " vs norm " << L.max_abs() << " (n = " << n << ", s = " << sol.s
       << ", t = " << sol.t << "); the parameters do not solve Riley's equation";
    fail(Errc::OffDiagonalTooLarge, os.str());
  }
  return res;
}

}  // namespace twistlo
