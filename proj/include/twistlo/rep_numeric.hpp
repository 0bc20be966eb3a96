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

#pragma once

#include "twistlo/riley_solver.hpp"
#include "twistlo/word.hpp"

namespace twistlo {

/// Real 2x2 matrix [[m11, m12], [m21, m22]].
struct Mat2 {
  double m11 = 1, m12 = 0, m21 = 0, m22 = 1;

  static constexpr Mat2 identity() { return {1, 0, 0, 1}; }

  double det() const { return m11 * m22 - m12 * m21; }
  double trace() const { return m11 + m22; }
  double max_abs() const;

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// General inverse (adjugate over det).
Mat2 inverse(const Mat2& m);

/// Max-abs entrywise difference.
double max_abs_diff(const Mat2& a, const Mat2& b);

struct Generators {
  Mat2 x;
  Mat2 y;
};

/// rho_s(x) = diag(sqrt t, 1/sqrt t) and the matching rho_s(y).
/// Throws Errc::Domain unless s > 0 and t is bounded away from 1.
Generators gen_matrices(double s, double t);

/// Same matrices built from a solution, using T-2 = s + c/s to avoid the
/// cancellation in sqrt(t) - 1/sqrt(t) for large s.
Generators gen_matrices(const RepSolution& sol);

Mat2 word_eval(const Word& w, const Mat2& x, const Mat2& y);

/// Closed form of W = rho_s(x y^-1 x^-1 y) in terms of s and t.
Mat2 w_closed_form(double s, double t);

/// W at a solution, with the same entries rearranged around
/// t-s-1 = c/s + 1 - 1/t so that no O(s^2) terms cancel.
Mat2 w_matrix(const RepSolution& sol);

/// s^2 - (t + 1/t - 2)s + 2
double trace_w(double s, double t);

/// The numbers tau_m for the given trace: via tau_num when |trace| <= 2 and
/// by the three-term recursion otherwise.
double tau_for_trace(int m, double trace);

/// W^n from the entries of W and the tau-sequence:
///   u11 = w11 tau_n - tau_{n-1},  u12 = w12 tau_n,
///   u21 = w21 tau_n,              u22 = tau_{n+1} - w11 tau_n.
/// Valid for every integer n, including negative powers.
Mat2 w_power(int n, double s, double t);
Mat2 w_power(int n, const RepSolution& sol);

/// sigma = s(T-2)/(T-2-s)
double sigma_of(double s, double t);

/// rho_s(w_*^n) from rho_s(w^n): off-diagonal entries swapped and scaled,
///   [[u11, u21/sigma], [u12 sigma, u22]].
Mat2 w_star_from_w(const Mat2& wn, double sigma);

/// max-abs of rho_s(w^n x) - rho_s(y w^n).
double relation_residual(int n, double s, double t);

struct HolonomyData {
  double A = 0;                 // sqrt t
  double B = 0;                 // closed form (t-s-1)/((1+s)t-1)
  double B_matrix = 0;          // (1,1)-entry of rho_s(L)
  double sigma = 0;
  double offdiag_residual = 0;  // max |off-diagonal| of rho_s(L)
  double diag_product = 0;      // product of the two diagonal entries
  double entry_identity_residual = 0;   // u11 u12 sigma + u21 u22
  double entry_identity_scale = 1;      // 1 + |u11 u12 sigma| + |u21 u22|
};

struct LongitudeResult {
  Mat2 matrix;
  HolonomyData holonomy;
};

/// Longitude closed form B_s = (t-s-1)/((1+s)t-1), using t-s-1 = c/s + 1 - 1/t.
double longitude_B(const RepSolution& sol);

/// rho_s(L) = rho_s(w_*^n) rho_s(w^n) and its holonomy scalars.
/// Throws Errc::OffDiagonalTooLarge if the off-diagonal part exceeds
/// 1e-6 * max-abs of the matrix.
LongitudeResult longitude(int n, const RepSolution& sol);

}  // namespace twistlo
