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

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

namespace twistlo {

/// Exponent pair of a monomial s^s_deg T^T_deg. Ordered by T-degree first,
/// then s-degree; this is also the serialization order.
struct Exponents {
  int T_deg = 0;
  int s_deg = 0;

  auto operator<=>(const Exponents&) const = default;
};

/// Sparse bivariate polynomial in (s, T) with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class BivarPoly {
 public:
  using TermMap = std::map<Exponents, mpz_class>;

  BivarPoly() = default;

  static BivarPoly constant(const mpz_class& c);
  static BivarPoly monomial(int s_deg, int T_deg, const mpz_class& c);
  static BivarPoly s() { return monomial(1, 0, 1); }
  static BivarPoly T() { return monomial(0, 1, 1); }

  mpz_class coeff(int s_deg, int T_deg) const;
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Both return -1 for the zero polynomial.
  int degree_T() const noexcept;
  int degree_s() const noexcept;

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
  friend BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
  friend BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  /// Terms as "c*s^i*T^j" in serialization order.
  std::string to_string() const;

 private:
  void accumulate(const Exponents& e, const mpz_class& c);

  TermMap terms_;
};

/// The sequence tau_m as a polynomial in (s, T): tau_0 = 0, tau_1 = 1,
/// tau_{m+1} = (s^2 - (T-2)s + 2) tau_m - tau_{m-1}, tau_{-m} = -tau_m.
/// Non-negative indices are memoized process-wide (thread-safe).
BivarPoly tau_poly(int m);

/// The trace polynomial s^2 - (T-2)s + 2 of W.
BivarPoly trace_poly();

/// Riley polynomial phi_n(s,T) = tau_{n+1} - (T-1-s) tau_n of the twist knot
/// K_n. Throws Errc::Domain for n in {0, -1}.
BivarPoly riley_poly(int n);

mpq_class eval_exact(const BivarPoly& p, const mpq_class& s, const mpq_class& T);

/// Exact evaluation at the binary values of s and T, rounded once at the end.
double eval_exact(const BivarPoly& p, double s, double T);

}  // namespace twistlo
