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

#include <complex>
#include <string>

#include "twistlo/rep_numeric.hpp"
#include "twistlo/slope_inverter.hpp"

namespace twistlo {

using Complex = std::complex<double>;

/// Element [[alpha, beta], [conj beta, conj alpha]] of SU(1,1).
struct SU11Elem {
  Complex alpha{1, 0};
  Complex beta{0, 0};

  static SU11Elem identity() { return {}; }
  /// |alpha|^2 - |beta|^2, which is 1 for a group element.
  double norm() const { return std::norm(alpha) - std::norm(beta); }

  friend SU11Elem operator*(const SU11Elem& a, const SU11Elem& b) {
    return {a.alpha * b.alpha + a.beta * std::conj(b.beta),
            a.alpha * b.beta + a.beta * std::conj(b.alpha)};
  }
};

SU11Elem inverse(const SU11Elem& u);

/// Max-abs entrywise distance between the two 2x2 complex matrices.
double max_abs_diff(const SU11Elem& a, const SU11Elem& b);

/// Element (gamma, omega) of the universal cover of SL2(R): |gamma| < 1 and
/// omega is a real number, never reduced mod 2 pi. The covering map sends it
/// to alpha = e^{i omega}/sqrt(1-|gamma|^2), beta = gamma alpha.
struct CoverElem {
  Complex gamma{0, 0};
  double omega = 0;

  static CoverElem identity() { return {}; }
  /// Central element (0, 2 pi k).
  static CoverElem deck(long k);
};

/// Conjugation A -> J A J^-1 with J = [[1, -i], [1, i]].
/// Throws Errc::Domain unless det A = 1 within 1e-8 relative.
SU11Elem to_su11(const Mat2& m);

/// Inverse of to_su11.
Mat2 from_su11(const SU11Elem& u);

/// gamma = beta/alpha, omega = arg alpha in (-pi, pi].
CoverElem chart(const SU11Elem& u);

/// Covering projection to SU(1,1).
SU11Elem unchart(const CoverElem& e);

/// Group law
///   gamma'' = (gamma' + gamma e^{-2i omega'}) / (1 + gamma conj(gamma') e^{-2i omega'})
///   omega'' = omega + omega' + (1/2i) log(z / conj z),  z = 1 + gamma conj(gamma') e^{-2i omega'}
/// with the principal logarithm. Re z > 0 always holds since |gamma|, |gamma'| < 1;
/// a violation throws Errc::Internal.
CoverElem cover_mul(const CoverElem& a, const CoverElem& b);
inline CoverElem operator*(const CoverElem& a, const CoverElem& b) { return cover_mul(a, b); }

/// (gamma, omega)^-1 = (-gamma e^{2i omega}, -omega).
CoverElem inverse(const CoverElem& a);

CoverElem cover_pow(const CoverElem& a, long k);

struct LiftedGenerators {
  CoverElem x;
  CoverElem y;
  double relator_residual = 0;
  long deck_shift = 0;  // k in the correction y -> y (0, 2 pi k)
};

/// Lifts rho_s(x), rho_s(y) to the cover. x is lifted with omega = 0; y takes
/// its principal chart value times the unique central element that makes the
/// lifted relator w^n x w^-n y^-1 equal to (0,0).
/// Throws Errc::RelatorNotCentral if the lifted relator is farther than tol
/// from (0,0). Rounding in the word product grows roughly like s^4 eps, so
/// the default only has to separate solutions from non-solutions.
LiftedGenerators lift_generators(int n, const RepSolution& sol, double tol = 1e-4);

/// Lift of the longitude w_*^n w^n. Its omega is independent of the central
/// corrections (zero exponent sum in x and y).
/// Throws Errc::LongitudeOmegaNonzero if |omega| > tol.
CoverElem lifted_longitude(int n, const CoverElem& x, const CoverElem& y, double tol = 1e-6);

struct Tolerances {
  double tol_T = kDefaultTolT;
  double tol_g = 1e-9;
  double tol_cert = 1e-6;
};

/// Evidence that rho~(x^p L^q) = (0,0) for slope p/q.
struct SurgeryCertificate {
  int n = 0;
  long p = 0;
  long q = 1;
  double s_star = 0;
  double T = 0;
  double t = 0;
  double B = 0;
  double g = 0;
  double gamma_x = 0;  // (t-1)/(t+1)
  double gamma_L = 0;  // (B^2-1)/(B^2+1)
  double relator_residual = 0;
  long deck_shift = 0;
  double longitude_omega = 0;
  double longitude_gamma_residual = 0;  // |gamma(L~) - gamma_L|
  double final_gamma_abs = 0;
  double final_omega = 0;
  double projection_residual = 0;  // max-abs of chi(final) - I in SL2(R)
  Tolerances tolerances;
  bool valid = false;
  std::string failure;  // empty when valid
};

/// Runs the whole pipeline without throwing on a failed final check:
/// invert the slope, solve, lift, and evaluate x~^p L~^q.
/// Input and solver errors still throw (SlopeOutOfRange, NoBracketFound, ...).
SurgeryCertificate build_certificate(int n, long p, long q, const Tolerances& tol = {});

/// As build_certificate, but throws Errc::CertificateFailed with diagnostics
/// when the final element is not (0,0) within tol_cert.
SurgeryCertificate certificate(int n, long p, long q, const Tolerances& tol = {});

}  // namespace twistlo
