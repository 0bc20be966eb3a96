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

#include "twistlo/cover_lift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "twistlo/error.hpp"

namespace twistlo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDetTol = 1e-8;
constexpr double kProjectionTol = 1e-8;

}  // namespace

SU11Elem inverse(const SU11Elem& u) {
  // Inverse of [[a, b], [conj b, conj a]] with unit norm.
  return {std::conj(u.alpha), -u.beta};
}

double max_abs_diff(const SU11Elem& a, const SU11Elem& b) {
  return std::max(std::abs(a.alpha - b.alpha), std::abs(a.beta - b.beta));
}

CoverElem CoverElem::deck(long k) { return {Complex(0, 0), kTwoPi * static_cast<double>(k)}; }

SU11Elem to_su11(const Mat2& m) {
  const double scale = 1.0 + std::abs(m.m11 * m.m22) + std::abs(m.m12 * m.m21);
  if (!(std::abs(m.det() - 1.0) <= kDetTol * scale)) {
    std::ostringstream os;
    os.precision(17);
    os << "matrix is not in SL2(R): det = " << m.det();
    fail(Errc::Domain, os.str());
  }
  const double a = m.m11, b = m.m12, c = m.m21, d = m.m22;
  return {Complex((a + d) / 2.0, (b - c) / 2.0), Complex((a - d) / 2.0, -(b + c) / 2.0)};
}

Mat2 from_su11(const SU11Elem& u) {
  const double ar = u.alpha.real(), ai = u.alpha.imag();
  const double br = u.beta.real(), bi = u.beta.imag();
  return {ar + br, ai - bi, -ai - bi, ar - br};
}

CoverElem chart(const SU11Elem& u) {
  CoverElem e;
  e.gamma = u.beta / u.alpha;
  e.omega = std::arg(u.alpha);
  if (e.omega == -std::numbers::pi) e.omega = std::numbers::pi;
  if (!(std::abs(e.gamma) < 1.0)) fail(Errc::Domain, "SU(1,1) element has |beta| >= |alpha|");
  return e;
}

SU11Elem unchart(const CoverElem& e) {
  const Complex alpha = std::polar(1.0 / std::sqrt(1.0 - std::norm(e.gamma)), e.omega);
  return {alpha, e.gamma * alpha};
}

CoverElem cover_mul(const CoverElem& a, const CoverElem& b) {
  const Complex rot = std::polar(1.0, -2.0 * b.omega);
  const Complex z = 1.0 + a.gamma * std::conj(b.gamma) * rot;
  if (!(z.real() > 0.0)) {
    fail(Errc::Internal, "principal branch violated in cover multiplication");
  }
  CoverElem r;
  r.gamma = (b.gamma + a.gamma * rot) / z;
  const Complex correction = std::log(z / std::conj(z)) / Complex(0.0, 2.0);
  r.omega = a.omega + b.omega + correction.real();
  return r;
}

CoverElem inverse(const CoverElem& a) {
  return {-a.gamma * std::polar(1.0, 2.0 * a.omega), -a.omega};
}

CoverElem cover_pow(const CoverElem& a, long k) {
  const CoverElem base = k < 0 ? inverse(a) : a;
  CoverElem acc = CoverElem::identity();
  for (long i = 0; i < std::abs(k); ++i) acc = acc * base;
  return acc;
}

LiftedGenerators lift_generators(int n, const RepSolution& sol, double tol) {
  if (n != sol.n) fail(Errc::InvalidArgument, "solution was computed for a different n");
  const Generators g = gen_matrices(sol);
  LiftedGenerators out;
  out.x = chart(to_su11(g.x));
  const CoverElem y0 = chart(to_su11(g.y));
  const Word relator = relator_word(n);

  const CoverElem r0 = evaluate_word(relator, out.x, y0);
  if (!(std::abs(r0.gamma) <= tol)) {
    std::ostringstream os;
    os.precision(17);
    os << "lifted relator is not central: |gamma| = " << std::abs(r0.gamma)
       << " (n = " << n << ", s = " << sol.s << ")";
    fail(Errc::RelatorNotCentral, os.str());
  }
  // y appears once, inverted, in the relator and w has zero y-exponent sum,
  // so y -> y (0, 2 pi k) shifts the relator's omega by -2 pi k.
  out.deck_shift = std::lround(r0.omega / kTwoPi);
  out.y = y0 * CoverElem::deck(out.deck_shift);

  const CoverElem r = evaluate_word(relator, out.x, out.y);
  out.relator_residual = std::max(std::abs(r.gamma), std::abs(r.omega));
  if (!(out.relator_residual <= tol)) {
    std::ostringstream os;
    os.precision(17);
    os << "lifted relator did not normalize to (0,0): residual " << out.relator_residual;
    fail(Errc::RelatorNotCentral, os.str());
  }
  return out;
}

CoverElem lifted_longitude(int n, const CoverElem& x, const CoverElem& y, double tol) {
  const CoverElem L = evaluate_word(longitude_word(n), x, y);
  if (!(std::abs(L.omega) <= tol)) {
    std::ostringstream os;
    os.precision(17);
    os << "lifted longitude has omega = " << L.omega << ", expected 0";
    fail(Errc::LongitudeOmegaNonzero, os.str());
  }
  return L;
}

SurgeryCertificate build_certificate(int n, long p, long q, const Tolerances& tol) {
  InvertOptions iopts;
  iopts.tol_g = tol.tol_g;
  iopts.tol_T = tol.tol_T;
  const Inversion inv = invert(n, p, q, iopts);

  SurgeryCertificate cert;
  cert.n = n;
  cert.p = p;
  cert.q = q;
  cert.tolerances = tol;
  cert.s_star = inv.sample.s;
  cert.g = inv.sample.g;

  const RepSolution sol = solve(n, cert.s_star, tol.tol_T);
  const LongitudeResult lon = longitude(n, sol);
  cert.T = sol.T;
  cert.t = sol.t;
  cert.B = lon.holonomy.B;
  cert.gamma_x = (sol.t - 1.0) / (sol.t + 1.0);
  const double B2 = cert.B * cert.B;
  cert.gamma_L = (B2 - 1.0) / (B2 + 1.0);

  const LiftedGenerators lg = lift_generators(n, sol, tol.tol_cert);
  cert.relator_residual = lg.relator_residual;
  cert.deck_shift = lg.deck_shift;

  const CoverElem L = lifted_longitude(n, lg.x, lg.y, tol.tol_cert);
  cert.longitude_omega = L.omega;
  cert.longitude_gamma_residual = std::abs(L.gamma - Complex(cert.gamma_L, 0.0));

  const CoverElem final_elem = cover_pow(lg.x, p) * cover_pow(L, q);
  cert.final_gamma_abs = std::abs(final_elem.gamma);
  cert.final_omega = final_elem.omega;
  cert.projection_residual = max_abs_diff(from_su11(unchart(final_elem)), Mat2::identity());

  std::ostringstream why;
  why.precision(17);
  if (!(cert.final_gamma_abs < tol.tol_cert)) {
    why << "|gamma| of x^p L^q is " << cert.final_gamma_abs << "; ";
  }
  if (!(std::abs(cert.final_omega) < tol.tol_cert)) {
    why << "omega of x^p L^q is " << cert.final_omega << "; ";
  }
  if (!(cert.projection_residual < kProjectionTol)) {
    why << "projection differs from I by " << cert.projection_residual << "; ";
  }
  cert.failure = why.str();
  cert.valid = cert.failure.empty();
  return cert;
}

SurgeryCertificate certificate(int n, long p, long q, const Tolerances& tol) {
  SurgeryCertificate cert = build_certificate(n, p, q, tol);
  if (!cert.valid) {
    std::ostringstream os;
    os << "certificate for n = " << n << ", r = " << p << "/" << q << " failed: " << cert.failure;
    fail(Errc::CertificateFailed, os.str());
  }
  return cert;
}

}  // namespace twistlo
