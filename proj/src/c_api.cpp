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

#include "twistlo/twistlo.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "twistlo/cover_lift.hpp"
#include "twistlo/error.hpp"
#include "twistlo/poly_exact.hpp"
#include "twistlo/rep_numeric.hpp"
#include "twistlo/riley_solver.hpp"
#include "twistlo/serialize.hpp"
#include "twistlo/slope_inverter.hpp"
#include "twistlo/verify.hpp"

struct twl_poly {
  twistlo::BivarPoly poly;
};

struct twl_scan {
  std::vector<twistlo::SlopeSample> samples;
};

struct twl_certificate {
  twistlo::SurgeryCertificate cert;
};

namespace {

thread_local std::string last_error;

twl_status to_status(twistlo::Errc code) { return static_cast<twl_status>(code); }

// Runs body, mapping exceptions to status codes and recording the message.
template <class F>
twl_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const twistlo::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TWL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TWL_ERR_INTERNAL;
  }
}

twl_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return TWL_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

twistlo::Tolerances to_tolerances(const twl_tolerances* tol) {
  twistlo::Tolerances t;
  if (tol != nullptr) {
    t.tol_T = tol->tol_T;
    t.tol_g = tol->tol_g;
    t.tol_cert = tol->tol_cert;
  }
  if (!(t.tol_T > 0 && t.tol_g > 0 && t.tol_cert > 0)) {
    twistlo::fail(twistlo::Errc::Domain, "tolerances must be positive");
  }
  return t;
}

mpq_class parse_rational(const char* text) {
  mpq_class q;
  if (text == nullptr || q.set_str(text, 10) != 0) {
    twistlo::fail(twistlo::Errc::InvalidArgument,
                  std::string("malformed rational '") + (text ? text : "") + "'");
  }
  if (q.get_den() == 0) twistlo::fail(twistlo::Errc::InvalidArgument, "zero denominator");
  q.canonicalize();
  return q;
}

twl_slope_sample to_c(const twistlo::SlopeSample& s) { return {s.s, s.T, s.t, s.B, s.g}; }

twl_rep_solution to_c(const twistlo::RepSolution& r) {
  return {r.n, r.s, r.T, r.t, r.trace_W, r.theta, r.offset, r.residual, r.iterations};
}

twistlo::RepSolution from_c(const twl_rep_solution& r) {
  twistlo::RepSolution sol;
  sol.n = r.n;
  sol.s = r.s;
  sol.T = r.T;
  sol.t = r.t;
  sol.trace_W = r.trace_W;
  sol.theta = r.theta;
  sol.offset = r.offset;
  sol.residual = r.residual;
  sol.iterations = r.iterations;
  return sol;
}

}  // namespace

extern "C" {

const char* twl_version(void) { return twistlo::library_version(); }

const char* twl_last_error(void) { return last_error.c_str(); }

const char* twl_status_name(twl_status status) {
  if (status == TWL_OK) return "OK";
  return twistlo::errc_name(static_cast<twistlo::Errc>(status)).data();
}

int twl_status_exit_code(twl_status status) {
  if (status == TWL_OK) return 0;
  return twistlo::is_numerical_failure(static_cast<twistlo::Errc>(status)) ? 2 : 1;
}

void twl_string_free(char* s) { std::free(s); }

twl_tolerances twl_default_tolerances(void) {
  const twistlo::Tolerances t;
  return {t.tol_T, t.tol_g, t.tol_cert};
}

twl_status twl_tau_poly(int m, twl_poly** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new twl_poly{twistlo::tau_poly(m)};
    return TWL_OK;
  });
}

twl_status twl_riley_poly(int n, twl_poly** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new twl_poly{twistlo::riley_poly(n)};
    return TWL_OK;
  });
}

void twl_poly_free(twl_poly* p) { delete p; }

int twl_poly_degree_T(const twl_poly* p) { return p ? p->poly.degree_T() : -1; }

int twl_poly_degree_s(const twl_poly* p) { return p ? p->poly.degree_s() : -1; }

twl_status twl_poly_to_json(const twl_poly* p, char** out_json) {
  if (p == nullptr || out_json == nullptr) return null_argument("p/out_json");
  return guarded([&] {
    *out_json = dup_string(twistlo::poly_to_json(p->poly).dump());
    return TWL_OK;
  });
}

twl_status twl_poly_to_text(const twl_poly* p, char** out_text) {
  if (p == nullptr || out_text == nullptr) return null_argument("p/out_text");
  return guarded([&] {
    *out_text = dup_string(p->poly.to_string());
    return TWL_OK;
  });
}

twl_status twl_poly_eval_rational(const twl_poly* p, const char* s, const char* T,
                                  char** out_value) {
  if (p == nullptr || out_value == nullptr) return null_argument("p/out_value");
  return guarded([&] {
    const mpq_class v = twistlo::eval_exact(p->poly, parse_rational(s), parse_rational(T));
    *out_value = dup_string(v.get_str());
    return TWL_OK;
  });
}

twl_status twl_poly_eval(const twl_poly* p, double s, double T, double* out) {
  if (p == nullptr || out == nullptr) return null_argument("p/out");
  return guarded([&] {
    *out = twistlo::eval_exact(p->poly, s, T);
    return TWL_OK;
  });
}

twl_status twl_tau_num(int m, double trace, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = twistlo::tau_num(m, trace);
    return TWL_OK;
  });
}

twl_status twl_phi_num(int n, double s, double T, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = twistlo::phi_num(n, s, T);
    return TWL_OK;
  });
}

twl_status twl_bracket_compute(int n, double s, twl_bracket* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const twistlo::Bracket b = twistlo::bracket(n, s);
    *out = {b.lo, b.hi, b.sign_lo, b.sign_hi};
    return TWL_OK;
  });
}

twl_status twl_t_from_T(double T, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = twistlo::t_from_T(T);
    return TWL_OK;
  });
}

twl_status twl_solve(int n, double s, double tol_T, twl_rep_solution* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = to_c(twistlo::solve(n, s, tol_T));
    return TWL_OK;
  });
}

twl_status twl_scan_all_roots(int n, double s, double* roots, size_t capacity, size_t* count) {
  if (count == nullptr || (roots == nullptr && capacity > 0)) return null_argument("roots/count");
  return guarded([&] {
    const std::vector<double> all = twistlo::scan_all_roots(n, s);
    *count = all.size();
    for (size_t i = 0; i < all.size() && i < capacity; ++i) roots[i] = all[i];
    return TWL_OK;
  });
}

twl_status twl_relation_residual(int n, double s, double t, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = twistlo::relation_residual(n, s, t);
    return TWL_OK;
  });
}

twl_status twl_longitude(const twl_rep_solution* sol, double matrix[4], twl_holonomy* out) {
  if (sol == nullptr || out == nullptr) return null_argument("sol/out");
  return guarded([&] {
    const twistlo::LongitudeResult r = twistlo::longitude(sol->n, from_c(*sol));
    if (matrix != nullptr) {
      matrix[0] = r.matrix.m11;
      matrix[1] = r.matrix.m12;
      matrix[2] = r.matrix.m21;
      matrix[3] = r.matrix.m22;
    }
    const auto& h = r.holonomy;
    *out = {h.A, h.B, h.B_matrix, h.sigma, h.offdiag_residual, h.entry_identity_residual, h.entry_identity_scale};
    return TWL_OK;
  });
}

twl_status twl_g_eval(int n, double s, double tol_T, twl_slope_sample* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = to_c(twistlo::g_eval(n, s, tol_T));
    return TWL_OK;
  });
}

twl_status twl_invert(int n, long p, long q, const twl_tolerances* tol, twl_slope_sample* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const twistlo::Tolerances t = to_tolerances(tol);
    twistlo::InvertOptions opts;
    opts.tol_g = t.tol_g;
    opts.tol_T = t.tol_T;
    *out = to_c(twistlo::invert(n, p, q, opts).sample);
    return TWL_OK;
  });
}

twl_status twl_scan_create(int n, double s_min, double s_max, int samples, double tol_T,
                           twl_scan** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new twl_scan{twistlo::scan(n, s_min, s_max, samples, tol_T)};
    return TWL_OK;
  });
}

size_t twl_scan_size(const twl_scan* scan) { return scan ? scan->samples.size() : 0; }

twl_status twl_scan_get(const twl_scan* scan, size_t i, twl_slope_sample* out) {
  if (scan == nullptr || out == nullptr) return null_argument("scan/out");
  if (i >= scan->samples.size()) {
    last_error = "scan index out of range";
    return TWL_ERR_INVALID_ARGUMENT;
  }
  *out = to_c(scan->samples[i]);
  return TWL_OK;
}

twl_status twl_scan_to_csv(const twl_scan* scan, char** out_csv) {
  if (scan == nullptr || out_csv == nullptr) return null_argument("scan/out_csv");
  return guarded([&] {
    *out_csv = dup_string(twistlo::scan_to_csv(scan->samples));
    return TWL_OK;
  });
}

void twl_scan_free(twl_scan* scan) { delete scan; }

twl_status twl_certify(int n, long p, long q, const twl_tolerances* tol, twl_certificate** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto* handle = new twl_certificate{twistlo::build_certificate(n, p, q, to_tolerances(tol))};
    *out = handle;
    if (!handle->cert.valid) {
      last_error = "certificate failed: " + handle->cert.failure;
      return TWL_ERR_CERTIFICATE_FAILED;
    }
    return TWL_OK;
  });
}

twl_status twl_certificate_get(const twl_certificate* cert, twl_certificate_data* out) {
  if (cert == nullptr || out == nullptr) return null_argument("cert/out");
  const auto& c = cert->cert;
  *out = {c.n,
          c.p,
          c.q,
          c.s_star,
          c.T,
          c.t,
          c.B,
          c.g,
          c.gamma_x,
          c.gamma_L,
          c.relator_residual,
          c.deck_shift,
          c.longitude_omega,
          c.longitude_gamma_residual,
          c.final_gamma_abs,
          c.final_omega,
          c.projection_residual,
          c.valid ? 1 : 0};
  return TWL_OK;
}

twl_status twl_certificate_to_json(const twl_certificate* cert, char** out_json) {
  if (cert == nullptr || out_json == nullptr) return null_argument("cert/out_json");
  return guarded([&] {
    *out_json = dup_string(twistlo::certificate_to_json(cert->cert).dump(2));
    return TWL_OK;
  });
}

void twl_certificate_free(twl_certificate* cert) { delete cert; }

twl_status twl_verify(char** out_report_json, int* all_passed) {
  if (out_report_json == nullptr) return null_argument("out_report_json");
  return guarded([&] {
    const auto results = twistlo::run_verify();
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    if (all_passed != nullptr) *all_passed = ok ? 1 : 0;
    *out_report_json = dup_string(twistlo::verify_report_to_json(results).dump(2));
    return TWL_OK;
  });
}

}  // extern "C"
