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

/*
 * C interface to twistlo. All functions return a twl_status; on failure a
 * message is available from twl_last_error() on the calling thread.
 * Handles are opaque and must be released with the matching *_free call.
 * Strings returned through char** are owned by the caller and released with
 * twl_string_free.
 */
#ifndef TWISTLO_H
#define TWISTLO_H

#include <stddef.h>

#if defined(TWISTLO_BUILDING_LIBRARY)
#define TWL_API __attribute__((visibility("default")))
#else
#define TWL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum twl_status {
  TWL_OK = 0,
  TWL_ERR_DOMAIN = 1,
  TWL_ERR_CLOSED_FORM_AVAILABLE = 2,
  TWL_ERR_NON_CONVERGENCE = 3,
  TWL_ERR_OFF_DIAGONAL = 4,
  TWL_ERR_SLOPE_OUT_OF_RANGE = 5,
  TWL_ERR_NO_BRACKET = 6,
  TWL_ERR_RELATOR_NOT_CENTRAL = 7,
  TWL_ERR_LONGITUDE_OMEGA = 8,
  TWL_ERR_CERTIFICATE_FAILED = 9,
  TWL_ERR_INVALID_ARGUMENT = 10,
  TWL_ERR_INTERNAL = 99
} twl_status;

typedef struct twl_poly twl_poly;
typedef struct twl_scan twl_scan;
typedef struct twl_certificate twl_certificate;

typedef struct twl_bracket {
  double lo, hi;
  int sign_lo, sign_hi;
} twl_bracket;

typedef struct twl_rep_solution {
  int n;
  double s, T, t;
  double trace_W, theta, offset;
  double residual;
  int iterations;
} twl_rep_solution;

typedef struct twl_holonomy {
  double A, B, B_matrix, sigma;
  double offdiag_residual, entry_identity_residual, entry_identity_scale;
} twl_holonomy;

typedef struct twl_slope_sample {
  double s, T, t, B, g;
} twl_slope_sample;

typedef struct twl_tolerances {
  double tol_T;    /* absolute, on T */
  double tol_g;    /* absolute, on g(s) - p/q */
  double tol_cert; /* on |gamma| and |omega| of the final cover element */
} twl_tolerances;

typedef struct twl_certificate_data {
  int n;
  long p, q;
  double s_star, T, t, B, g;
  double gamma_x, gamma_L;
  double relator_residual;
  long deck_shift;
  double longitude_omega, longitude_gamma_residual;
  double final_gamma_abs, final_omega, projection_residual;
  int valid;
} twl_certificate_data;

TWL_API const char* twl_version(void);
TWL_API const char* twl_last_error(void);
TWL_API const char* twl_status_name(twl_status status);
/* 0 = success, 1 = bad input, 2 = numerical failure. */
TWL_API int twl_status_exit_code(twl_status status);
TWL_API void twl_string_free(char* s);
TWL_API twl_tolerances twl_default_tolerances(void);

/* Exact polynomials. */
TWL_API twl_status twl_tau_poly(int m, twl_poly** out);
TWL_API twl_status twl_riley_poly(int n, twl_poly** out);
TWL_API void twl_poly_free(twl_poly* p);
TWL_API int twl_poly_degree_T(const twl_poly* p);
TWL_API int twl_poly_degree_s(const twl_poly* p);
TWL_API twl_status twl_poly_to_json(const twl_poly* p, char** out_json);
TWL_API twl_status twl_poly_to_text(const twl_poly* p, char** out_text);
/* s and T as decimal rationals "a" or "a/b"; result written as "a/b" or "a". */
TWL_API twl_status twl_poly_eval_rational(const twl_poly* p, const char* s, const char* T,
                                          char** out_value);
TWL_API twl_status twl_poly_eval(const twl_poly* p, double s, double T, double* out);

/* Riley's equation. */
TWL_API twl_status twl_tau_num(int m, double trace, double* out);
TWL_API twl_status twl_phi_num(int n, double s, double T, double* out);
TWL_API twl_status twl_bracket_compute(int n, double s, twl_bracket* out);
TWL_API twl_status twl_t_from_T(double T, double* out);
TWL_API twl_status twl_solve(int n, double s, double tol_T, twl_rep_solution* out);
/* Writes up to capacity roots; *count receives the total found. */
TWL_API twl_status twl_scan_all_roots(int n, double s, double* roots, size_t capacity,
                                      size_t* count);

/* Representation. matrix is row-major [m11, m12, m21, m22]. */
TWL_API twl_status twl_relation_residual(int n, double s, double t, double* out);
TWL_API twl_status twl_longitude(const twl_rep_solution* sol, double matrix[4],
                                 twl_holonomy* out);

/* Slope map. */
TWL_API twl_status twl_g_eval(int n, double s, double tol_T, twl_slope_sample* out);
TWL_API twl_status twl_invert(int n, long p, long q, const twl_tolerances* tol,
                              twl_slope_sample* out);
TWL_API twl_status twl_scan_create(int n, double s_min, double s_max, int samples, double tol_T,
                                   twl_scan** out);
TWL_API size_t twl_scan_size(const twl_scan* scan);
TWL_API twl_status twl_scan_get(const twl_scan* scan, size_t i, twl_slope_sample* out);
TWL_API twl_status twl_scan_to_csv(const twl_scan* scan, char** out_csv);
TWL_API void twl_scan_free(twl_scan* scan);

/* Surgery certificate. On TWL_ERR_CERTIFICATE_FAILED *out still receives the
 * failing certificate so its diagnostics can be inspected. tol may be NULL. */
TWL_API twl_status twl_certify(int n, long p, long q, const twl_tolerances* tol,
                               twl_certificate** out);
TWL_API twl_status twl_certificate_get(const twl_certificate* cert, twl_certificate_data* out);
TWL_API twl_status twl_certificate_to_json(const twl_certificate* cert, char** out_json);
TWL_API void twl_certificate_free(twl_certificate* cert);

/* Invariant suites over the standard grid; report is JSON. */
TWL_API twl_status twl_verify(char** out_report_json, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* TWISTLO_H */
