/*
 * Copyright 2026 The hllab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the hllab shared library: norms of homogeneous polynomials
 * and multilinear forms on l_p balls, the exponent/constant calculators of
 * the Hardy-Littlewood family of inequalities, and the named sharpness
 * experiments.
 *
 * Conventions:
 *   - every fallible call returns hll_status; HLL_OK is 0
 *   - on failure, hll_last_error() returns a thread-local message
 *   - objects are opaque handles released with their hll_*_free function
 *   - strings returned through char** are owned by the caller and released
 *     with hll_string_free
 *   - the exponent value infinity is any IEEE +inf double (HUGE_VAL)
 *   - complex data travels as separate re/im arrays; im may be NULL for
 *     real inputs
 */

#ifndef HLLAB_H
#define HLLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HLL_API __declspec(dllexport)
#else
#define HLL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hll_status {
  HLL_OK = 0,
  HLL_ERR_ARGUMENT = 1, /* precondition violated (dimension, exponent, ...) */
  HLL_ERR_PARSE = 2,    /* malformed JSON or wrong shape */
  HLL_ERR_IO = 3,       /* file could not be read or written */
  HLL_ERR_INTERNAL = 4
} hll_status;

typedef enum hll_field { HLL_FIELD_REAL = 0, HLL_FIELD_COMPLEX = 1 } hll_field;

typedef struct hll_poly hll_poly;         /* homogeneous polynomial */
typedef struct hll_form hll_form;         /* multilinear form */
typedef struct hll_estimate hll_estimate; /* certified norm lower bound */

HLL_API const char* hll_version(void);

/* Message describing the most recent failure on this thread. */
HLL_API const char* hll_last_error(void);

HLL_API void hll_string_free(char* s);

/* ---------------- construction and serialization ---------------- */

/* Polynomial JSON: {"field":"real"|"complex","n":...,"m":...,
 *                   "coeffs":[{"alpha":[...],"re":...,"im":...},...]}
 * Form JSON:       {"field":...,"n":...,"m":...,
 *                   "entries":[{"re":...,"im":...},...]}   (row-major) */
HLL_API hll_status hll_poly_from_json(const char* json_text, hll_poly** out);
HLL_API hll_status hll_poly_to_json(const hll_poly* p, char** out_json);
HLL_API void hll_poly_free(hll_poly* p);

HLL_API hll_status hll_form_from_json(const char* json_text, hll_form** out);
HLL_API hll_status hll_form_to_json(const hll_form* t, char** out_json);
HLL_API void hll_form_free(hll_form* t);

/* Bilinear identity tensor sum_j x_j y_j. */
HLL_API hll_status hll_diagonal_form(int n, hll_form** out);

/* Random m-linear form with all N^m coefficients +1 or -1. */
HLL_API hll_status hll_ksz_form(int m, int n, uint64_t seed, hll_form** out);

HLL_API hll_status hll_poly_dims(const hll_poly* p, int* n, int* m, hll_field* field);
HLL_API hll_status hll_form_dims(const hll_form* t, int* n, int* m, hll_field* field);

/* ---------------- algebra ---------------- */

HLL_API hll_status hll_poly_eval(const hll_poly* p, const double* re, const double* im,
                                 int n, double* out_re, double* out_im);

/* points: m vectors of length n, slot-major (re[s*n + j]). */
HLL_API hll_status hll_form_eval(const hll_form* t, const double* re, const double* im,
                                 int m, int n, double* out_re, double* out_im);

HLL_API hll_status hll_polarize(const hll_poly* p, hll_form** out);
HLL_API hll_status hll_restrict(const hll_form* t, hll_poly** out);
HLL_API hll_status hll_symmetrize(const hll_form* t, hll_form** out);

/* l_r norm of the coefficient multiset; r = +inf for the sup. */
HLL_API hll_status hll_poly_coeff_norm(const hll_poly* p, double r, double* out);
HLL_API hll_status hll_form_coeff_norm(const hll_form* t, double r, double* out);

/* Bilinear only: inner exponent over the first index, outer over the
 * second. */
HLL_API hll_status hll_mixed_norm_bilinear(const hll_form* t, double r_inner,
                                           double r_outer, double* out);

/* ---------------- norms on l_p balls ---------------- */

HLL_API hll_status hll_dual_exponent(double p, double* out);

HLL_API hll_status hll_poly_norm_lower(const hll_poly* p, double ball_p, int restarts,
                                       uint64_t seed, hll_estimate** out);

/* ps: one ball exponent per slot, length m. */
HLL_API hll_status hll_form_norm_lower(const hll_form* t, const double* ps, int m,
                                       int restarts, uint64_t seed, hll_estimate** out);

HLL_API hll_status hll_form_norm_upper(const hll_form* t, const double* ps, int m,
                                       double* out);

HLL_API hll_status hll_poly_norm_bracket(const hll_poly* p, double ball_p, int restarts,
                                         uint64_t seed, double* lower, double* upper);

HLL_API double hll_estimate_value(const hll_estimate* e);
HLL_API int hll_estimate_converged(const hll_estimate* e);
HLL_API hll_status hll_estimate_to_json(const hll_estimate* e, char** out_json);
HLL_API void hll_estimate_free(hll_estimate* e);

/* ---------------- exponent and constant calculators ---------------- */

HLL_API hll_status hll_multilinear_exponent(int m, double p, double* out);
HLL_API hll_status hll_polynomial_exponent(int m, double p, double* out);

/* "sup-norm", "subquadratic", "high-p" or "unsupported"; static storage. */
HLL_API hll_status hll_regime(int m, double p, const char** out_name);

HLL_API hll_status hll_bilinear_mixed_exponents(double p, double q, double* inner,
                                                double* outer);
HLL_API hll_status hll_symmetric_exponent(double p, double q, double* out);
HLL_API hll_status hll_interpolate_exponent_pairs(double a_inner, double a_outer,
                                                  double b_inner, double b_outer,
                                                  double theta, double* out_inner,
                                                  double* out_outer);
HLL_API hll_status hll_ksz_alpha(double p, double* out);
HLL_API hll_status hll_ksz_exponent(int m, const double* ps, double* out);

/* method: "multilinear", "general" or "harris". */
HLL_API hll_status hll_constant_upper_bound(int m, double p, hll_field field,
                                            const char* method, double* out);

/* ---------------- experiment runner ---------------- */

/* One "name\tdescription\n" line per experiment. */
HLL_API hll_status hll_list_experiments(char** out_text);

/* Config JSON with every parameter at its default for the experiment. */
HLL_API hll_status hll_default_config(const char* experiment, char** out_json);

/* Validates and runs a config, writing <output>/<experiment>.csv and
 * <output>/manifest.json. out_dir_override and seed_override (pass
 * seed_override_set = 0 to keep the config seed) tweak the config before
 * validation. The run's exit code lands in *exit_code: 0 all checks
 * passed, 1 numeric failure, 2 schema violation, 3 i/o failure. The
 * return value only reports API misuse (null arguments, unparseable
 * JSON text). */
HLL_API hll_status hll_run_config(const char* config_json, const char* out_dir_override,
                                  uint64_t seed_override, int seed_override_set,
                                  int* exit_code);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HLLAB_H */
