/* SPDX-License-Identifier: Apache-2.0 */
#ifndef TWOMAT_TWOMAT_H
#define TWOMAT_TWOMAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(TWOMAT_BUILDING)
#define TWOMAT_API __attribute__((visibility("default")))
#else
#define TWOMAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Correlators of the formal two-matrix model on genus-zero spectral curves. All values
 * use the reduced convention: differentials are divided by their dz factors. */

typedef enum twomat_status {
  TWOMAT_OK = 0,
  TWOMAT_E_ZERO_POLYNOMIAL,
  TWOMAT_E_DEGREE_ZERO,
  TWOMAT_E_NO_CONVERGENCE,
  TWOMAT_E_CENTER_MISMATCH,
  TWOMAT_E_DIVISION_BY_ZERO_SERIES,
  TWOMAT_E_COMPOSE_VALUATION,
  TWOMAT_E_SINGULAR_JACOBIAN,
  TWOMAT_E_RESIDUAL_TOO_LARGE,
  TWOMAT_E_WINDOW_MISS,
  TWOMAT_E_NON_FINITE,
  TWOMAT_E_PARSE,
  TWOMAT_E_NON_SIMPLE_BRANCH_POINT,
  TWOMAT_E_SHEET_COUNT_MISMATCH,
  TWOMAT_E_NEAR_BRANCH_POINT,
  TWOMAT_E_COINCIDENT_POINTS,
  TWOMAT_E_TRUNCATION_EXHAUSTED,
  TWOMAT_E_BRANCH_POINT_ARGUMENT,
  TWOMAT_E_SHEET_INDEX_OUT_OF_RANGE,
  TWOMAT_E_BUDGET_EXCEEDED,
  TWOMAT_E_PARTITION_BUDGET_EXCEEDED,
  TWOMAT_E_NOT_HYPERELLIPTIC,
  TWOMAT_E_INVALID_ARGUMENT,
  TWOMAT_E_IO,
  TWOMAT_E_NULL_POINTER,
  TWOMAT_E_INTERNAL
} twomat_status;

typedef enum twomat_method {
  TWOMAT_METHOD_CUBIC = 0,
  TWOMAT_METHOD_EFFECTIVE,
  TWOMAT_METHOD_DIAGRAMS,
  TWOMAT_METHOD_ONEMATRIX
} twomat_method;

typedef enum twomat_theory { TWOMAT_THEORY_CUBIC = 0, TWOMAT_THEORY_EFFECTIVE } twomat_theory;

typedef struct twomat_complex {
  double re;
  double im;
} twomat_complex;

typedef struct twomat_config {
  int order;                 /* series truncation; 0 selects 6h + 2n + 8 */
  twomat_complex basepoint;  /* basepoint o of dS_{q,o} */
  double tol;
  int max_retries;           /* order doublings before TruncationExhausted */
} twomat_config;

typedef struct twomat_result {
  twomat_complex value;
  int order_used;
  int retries;
  double eps_residual; /* largest negative-power coefficient of the coincidence regulator */
  double dropped;      /* largest principal-part coefficient beyond the pole bound */
} twomat_result;

typedef struct twomat_curve twomat_curve;

TWOMAT_API const char* twomat_status_name(twomat_status s);
/* Message of the last failed call on this thread. */
TWOMAT_API const char* twomat_last_error(void);
TWOMAT_API void twomat_string_free(char* s);

TWOMAT_API void twomat_config_default(twomat_config* cfg);

TWOMAT_API twomat_status twomat_curve_from_json(const char* text, twomat_curve** out);
TWOMAT_API twomat_status twomat_curve_from_file(const char* path, twomat_curve** out);
TWOMAT_API void twomat_curve_free(twomat_curve* c);
TWOMAT_API int twomat_curve_d1(const twomat_curve* c);
TWOMAT_API int twomat_curve_d2(const twomat_curve* c);
TWOMAT_API const char* twomat_curve_label(const twomat_curve* c);
/* Branch points, sheet counts and normalization residues as a JSON document. */
TWOMAT_API twomat_status twomat_curve_report(twomat_curve* c, char** json_out);

/* W_n^(h)(points), n = number of points. */
TWOMAT_API twomat_status twomat_eval(const twomat_curve* c, twomat_method method, int n, int h,
                                     const twomat_complex* points, const twomat_config* cfg,
                                     twomat_result* out);
/* R_k^{i,(h)}(z; points) of the cubic recursion, k = number of points. */
TWOMAT_API twomat_status twomat_eval_R(const twomat_curve* c, int i, int h, twomat_complex z, int k,
                                       const twomat_complex* points, const twomat_config* cfg,
                                       twomat_result* out);
/* Residual of the sheet-sum identity for U_k^(h) at z, k = number of points. */
TWOMAT_API twomat_status twomat_identity_residual(const twomat_curve* c, int h, twomat_complex z, int k,
                                                  const twomat_complex* points, const twomat_config* cfg,
                                                  double* residual);

/* Diagrams of W_{k+1}^(h) (k leaves) as a JSON array; count receives their number. */
TWOMAT_API twomat_status twomat_diagrams(int k, int h, twomat_theory theory, int d2, size_t* count,
                                         char** json_out);

/* Two-matrix versus one-matrix comparison on a hyperelliptic curve, as JSON. */
TWOMAT_API twomat_status twomat_gaussian_limit(const twomat_curve* c, int nmax, int hmax,
                                               const twomat_config* cfg, uint32_t seed, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* TWOMAT_TWOMAT_H */
