/* kummerws — Weierstrass gap sets, pure gaps and AG code parameters on
 * Kummer extensions y^m = prod (x - alpha_i)^{lambda_i}.
 *
 * C interface of the shared library. All computation is exact 64-bit integer
 * arithmetic; every function is pure and thread-safe. Results are returned
 * through opaque handles or plain structs; every function reports a
 * kws_status and the last error detail is kept per thread.
 */
#ifndef KUMMERWS_H
#define KUMMERWS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KWS_API __declspec(dllexport)
#else
#define KWS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kws_status {
  KWS_OK = 0,
  KWS_EINVAL = 1,   /* invalid argument / precondition violation */
  KWS_EDOMAIN = 2,  /* value outside the supported domain (overflow, inexact division) */
  KWS_ECHECK = 3,   /* an internal consistency check failed */
} kws_status;

KWS_API const char* kws_status_str(kws_status s);
/* Detail message for the most recent failure on this thread ("" if none). */
KWS_API const char* kws_last_error(void);

/* ---- curves and places ------------------------------------------------- */

typedef struct kws_curve kws_curve;

/* Place encoding: 0 = the place at infinity, i >= 1 = the ramified place
 * over x = alpha_i (1-based into the multiplicity list). */
#define KWS_PLACE_INF 0

KWS_API kws_status kws_curve_create(int64_t m, const int64_t* lambdas, size_t r,
                                    kws_curve** out);
KWS_API void kws_curve_destroy(kws_curve* c);
KWS_API int64_t kws_curve_m(const kws_curve* c);
KWS_API size_t kws_curve_r(const kws_curve* c);
KWS_API int64_t kws_curve_genus(const kws_curve* c);

/* ---- result containers -------------------------------------------------- */

typedef struct kws_intvec kws_intvec;
KWS_API size_t kws_intvec_size(const kws_intvec* v);
KWS_API int64_t kws_intvec_at(const kws_intvec* v, size_t i);
KWS_API void kws_intvec_destroy(kws_intvec* v);

typedef struct kws_pairvec kws_pairvec;
KWS_API size_t kws_pairvec_size(const kws_pairvec* v);
KWS_API void kws_pairvec_at(const kws_pairvec* v, size_t i, int64_t* a, int64_t* b);
KWS_API void kws_pairvec_destroy(kws_pairvec* v);

KWS_API void kws_string_destroy(char* s);

/* ---- gap sets and two-point structures ---------------------------------- */

KWS_API kws_status kws_gap_set(const kws_curve* c, int place, kws_intvec** out);
/* Arithmetic criterion, independent of the closed-form gap sets. */
KWS_API kws_status kws_is_gap(const kws_curve* c, int place, int64_t s, int* out);

/* Minimal generating set Gamma(P1,P2); pairs in lexicographic order. */
KWS_API kws_status kws_gamma(const kws_curve* c, int place1, int place2, kws_pairvec** out);

typedef enum kws_puregap_method {
  KWS_PUREGAPS_GLB = 0,
  KWS_PUREGAPS_SIGMA = 1,
  KWS_PUREGAPS_BOTH = 2,  /* returns glb result, KWS_ECHECK if the two disagree */
} kws_puregap_method;

KWS_API kws_status kws_pure_gaps(const kws_curve* c, int place1, int place2,
                                 kws_puregap_method method, kws_pairvec** out);

/* ---- families ------------------------------------------------------------ */

typedef struct kws_family kws_family;

/* name is one of "abdon-garcia" (p, n), "generalized-hermitian" (q, n),
 * "norm-trace" (q, n), "bm-subcover" (q, n, m); pass 0 for unused params. */
KWS_API kws_status kws_family_create(const char* name, int64_t p, int64_t q, int64_t n,
                                     int64_t m, kws_family** out);
KWS_API void kws_family_destroy(kws_family* f);
KWS_API const kws_curve* kws_family_curve(const kws_family* f);
KWS_API int64_t kws_family_field_size(const kws_family* f);
KWS_API int64_t kws_family_rational_places(const kws_family* f);
/* Fully split x-lines, -1 when unknown. */
KWS_API int64_t kws_family_split_lines(const kws_family* f);
KWS_API kws_status kws_family_is_maximal(const kws_family* f, int* out);

/* ---- code parameters ------------------------------------------------------ */

typedef struct kws_code_params {
  int64_t n;
  int64_t k;
  int64_t d_lower;
  int64_t d_exact;   /* valid iff has_exact */
  int has_exact;
  char provenance[64];
} kws_code_params;

KWS_API kws_status kws_one_point_code(const kws_family* f, int64_t a, kws_code_params* out);
KWS_API kws_status kws_corollary_code(const char* name, int64_t p, int64_t q, int64_t n,
                                      int64_t a, kws_code_params* out);
KWS_API kws_status kws_bm_one_point_code(int64_t q, int64_t n, int64_t m, int64_t k_mult,
                                         kws_code_params* out);
KWS_API kws_status kws_two_point_code_inf(int64_t q, int64_t n, int64_t a,
                                          kws_code_params* out);
KWS_API kws_status kws_two_point_code_01(int64_t n, int64_t c1, int64_t c2,
                                         kws_code_params* out);
/* N + 1 - k - d for codes with exact distance. */
KWS_API kws_status kws_singleton_defect(const kws_code_params* p, int64_t* out);

/* ---- order bound ----------------------------------------------------------- */

/* Feng-Rao designed distance at the given place. */
KWS_API kws_status kws_order_bound(const kws_curve* c, int place, int64_t ell,
                                   int64_t* rho_ell, int64_t* d_ord);
KWS_API kws_status kws_dual_one_point_code(const kws_family* f, int place, int64_t ell,
                                           kws_code_params* out);

/* ---- tables and sweeps ------------------------------------------------------ */

/* CSV of table 1 or 2 (malloc'd; free with kws_string_destroy). */
KWS_API kws_status kws_table_csv(int which, char** out);
/* ok = 1 iff the recomputed table matches the embedded golden rows. */
KWS_API kws_status kws_table_check(int which, int* ok);

typedef struct kws_verify_report {
  int64_t curves;
  int64_t places;
  int64_t gamma_pairs;
  int64_t failures;
} kws_verify_report;

/* Full invariant sweep over all valid curves with m <= mmax, r <= rmax.
 * threads <= 0 means hardware concurrency. Returns KWS_ECHECK when
 * failures > 0; message holds the first failure (may be NULL). */
KWS_API kws_status kws_verify_sweep(int64_t mmax, int64_t rmax, int threads,
                                    kws_verify_report* out, char** message);

#ifdef __cplusplus
}
#endif

#endif /* KUMMERWS_H */
