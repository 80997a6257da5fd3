/* C interface to the lieschur library.
 *
 * Algebras are opaque handles owned by the caller and released with
 * lsc_algebra_free. Every fallible call returns an lsc_status; on failure the
 * message is available from lsc_last_error() on the same thread until the
 * next call. Strings returned through char** are released with
 * lsc_string_free. */
#ifndef LIESCHUR_H
#define LIESCHUR_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LIESCHUR_BUILDING)
#    define LSC_API __declspec(dllexport)
#  else
#    define LSC_API __declspec(dllimport)
#  endif
#else
#  define LSC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes for 0..4. */
typedef enum lsc_status {
  LSC_OK = 0,
  LSC_SUITE_FAILED = 1,      /* verification failure or TheoremViolation */
  LSC_ERR_SYNTAX = 2,        /* malformed input text, unknown names, bad arguments, I/O */
  LSC_ERR_INVALID_ALGEBRA = 3, /* Jacobi, index range, duplicate bracket */
  LSC_ERR_PRECONDITION = 4,  /* not nilpotent, abelian, not central, not an ideal */
  LSC_ERR_INTERNAL = 5
} lsc_status;

typedef struct lsc_algebra lsc_algebra;

typedef struct lsc_fingerprint {
  size_t n;
  size_t derived_dim;
  size_t center_dim;
  int nilpotent;           /* 1 if the lower central series reaches 0 */
  size_t nilpotency_class; /* valid when nilpotent */
  size_t lcs_len;
  size_t lcs_dims[64];     /* first min(lcs_len, 64) terms */
  size_t rank_d2;
  size_t rank_d3;
  size_t dim_M;
  long t;
  long s;
} lsc_fingerprint;

typedef enum lsc_class_status {
  LSC_CLASSIFIED = 0,
  LSC_OUT_OF_SCOPE = 1,
  LSC_THEOREM_VIOLATION = 2
} lsc_class_status;

typedef struct lsc_classification {
  lsc_class_status status;
  char family[32]; /* catalog identifier, empty unless classified */
  size_t param_count;
  long params[2];
  long s;
} lsc_classification;

typedef struct lsc_verify_options {
  const char* suite; /* formulas | bounds | kunneth | quotient | classification */
  long max_m;
  long max_k;
  long max_n;
  unsigned long long seed;
} lsc_verify_options;

LSC_API const char* lsc_last_error(void);
LSC_API void lsc_string_free(char* s);

LSC_API lsc_status lsc_algebra_parse(const char* text, lsc_algebra** out);
/* name: A, H, L3414, L4524, HplusA, L4524plusA1 */
LSC_API lsc_status lsc_algebra_catalog(const char* name, const long* params, size_t param_count,
                                       lsc_algebra** out);
LSC_API lsc_status lsc_algebra_direct_sum(const lsc_algebra* a, const lsc_algebra* b, lsc_algebra** out);
/* Rows of `matrix` (row-major, dim*dim, "p" or "p/q" strings) are the new basis. */
LSC_API lsc_status lsc_algebra_change_basis(const lsc_algebra* a, const char* const* matrix,
                                            lsc_algebra** out);
/* Quotient by the span of `count` vectors of length dim (row-major strings). */
LSC_API lsc_status lsc_algebra_quotient(const lsc_algebra* a, const char* const* vectors, size_t count,
                                        lsc_algebra** out);
LSC_API void lsc_algebra_free(lsc_algebra* a);
LSC_API size_t lsc_algebra_dim(const lsc_algebra* a);
LSC_API lsc_status lsc_algebra_render(const lsc_algebra* a, char** out);

LSC_API lsc_status lsc_fingerprint_compute(const lsc_algebra* a, lsc_fingerprint* out);
/* Returns LSC_ERR_PRECONDITION for non-nilpotent or abelian input. */
LSC_API lsc_status lsc_classify(const lsc_algebra* a, lsc_classification* out);

/* Deterministic key=value report lines for the CLI commands. */
LSC_API lsc_status lsc_report_info(const lsc_algebra* a, char** out);
LSC_API lsc_status lsc_report_multiplier(const lsc_algebra* a, char** out);
/* Returns LSC_SUITE_FAILED (with the report filled) on TheoremViolation. */
LSC_API lsc_status lsc_report_classify(const lsc_algebra* a, char** out);

/* Fills *report in every case where the suite ran; LSC_SUITE_FAILED if any case failed. */
LSC_API lsc_status lsc_verify(const lsc_verify_options* options, char** report);

#ifdef __cplusplus
}
#endif

#endif /* LIESCHUR_H */
