#ifndef COMMVAR_COMMVAR_H
#define COMMVAR_COMMVAR_H

/* C interface to the commuting-variety engine.
 *
 * Every function returns a commvar_status. On failure a message is available
 * from commvar_last_error() on the calling thread until the next call.
 * Strings returned through char** are owned by the caller and released with
 * commvar_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(COMMVAR_BUILDING_LIBRARY)
#define COMMVAR_API __attribute__((visibility("default")))
#else
#define COMMVAR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum commvar_status {
  COMMVAR_OK = 0,
  COMMVAR_ERR_INVALID_ARGUMENT = 1,
  COMMVAR_ERR_UNSUPPORTED = 2,  /* a Levi factor without an orbit list */
  COMMVAR_ERR_INCONCLUSIVE = 3, /* the computation could not reach a verdict */
  COMMVAR_ERR_INTERNAL = 4
} commvar_status;

typedef struct commvar_algebra commvar_algebra;

typedef struct commvar_info {
  char label[8]; /* e.g. "B2" */
  int dim;
  int rank;
  int num_positive_roots;
  int lacety;
  int root_length_classes;
} commvar_info;

typedef struct commvar_verify_options {
  int fast;     /* nonzero: primes {5, 13} only */
  uint64_t seed;
  int max_rank; /* cap for the classical series, at least 1 */
  unsigned workers; /* 0: COMMVAR_WORKERS or the hardware concurrency */
  int tamper;   /* nonzero: flip one structure constant in every algebra */
} commvar_verify_options;

COMMVAR_API const char* commvar_last_error(void);
COMMVAR_API const char* commvar_status_string(commvar_status status);
COMMVAR_API void commvar_string_free(char* s);

/* Validates (type, rank) without building anything. */
COMMVAR_API commvar_status commvar_validate_type(char type, int rank);

COMMVAR_API commvar_status commvar_algebra_create(char type, int rank, int tamper, commvar_algebra** out);
COMMVAR_API void commvar_algebra_destroy(commvar_algebra* g);
COMMVAR_API commvar_status commvar_algebra_info(const commvar_algebra* g, commvar_info* out);

/* Name of basis vector i, e.g. "H1" or "X(1,0)". */
COMMVAR_API commvar_status commvar_basis_name(const commvar_algebra* g, int i, char** out);

/* dim g_z for z = sum_i coeffs[i] b_i, n = dim g. */
COMMVAR_API commvar_status commvar_centralizer_dim(const commvar_algebra* g, const long* coeffs, size_t n, int* out);

/* codim of the irregular part of the commuting variety. The ledger of
 * decomposition classes is returned as JSON when ledger_json is not NULL. */
COMMVAR_API commvar_status commvar_irr_codim(const commvar_algebra* g, int* codim, char** ledger_json);

/* Decomposition classes D(I, x) for one subset I (1-based simple root
 * indices), one entry per listed orbit of the Levi factor, as JSON. */
COMMVAR_API commvar_status commvar_class_ledger(const commvar_algebra* g, const int* subset, size_t n,
                                                char** ledger_json);

/* Runs the verification suite. report_json receives the JSON array of checks,
 * exit_code 0 (all pass), 1 (a failure) or 4 (inconclusive), and
 * first_failure (may be NULL) the id of the first failing check or "". */
COMMVAR_API commvar_status commvar_verify(const commvar_verify_options* opts, char** report_json, int* exit_code,
                                          char** first_failure);

#ifdef __cplusplus
}
#endif

#endif /* COMMVAR_COMMVAR_H */
