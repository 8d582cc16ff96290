/* Copyright The onelap Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the onelap library. Complexes are opaque handles; reports
 * come back as JSON strings that the caller releases with onelap_string_free.
 * Every function returns a status; on failure onelap_last_error() describes
 * the problem (per thread, valid until the next call on that thread).
 */
#ifndef ONELAP_ONELAP_H
#define ONELAP_ONELAP_H

#include <stddef.h>

#if defined(_WIN32)
#define ONELAP_API __declspec(dllexport)
#else
#define ONELAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status values double as the command-line exit codes. On failure every
 * output pointer is left null and onelap_last_error() says why. */
typedef enum {
  ONELAP_OK = 0,
  ONELAP_REJECTED = 1,    /* verification rejected, or an asserted check failed */
  ONELAP_INPUT_ERROR = 2, /* parse errors, bad dimensions, unknown faces */
  ONELAP_DEGENERATE = 3,  /* zero normalized weights, no faces in the dimension */
  ONELAP_BUDGET = 4,      /* search or grid budget exceeded */
  ONELAP_INTERNAL = 5
} onelap_status;

typedef enum { ONELAP_UP = 0, ONELAP_DOWN = 1 } onelap_operator;
typedef enum { ONELAP_NORMALIZED = 0, ONELAP_UNNORMALIZED = 1 } onelap_normalization;
typedef enum { ONELAP_VOLUME_UPDEGREE = 0, ONELAP_VOLUME_CONSTANT = 1 } onelap_volume;

typedef struct onelap_complex onelap_complex;

typedef struct {
  int dim;
  onelap_operator op;
  onelap_normalization normalization;
} onelap_problem;

typedef struct {
  unsigned threads;         /* 0 or 1: sequential */
  size_t witness_cap;       /* per eigenvalue; 0 means the default of 8 */
  int all_witnesses;        /* non-zero keeps every witness */
} onelap_spectrum_options;

ONELAP_API const char* onelap_version(void);
ONELAP_API const char* onelap_last_error(void);
ONELAP_API void onelap_string_free(char* text);

/* {"vertices": [...]?, "maximal_faces": [[...], ...]} */
ONELAP_API onelap_status onelap_complex_from_json(const char* json, onelap_complex** out);
/* "simplex:n", "path", "remark5" */
ONELAP_API onelap_status onelap_complex_builtin(const char* name, onelap_complex** out);
ONELAP_API onelap_status onelap_complex_to_json(const onelap_complex* k, char** out);
ONELAP_API size_t onelap_complex_num_faces(const onelap_complex* k, int dim);
/* JSON array of the face keys of one dimension, in coordinate order. */
ONELAP_API onelap_status onelap_complex_faces(const onelap_complex* k, int dim, char** out);
ONELAP_API void onelap_complex_free(onelap_complex* k);

/* Vectors are JSON objects mapping face keys "v1,...,vk" to "p/q" strings;
 * absent faces are zero. Rationals are "p/q" or "p". */

/* Report {problem, eigenvalues[], witnesses{}, stats{}}. */
ONELAP_API onelap_status onelap_spectrum(const onelap_complex* k, onelap_problem problem,
                                         const onelap_spectrum_options* options, char** report);
/* ONELAP_REJECTED when (mu, x) is not an eigenpair; the report says why. */
ONELAP_API onelap_status onelap_verify(const onelap_complex* k, onelap_problem problem,
                                       const char* mu, const char* vector_json, char** report);
/* Vertex and face parameters: alpha, chi, alpha_s, chi_s, clique covers. */
ONELAP_API onelap_status onelap_invariants(const onelap_complex* k, char** report);
/* ONELAP_REJECTED when any inequality fails. */
ONELAP_API onelap_status onelap_bounds(const onelap_complex* k, int dim, onelap_volume volume,
                                       char** report);
/* Nodal domains of x and the verdict on each restriction. ONELAP_REJECTED
 * when (mu, x) is an eigenpair but some restriction is not. */
ONELAP_API onelap_status onelap_nodal(const onelap_complex* k, onelap_problem problem,
                                      const char* mu, const char* vector_json, char** report);
/* Glue k2 to k1 along equal-dimension faces given as keys. */
ONELAP_API onelap_status onelap_wedge(const onelap_complex* k1, const char* face1,
                                      const onelap_complex* k2, const char* face2,
                                      onelap_complex** out);
/* Spectrum of the wedge against the union of the parts; ONELAP_REJECTED when
 * they differ, ONELAP_INPUT_ERROR when the dimension hypothesis fails. */
ONELAP_API onelap_status onelap_wedge_check(const onelap_complex* k1, const char* face1,
                                            const onelap_complex* k2, const char* face2,
                                            onelap_problem problem, char** report);
/* Motif given as faces "1,2;3" (closed before use). */
ONELAP_API onelap_status onelap_duplicate(const onelap_complex* k, const char* motif,
                                          onelap_complex** out, char** report);
/* Lifts every restricted eigenpair on the motif's star to the duplicated
 * complex at the link dimension; ONELAP_REJECTED if one fails. */
ONELAP_API onelap_status onelap_duplicate_check(const onelap_complex* k, const char* motif,
                                                onelap_normalization normalization,
                                                char** report);
/* Grid oracle with coordinates in [-bound, bound] (0: (N-1)!) compared with
 * the engine; ONELAP_REJECTED when they differ. */
ONELAP_API onelap_status onelap_oracle(const onelap_complex* k, onelap_problem problem,
                                       size_t bound, size_t budget, char** report);

#ifdef __cplusplus
}
#endif

#endif
