#ifndef CIRCARC_H
#define CIRCARC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CircArcStatus {
  CIRC_ARC_STATUS_OK = 0,
  CIRC_ARC_STATUS_NULL_POINTER = 1,
  CIRC_ARC_STATUS_INVALID_UTF8 = 2,
  CIRC_ARC_STATUS_MALFORMED = 3,
  CIRC_ARC_STATUS_INFEASIBLE = 4,
  CIRC_ARC_STATUS_PANIC = 5,
} CircArcStatus;

typedef enum CircArcBoundKind {
  CIRC_ARC_BOUND_KIND_C_MAX = 0,
  CIRC_ARC_BOUND_KIND_E_MAX = 1,
  CIRC_ARC_BOUND_KIND_E_MIN = 2,
  CIRC_ARC_BOUND_KIND_D_MAX = 3,
  CIRC_ARC_BOUND_KIND_D_OF_A_MAX = 4,
} CircArcBoundKind;

/**
 * Opaque handle to an arc collection.
 */
typedef struct CircArcCollection CircArcCollection;

typedef struct CircArcSummary {
  size_t n;
  size_t e;
  size_t d;
  size_t c;
  size_t max_agreement;
  size_t min_agreement;
  bool edge_formula_holds;
} CircArcSummary;

typedef struct CircArcBound {
  int64_t value;
  bool valid;
} CircArcBound;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *circarc_last_error(void);

/**
 * Parses the JSON collection format.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CircArcStatus circarc_collection_from_json(const char *json, struct CircArcCollection **out);

/**
 * Serializes a collection; free the result with `circarc_string_free`.
 *
 * # Safety
 * `c` must be a live handle and `out` a valid pointer.
 */
enum CircArcStatus circarc_collection_to_json(const struct CircArcCollection *c, char **out);

/**
 * # Safety
 * `s` must come from this library or be NULL.
 */
void circarc_string_free(char *s);

/**
 * # Safety
 * `c` must come from this library or be NULL, and not be used afterwards.
 */
void circarc_collection_free(struct CircArcCollection *c);

/**
 * Builds the edge-maximizing collection for `(M, m, n)`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CircArcStatus circarc_construct_a_max(size_t max,
                                           size_t min,
                                           size_t n,
                                           struct CircArcCollection **out);

/**
 * Builds a collection with `d_max(M, m, n)` double intersections.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CircArcStatus circarc_construct_d_max(size_t max,
                                           size_t min,
                                           size_t n,
                                           struct CircArcCollection **out);

/**
 * Seeded uniformly random collection of `n` arcs.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CircArcStatus circarc_random(size_t n, uint64_t seed, struct CircArcCollection **out);

/**
 * Edge, double-intersection and agreement counts of a collection.
 *
 * # Safety
 * `c` must be a live handle and `out` a valid pointer.
 */
enum CircArcStatus circarc_collection_summary(const struct CircArcCollection *c,
                                              struct CircArcSummary *out);

/**
 * Evaluates one closed-form bound for `(M, m, n)`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CircArcStatus circarc_bound(enum CircArcBoundKind kind,
                                 size_t max,
                                 size_t min,
                                 size_t n,
                                 struct CircArcBound *out);

/**
 * Asymptotic edge proportion forcing agreement proportion `beta`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CircArcStatus circarc_alpha(double beta, double gamma, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CIRCARC_H */
