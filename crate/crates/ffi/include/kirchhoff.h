#ifndef KIRCHHOFF_H
#define KIRCHHOFF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KirchhoffStatus {
  KIRCHHOFF_STATUS_OK = 0,
  /**
   * Two independent computations disagreed.
   */
  KIRCHHOFF_STATUS_CHECK_FAILED = 1,
  KIRCHHOFF_STATUS_INPUT_ERROR = 2,
  KIRCHHOFF_STATUS_CAPACITY_ERROR = 3,
  /**
   * The operation is undefined for the argument, e.g. a cut-edge.
   */
  KIRCHHOFF_STATUS_DOMAIN_ERROR = 4,
  KIRCHHOFF_STATUS_NULL_ARGUMENT = 5,
  KIRCHHOFF_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * A panic was caught at the boundary.
   */
  KIRCHHOFF_STATUS_INTERNAL = 7,
} KirchhoffStatus;

typedef enum KirchhoffThetaMethod {
  KIRCHHOFF_THETA_METHOD_PRODUCT = 0,
  KIRCHHOFF_THETA_METHOD_ENUMERATE = 1,
} KirchhoffThetaMethod;

/**
 * Opaque graph handle.
 */
typedef struct KirchhoffGraph KirchhoffGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *kirchhoff_last_error(void);

const char *kirchhoff_version(void);

/**
 * Parses graph-file text (`vertex <id>` / `edge <id> <tail> <head>` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum KirchhoffStatus kirchhoff_graph_parse(const char *text, struct KirchhoffGraph **out);

/**
 * Builds a graph from parallel endpoint arrays. Edge `i` gets id `i + 1`;
 * the vertices are exactly the endpoints.
 *
 * # Safety
 * `tails` and `heads` must each hold `edge_count` values (they may be null
 * when `edge_count` is zero) and `out` must be writable.
 */
enum KirchhoffStatus kirchhoff_graph_from_edges(const uint32_t *tails,
                                                const uint32_t *heads,
                                                size_t edge_count,
                                                struct KirchhoffGraph **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed. Null is a no-op.
 */
void kirchhoff_graph_free(struct KirchhoffGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (which yields 0).
 */
size_t kirchhoff_graph_vertex_count(const struct KirchhoffGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (which yields 0).
 */
size_t kirchhoff_graph_edge_count(const struct KirchhoffGraph *g);

/**
 * Coefficients of the Poincaré polynomial, constant term first.
 *
 * # Safety
 * `g` must be a live handle, `out` must hold `capacity` values and `len`
 * must be writable.
 */
enum KirchhoffStatus kirchhoff_poincare(const struct KirchhoffGraph *g,
                                        int64_t *out,
                                        size_t capacity,
                                        size_t *len);

/**
 * Ranks of the relation quotients in degrees `0..=m`.
 *
 * # Safety
 * As for [`kirchhoff_poincare`].
 */
enum KirchhoffStatus kirchhoff_rank_sequence(const struct KirchhoffGraph *g,
                                             uint64_t *out,
                                             size_t capacity,
                                             size_t *len);

/**
 * Tutte polynomial as a dense row-major table: entry `i * cols + j` is the
 * coefficient of `x^i y^j`.
 *
 * # Safety
 * `g` must be a live handle, `out` must hold `capacity` values, and `rows`
 * and `cols` must be writable.
 */
enum KirchhoffStatus kirchhoff_tutte(const struct KirchhoffGraph *g,
                                     int64_t *out,
                                     size_t capacity,
                                     size_t *rows,
                                     size_t *cols);

/**
 * Number of maximal forests.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum KirchhoffStatus kirchhoff_complexity(const struct KirchhoffGraph *g, uint64_t *out);

/**
 * Gram determinant of the integer flow lattice; fails with
 * `CHECK_FAILED` if it differs from the complexity.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum KirchhoffStatus kirchhoff_lattice_determinant(const struct KirchhoffGraph *g, uint64_t *out);

/**
 * Theta series coefficients for exponents `0..=max_norm`.
 *
 * # Safety
 * `g` must be a live handle and `out` must hold `capacity >= max_norm + 1`
 * values.
 */
enum KirchhoffStatus kirchhoff_theta(const struct KirchhoffGraph *g,
                                     uint64_t max_norm,
                                     enum KirchhoffThetaMethod method,
                                     int64_t *out,
                                     size_t capacity);

/**
 * Number of integer flows of squared norm `norm`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum KirchhoffStatus kirchhoff_flows_of_norm(const struct KirchhoffGraph *g,
                                             uint64_t norm,
                                             int64_t *out);

/**
 * Whether the degree-`degree` relation quotient is torsion-free.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum KirchhoffStatus kirchhoff_torsion_free(const struct KirchhoffGraph *g,
                                            size_t degree,
                                            bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KIRCHHOFF_H */
