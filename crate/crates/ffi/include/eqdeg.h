#ifndef EQDEG_H
#define EQDEG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum EqdegStatus {
  EQDEG_STATUS_OK = 0,
  EQDEG_STATUS_NULL_POINTER = 1,
  EQDEG_STATUS_INVALID_ARGUMENT = 2,
  EQDEG_STATUS_GRAPH6 = 3,
  EQDEG_STATUS_OUT_OF_RANGE = 4,
  EQDEG_STATUS_BUFFER_TOO_SMALL = 5,
  EQDEG_STATUS_THEOREM_FALSIFIED = 6,
  EQDEG_STATUS_INTERNAL = 7,
  EQDEG_STATUS_PANIC = 8,
} EqdegStatus;

/**
 * Opaque graph handle.
 */
typedef struct EqdegGraph EqdegGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static NUL-terminated description of `status`.
 */
const char *eqdeg_status_name(enum EqdegStatus status);

/**
 * Copies the calling thread's last error message into `buf`.
 *
 * # Safety
 * `buf` must hold `cap` writable bytes; `needed` may be null.
 */
enum EqdegStatus eqdeg_last_error_message(char *buf, size_t cap, size_t *needed);

/**
 * Parses one graph6 string into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum EqdegStatus eqdeg_graph_from_graph6(const char *text, struct EqdegGraph **out);

/**
 * Builds a graph on `order` vertices from `edge_count` pairs stored
 * flat in `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must hold `2 * edge_count` readable entries (may be null when
 * `edge_count` is 0); `out` must be writable.
 */
enum EqdegStatus eqdeg_graph_new(size_t order,
                                 const size_t *edges,
                                 size_t edge_count,
                                 struct EqdegGraph **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `g` must come from a constructor of this library and not be used after.
 */
void eqdeg_graph_free(struct EqdegGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum EqdegStatus eqdeg_graph_order(const struct EqdegGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum EqdegStatus eqdeg_graph_edge_count(const struct EqdegGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum EqdegStatus eqdeg_graph_degree(const struct EqdegGraph *g, size_t vertex, size_t *out);

/**
 * Writes the graph6 encoding of `g`.
 *
 * # Safety
 * `g` must be a live handle; `buf` must hold `cap` writable bytes;
 * `needed` may be null.
 */
enum EqdegStatus eqdeg_graph_to_graph6(const struct EqdegGraph *g,
                                       char *buf,
                                       size_t cap,
                                       size_t *needed);

/**
 * Writes the graph6 encoding of the canonical relabelling of `g`;
 * isomorphic graphs give identical strings.
 *
 * # Safety
 * As for [`eqdeg_graph_to_graph6`].
 */
enum EqdegStatus eqdeg_canonical_graph6(const struct EqdegGraph *g,
                                        char *buf,
                                        size_t cap,
                                        size_t *needed);

/**
 * Looks for a path of `length` edges whose endpoints have equal degree.
 * On success `*found` says whether one exists and, if so, its
 * `length + 1` vertices are written to `path`.
 *
 * # Safety
 * `g` must be a live handle; `found` must be writable; `path` must hold
 * `cap` writable entries.
 */
enum EqdegStatus eqdeg_find_equal_degree_path(const struct EqdegGraph *g,
                                              size_t length,
                                              bool *found,
                                              size_t *path,
                                              size_t cap);

/**
 * Closed-form value of the degree-sum maximisation.
 *
 * # Safety
 * `out` must be writable.
 */
enum EqdegStatus eqdeg_lambda_closed(size_t n,
                                     size_t delta,
                                     size_t beta,
                                     size_t b_size,
                                     uint64_t *out);

/**
 * Exhaustive value of the degree-sum maximisation.
 *
 * # Safety
 * `out` must be writable.
 */
enum EqdegStatus eqdeg_lambda_bruteforce(size_t n,
                                         size_t delta,
                                         size_t beta,
                                         size_t b_size,
                                         uint64_t *out);

/**
 * Largest edge count of a `vertices`-vertex graph with no equal-degree
 * path of `length` edges, and the number of extremal classes.
 *
 * # Safety
 * `p` and `extremal_count` must be writable.
 */
enum EqdegStatus eqdeg_extremal(size_t vertices,
                                size_t length,
                                size_t jobs,
                                size_t *p,
                                size_t *extremal_count);

/**
 * Checks the length-3 extremal theorem at `vertices` vertices;
 * `EQDEG_STATUS_THEOREM_FALSIFIED` would mean a counterexample.
 */
enum EqdegStatus eqdeg_verify_theorem(size_t vertices, size_t jobs);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQDEG_H */
