/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef ESTRADA_H
#define ESTRADA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Estrada index evaluation route.
typedef enum EstradaMethod {
  ESTRADA_METHOD_EIGEN = 0,
  ESTRADA_METHOD_COSH = 1,
  ESTRADA_METHOD_MOMENT_SERIES = 2,
} EstradaMethod;

// Result code of every fallible call.
typedef enum EstradaStatus {
  ESTRADA_STATUS_OK = 0,
  ESTRADA_STATUS_NULL_POINTER = 1,
  ESTRADA_STATUS_INVALID_ARGUMENT = 2,
  ESTRADA_STATUS_PARSE_ERROR = 3,
  ESTRADA_STATUS_NOT_BIPARTITE = 4,
  ESTRADA_STATUS_NO_CONVERGENCE = 5,
  ESTRADA_STATUS_OUT_OF_RANGE = 6,
  ESTRADA_STATUS_PANIC = 7,
} EstradaStatus;

// Opaque graph handle.
typedef struct EstradaGraph EstradaGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. Valid until the
// next failing call on the same thread.
const char *estrada_last_error(void);

// Parses a NUL-terminated graph6 string.
//
// # Safety
// `text` must be NULL or a valid NUL-terminated string; `out` must be NULL or writable.
enum EstradaStatus estrada_graph_from_graph6(const char *text, struct EstradaGraph **out);

// Graph from an edge list of `edge_count` pairs stored as `2 * edge_count` vertex indices.
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (or be NULL when `edge_count` is 0).
enum EstradaStatus estrada_graph_from_edges(size_t n,
                                            const size_t *edges,
                                            size_t edge_count,
                                            struct EstradaGraph **out);

// `K_{p,q}`.
//
// # Safety
// `out` must be NULL or writable.
enum EstradaStatus estrada_complete_bipartite(size_t p, size_t q, struct EstradaGraph **out);

// `O_s v1 (K_1 u K_{p,q})`.
//
// # Safety
// `out` must be NULL or writable.
enum EstradaStatus estrada_join_family(size_t s, size_t p, size_t q, struct EstradaGraph **out);

// Releases a handle. NULL is ignored.
//
// # Safety
// `g` must be NULL or a handle from this library that has not been freed.
void estrada_graph_free(struct EstradaGraph *g);

// graph6 encoding; free the result with [`estrada_string_free`].
//
// # Safety
// `g` must be a live handle or NULL; `out` must be NULL or writable.
enum EstradaStatus estrada_graph_to_graph6(const struct EstradaGraph *g, char **out);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be NULL or a string from this library that has not been freed.
void estrada_string_free(char *s);

// Number of vertices.
//
// # Safety
// `g` must be a live handle or NULL; `out` must be NULL or writable.
enum EstradaStatus estrada_graph_order(const struct EstradaGraph *g, size_t *out);

// Number of edges.
//
// # Safety
// `g` must be a live handle or NULL; `out` must be NULL or writable.
enum EstradaStatus estrada_graph_edge_count(const struct EstradaGraph *g, size_t *out);

// Estrada index. `bound` may be NULL; it receives the truncation bound for
// the moment-series method and 0 otherwise.
//
// # Safety
// `g` must be a live handle or NULL; `value` must be NULL or writable; `bound` may be NULL.
enum EstradaStatus estrada_index(const struct EstradaGraph *g,
                                 enum EstradaMethod method,
                                 double *value,
                                 double *bound);

// Exact nullity of the adjacency matrix.
//
// # Safety
// `g` must be a live handle or NULL; `out` must be NULL or writable.
enum EstradaStatus estrada_nullity(const struct EstradaGraph *g, size_t *out);

// Closed walks of length `k` as a decimal string; free with [`estrada_string_free`].
//
// # Safety
// `g` must be a live handle or NULL; `out` must be NULL or writable.
enum EstradaStatus estrada_moment(const struct EstradaGraph *g, size_t k, char **out);

// Size of a maximum matching.
//
// # Safety
// `g` must be a live handle or NULL; `out` must be NULL or writable.
enum EstradaStatus estrada_matching_number(const struct EstradaGraph *g, size_t *out);

// Vertex connectivity.
//
// # Safety
// `g` must be a live handle or NULL; `out` must be NULL or writable.
enum EstradaStatus estrada_vertex_connectivity(const struct EstradaGraph *g, size_t *out);

// Edge connectivity.
//
// # Safety
// `g` must be a live handle or NULL; `out` must be NULL or writable.
enum EstradaStatus estrada_edge_connectivity(const struct EstradaGraph *g, size_t *out);

// Whether two graphs are isomorphic.
//
// # Safety
// `g`, `h` must be live handles or NULL; `out` must be NULL or writable.
enum EstradaStatus estrada_is_isomorphic(const struct EstradaGraph *g,
                                         const struct EstradaGraph *h,
                                         bool *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ESTRADA_H */
