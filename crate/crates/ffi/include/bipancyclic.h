/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef BIPANCYCLIC_H
#define BIPANCYCLIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BbgStatus {
  BBG_STATUS_OK = 0,
  BBG_STATUS_NULL_POINTER = 1,
  BBG_STATUS_INVALID_ARGUMENT = 2,
  BBG_STATUS_PARSE = 3,
  BBG_STATUS_HYPOTHESIS = 4,
  BBG_STATUS_INTERNAL = 5,
  BBG_STATUS_IO = 6,
} BbgStatus;

typedef enum BbgSpectrumMode {
  BBG_SPECTRUM_MODE_EXHAUSTIVE = 0,
  /*
   Uses the standard Hamilton cycle `0, 1, ..., 2n-1`, which must be present.
   */
  BBG_SPECTRUM_MODE_CERTIFICATE = 1,
} BbgSpectrumMode;

typedef enum BbgVerdict {
  BBG_VERDICT_YES = 0,
  BBG_VERDICT_NO = 1,
  BBG_VERDICT_UNKNOWN = 2,
} BbgVerdict;

/*
 Opaque graph handle.
 */
typedef struct BbgGraph BbgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; empty if none. Valid until
 the next failing call on the same thread.
 */
const char *bbg_last_error_message(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void bbg_string_free(char *s);

/*
 Releases a graph. Null is ignored.

 # Safety
 `g` must come from this library and not have been freed.
 */
void bbg_graph_free(struct BbgGraph *g);

/*
 `K_{n,n}`.

 # Safety
 `out` must be valid for writes.
 */
enum BbgStatus bbg_graph_complete(size_t n, struct BbgGraph **out);

/*
 Seeded sample of `G(n, n, p)`.

 # Safety
 `out` must be valid for writes.
 */
enum BbgStatus bbg_graph_sample(size_t n, double p, uint64_t seed, struct BbgGraph **out);

/*
 Parses the `bbg 1` text format.

 # Safety
 `text` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum BbgStatus bbg_graph_parse(const char *text, struct BbgGraph **out);

/*
 Serializes to the `bbg 1` text format; free the result with `bbg_string_free`.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum BbgStatus bbg_graph_to_text(const struct BbgGraph *g, char **out);

/*
 Class size `n`, or 0 for a null handle.

 # Safety
 `g` must be null or a live handle.
 */
size_t bbg_graph_n(const struct BbgGraph *g);

/*
 Number of edges, or 0 for a null handle.

 # Safety
 `g` must be null or a live handle.
 */
size_t bbg_graph_edge_count(const struct BbgGraph *g);

/*
 True if `{u, v}` is an edge.

 # Safety
 `g` must be null or a live handle.
 */
bool bbg_graph_has_edge(const struct BbgGraph *g, size_t u, size_t v);

/*
 Copy of `g` with the standard Hamilton cycle added.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum BbgStatus bbg_graph_with_standard_cycle(const struct BbgGraph *g, struct BbgGraph **out);

/*
 Number of 4-cycles.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum BbgStatus bbg_graph_c4_count(const struct BbgGraph *g, uint64_t *out);

/*
 Distance of `i` from 0 on a cycle of length `two_n`; 0 unless `two_n` is
 even and at least 4.
 */
size_t bbg_circ_dist(int64_t i, size_t two_n);

/*
 `2 exp(-eps^2 mean / 3)` for `0 < eps <= 3/2`, `mean > 0`.

 # Safety
 `out` must be valid for writes.
 */
enum BbgStatus bbg_chernoff_tail_bound(double eps, double mean, double *out);

/*
 Even cycle spectrum as JSON; free the result with `bbg_string_free`.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum BbgStatus bbg_spectrum_json(const struct BbgGraph *g, enum BbgSpectrumMode mode, char **out);

/*
 Whether every even length from 4 to `2n` is certified.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum BbgStatus bbg_is_bipancyclic(const struct BbgGraph *g,
                                  enum BbgSpectrumMode mode,
                                  enum BbgVerdict *out);

/*
 Number of `l`-shortcuts with respect to the standard Hamilton cycle.

 # Safety
 `g` must be a live handle; `out` must be valid for writes.
 */
enum BbgStatus bbg_count_shortcuts(const struct BbgGraph *g, size_t l, uint64_t *out);

/*
 Fan construction; `deleted` (may be null) receives the number of deleted edges.

 # Safety
 `g` must be a live handle; `out` must be valid for writes; `deleted` null or valid.
 */
enum BbgStatus bbg_fan_construction(const struct BbgGraph *g,
                                    struct BbgGraph **out,
                                    size_t *deleted);

/*
 Breaks every 4-cycle without touching the standard Hamilton cycle, which
 must be present. `deleted` (may be null) receives the number of deletions.

 # Safety
 `g` must be a live handle; `out` must be valid for writes; `deleted` null or valid.
 */
enum BbgStatus bbg_quadrilateral_breaker(const struct BbgGraph *g,
                                         struct BbgGraph **out,
                                         size_t *deleted);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIPANCYCLIC_H */
