/* C interface for the pcopt proper-connection recoloring library. */

#ifndef PCOPT_H
#define PCOPT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call. Anything other than `Ok` leaves a
 * description behind `pcopt_last_error_message`; `VerifyFailed` and
 * `Infeasible` still fill the output report when one exists.
 */
typedef enum PcStatus {
  PC_STATUS_OK = 0,
  /**
   * Unparsable input, invalid parameter, or a malformed plan.
   */
  PC_STATUS_INVALID_INPUT = 1,
  /**
   * A supplied plan was applied but failed verification.
   */
  PC_STATUS_VERIFY_FAILED = 2,
  /**
   * A vertex cap, search budget, or resample limit was exhausted.
   */
  PC_STATUS_INFEASIBLE = 3,
  /**
   * An invariant the library promises was broken; report it.
   */
  PC_STATUS_INTERNAL = 4,
  PC_STATUS_NULL_ARGUMENT = 5,
} PcStatus;

/**
 * Opaque handle to an immutable graph.
 */
typedef struct PcGraph PcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *pcopt_version(void);

/**
 * Message for the most recent failure on this thread, or null. The
 * pointer stays valid until the next failing call on the same thread;
 * do not free it.
 */
const char *pcopt_last_error_message(void);

/**
 * Frees a string returned through any `char **` output.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library
 * and not yet freed.
 */
void pcopt_string_free(char *s);

/**
 * Parses the edge-list text format into a new graph handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must point to writable
 * memory for one pointer. On success the handle must be released with
 * `pcopt_graph_free`.
 */
enum PcStatus pcopt_graph_parse(const char *text, struct PcGraph **out);

/**
 * Builds a graph from a family spec such as `cycle(7)` or
 * `random_tree(9)`. `seed` may be null for deterministic families.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `seed` must be null or point
 * to a readable u64; `out` must point to writable memory for one
 * pointer. On success the handle must be released with
 * `pcopt_graph_free`.
 */
enum PcStatus pcopt_graph_from_family(const char *spec, const uint64_t *seed, struct PcGraph **out);

/**
 * Releases a graph handle.
 *
 * # Safety
 * `g` must be null or a handle previously returned by this library and
 * not yet freed.
 */
void pcopt_graph_free(struct PcGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle from this library.
 */
size_t pcopt_graph_order(const struct PcGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle from this library.
 */
size_t pcopt_graph_size(const struct PcGraph *g);

/**
 * Writes the graph back out in the canonical edge-list text format.
 *
 * # Safety
 * `g` must be a live handle; `out` must point to writable memory for
 * one pointer. The string must be released with `pcopt_string_free`.
 */
enum PcStatus pcopt_graph_edge_list(const struct PcGraph *g, char **out);

/**
 * Structure report as JSON. Caps of 0 select the library default.
 *
 * # Safety
 * `g` must be a live handle; `out` must point to writable memory for
 * one pointer. The string must be released with `pcopt_string_free`.
 */
enum PcStatus pcopt_analyze_json(const struct PcGraph *g,
                                 size_t vertex_cap,
                                 size_t subgraph_cap,
                                 char **out);

/**
 * Constructs a verified recoloring plan and returns it as JSON. Caps
 * of 0 select the library default.
 *
 * # Safety
 * `g` must be a live handle; `out` must point to writable memory for
 * one pointer. The string must be released with `pcopt_string_free`.
 */
enum PcStatus pcopt_construct_plan_json(const struct PcGraph *g,
                                        size_t vertex_cap,
                                        size_t subgraph_cap,
                                        char **out);

/**
 * Applies a JSON plan to the graph and verifies proper connectivity.
 * Returns `Ok` and the report when the plan holds, `VerifyFailed` and
 * the report (including the failing pair) when it does not.
 *
 * # Safety
 * `g` must be a live handle; `plan_json` must be a NUL-terminated
 * string; `out` must point to writable memory for one pointer. The
 * string must be released with `pcopt_string_free`.
 */
enum PcStatus pcopt_verify_plan_json(const struct PcGraph *g,
                                     const char *plan_json,
                                     bool witnesses,
                                     char **out);

/**
 * Exact minimum search, reported as JSON. A negative budget selects
 * the default ceiling floor((5a - 1) / 2); a vertex cap of 0 selects
 * the library default. Returns `Infeasible` (with the report) when the
 * budget is exhausted.
 *
 * # Safety
 * `g` must be a live handle; `out` must point to writable memory for
 * one pointer. The string must be released with `pcopt_string_free`.
 */
enum PcStatus pcopt_exact_json(const struct PcGraph *g,
                               int64_t budget,
                               size_t vertex_cap,
                               char **out);

/**
 * Compares the exact optimum against the 2a - 2 target, reported as
 * JSON. A negative budget selects the default ceiling; caps of 0
 * select the library default. An inconclusive probe (budget exhausted)
 * returns `Infeasible` with the report; a violation is a finding, not
 * an error.
 *
 * # Safety
 * `g` must be a live handle; `out` must point to writable memory for
 * one pointer. The string must be released with `pcopt_string_free`.
 */
enum PcStatus pcopt_probe_json(const struct PcGraph *g,
                               int64_t budget,
                               size_t vertex_cap,
                               size_t subgraph_cap,
                               char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PCOPT_H */
