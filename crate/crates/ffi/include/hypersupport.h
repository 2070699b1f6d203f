#ifndef HYPERSUPPORT_H
#define HYPERSUPPORT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a budgeted search.
 */
typedef enum HsOutcome {
  HS_OUTCOME_FOUND = 0,
  HS_OUTCOME_NOT_FOUND = 1,
  HS_OUTCOME_UNKNOWN = 2,
} HsOutcome;

/**
 * Result code of every fallible call.
 */
typedef enum HsStatus {
  HS_STATUS_OK = 0,
  HS_STATUS_NULL_POINTER = 1,
  HS_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON, schema violation, or inconsistent input.
   */
  HS_STATUS_INVALID_INPUT = 3,
  /**
   * Arguments outside the supported range.
   */
  HS_STATUS_DOMAIN = 4,
  HS_STATUS_INTERNAL = 5,
} HsStatus;

/**
 * Opaque graph handle.
 */
typedef struct HsGraph HsGraph;

/**
 * Opaque hypergraph handle.
 */
typedef struct HsHypergraph HsHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call on the same thread.
 */
const char *hs_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library, freed once.
 */
void hs_string_free(char *s);

/**
 * Parses a hypergraph from `{"vertices": [...], "hyperedges": [...]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum HsStatus hs_hypergraph_from_json(const char *json, struct HsHypergraph **out);

/**
 * The twelve-vertex example hypergraph with one pair of twins.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_hypergraph_example(struct HsHypergraph **out);

/**
 * # Safety
 * `h` must be null or a handle from this library, freed once.
 */
void hs_hypergraph_free(struct HsHypergraph *h);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t hs_hypergraph_vertex_count(const struct HsHypergraph *h);

/**
 * Number of distinct hyperedges, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t hs_hypergraph_edge_count(const struct HsHypergraph *h);

/**
 * Number of twin classes, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t hs_hypergraph_twin_class_count(const struct HsHypergraph *h);

/**
 * Parses a graph from `{"vertices": [...], "edges": [...]}`; rotation and
 * outer-face data, when present, are validated.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum HsStatus hs_graph_from_json(const char *json, struct HsGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library, freed once.
 */
void hs_graph_free(struct HsGraph *g);

/**
 * Whether every hyperedge of `h` induces a connected subgraph of `g`.
 *
 * # Safety
 * Handles must be live and `out` valid.
 */
enum HsStatus hs_is_support(const struct HsGraph *g, const struct HsHypergraph *h, bool *out);

/**
 * # Safety
 * `g` must be live and `out` valid.
 */
enum HsStatus hs_is_planar(const struct HsGraph *g, bool *out);

/**
 * Minimum number of layers of `g` over all plane embeddings. `exact` is set
 * to false when the budget ran out, in which case `layers` is an upper
 * bound. When `embedding_json` is non-null it receives the witness.
 *
 * # Safety
 * `g` must be live; `layers` and `exact` valid; `embedding_json` null or valid.
 */
enum HsStatus hs_outerplanarity(const struct HsGraph *g,
                                uint64_t budget,
                                size_t *layers,
                                bool *exact,
                                char **embedding_json);

/**
 * Exhaustive support search. `r == 0` asks for any planar support,
 * otherwise for one with at most `r` layers. On `Found`, `certificate_json`
 * (when non-null) receives the support with its embedding.
 *
 * # Safety
 * `h` must be live; `outcome` valid; `certificate_json` null or valid.
 */
enum HsStatus hs_find_support(const struct HsHypergraph *h,
                              size_t r,
                              uint64_t budget,
                              enum HsOutcome *outcome,
                              char **certificate_json);

/**
 * Base-two logarithm of the twin-class threshold for `m` hyperedges and `r`
 * layers, as a decimal string.
 *
 * # Safety
 * `out` must be valid.
 */
enum HsStatus hs_psi_log2(uint64_t m, uint64_t r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERSUPPORT_H */
