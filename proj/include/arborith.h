/* arborith — naturals <-> full binary trees, C API.
 *
 * Every natural n >= 2 is characterized by a pair: its type (1 for primes,
 * otherwise one more than its count of distinct prime divisors) and its
 * order (1-based rank among naturals of the same type). The number 1 has no
 * pair. Mapping type to the left subtree and order to the right subtree,
 * recursively, puts the naturals in one-to-one correspondence with the
 * binary trees whose nodes have exactly zero or two children; leaves stand
 * for 1.
 *
 * Usage pattern: create an arb_context, call operations, read results
 * through out-parameters, inspect arb_context_error() when a call returns
 * nonzero. Handles (arb_tree, arb_trace, arb_report, strings from
 * arb_tree_serialize and friends) are owned by the caller and released with
 * their matching *_free function. A context is not thread-safe; use one per
 * thread. arb_tree handles are immutable and may be shared freely.
 */

#ifndef ARBORITH_H
#define ARBORITH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct arb_context arb_context;
typedef struct arb_tree arb_tree;
typedef struct arb_trace arb_trace;
typedef struct arb_report arb_report;

typedef enum arb_status {
  ARB_OK = 0,
  ARB_ERR_DOMAIN = 1,   /* argument outside the operation's domain */
  ARB_ERR_RESOURCE = 2, /* needed sieve bound exceeds the context's budget */
  ARB_ERR_PARSE = 3,    /* malformed tree text or data file content */
  ARB_ERR_IO = 4,       /* missing/unreadable/unwritable file */
  ARB_ERR_OVERFLOW = 5, /* value would exceed 2^63-1 */
  ARB_ERR_NETWORK = 6,  /* fetch failed; caches are left untouched */
  ARB_ERR_INVALID = 7,  /* null handle or out-parameter */
  ARB_ERR_INTERNAL = 8
} arb_status;

typedef enum arb_tree_format {
  ARB_FORMAT_POSITIONAL = 0, /* tree := "1" | "(" tree " " tree ")" ; left = type */
  ARB_FORMAT_LABELED = 1     /* tree := "1" | "(" ("T:"|"O:") tree " " ("T:"|"O:") tree ")" */
} arb_tree_format;

typedef enum arb_engine {
  ARB_ENGINE_CORE = 0,  /* sieve-backed implementation */
  ARB_ENGINE_ORACLE = 1 /* independent naive trial-division implementation */
} arb_engine;

const char* arb_version(void);

/* max_sieve_bound caps how far any internal sieve may grow; 0 selects the
 * default of 10^8. threads (default 1) may parallelize sieve construction
 * without changing any result. */
arb_context* arb_context_new(uint64_t max_sieve_bound);
void arb_context_free(arb_context* ctx);
uint64_t arb_context_max_sieve(const arb_context* ctx);
void arb_context_set_threads(arb_context* ctx, unsigned threads);

/* Message for the last failed call on this context ("" if none yet). */
const char* arb_context_error(const arb_context* ctx);

/* ---- pair arithmetic ---------------------------------------------- */

arb_status arb_type_of(arb_context* ctx, uint64_t n, uint64_t* type_out);
arb_status arb_order_of(arb_context* ctx, uint64_t n, uint64_t* order_out);

/* n == 1 succeeds with *has_pair = 0 (1 has no pair by construction);
 * n == 0 is ARB_ERR_DOMAIN. */
arb_status arb_pair_of(arb_context* ctx, uint64_t n, int* has_pair, uint64_t* type_out,
                       uint64_t* order_out);

/* Count of naturals in [2, x] of the given type. */
arb_status arb_count_leq(arb_context* ctx, uint64_t type_value, uint64_t x, uint64_t* count_out);

/* Inverse of the pair map: the k-th smallest natural of the given type.
 * ARB_ERR_RESOURCE means the answer exists but lies beyond the budget. */
arb_status arb_unrank(arb_context* ctx, uint64_t type_value, uint64_t order_value, uint64_t* n_out);

/* Pre-builds the context's sieve up to `bound` (benchmarks, warm-up). */
arb_status arb_sieve_reserve(arb_context* ctx, uint64_t bound);

/* Naive reference implementation; shares no code with the sieve path. */
arb_status arb_oracle_pair(arb_context* ctx, uint64_t n, uint64_t* type_out, uint64_t* order_out);

/* ---- trees --------------------------------------------------------- */

arb_status arb_encode(arb_context* ctx, uint64_t n, arb_tree** tree_out);
arb_status arb_decode(arb_context* ctx, const arb_tree* tree, uint64_t* n_out);

/* Like arb_decode but also returns the terminal-upward resolution order:
 * children before parents, root last. Node ids are pre-order indices, the
 * same ids arb_tree_render_dot emits. */
arb_status arb_decode_traced(arb_context* ctx, const arb_tree* tree, uint64_t* n_out,
                             arb_trace** trace_out);

void arb_tree_free(arb_tree* tree);
uint64_t arb_tree_nodes(const arb_tree* tree);
int arb_tree_equal(const arb_tree* a, const arb_tree* b);
arb_status arb_tree_stats(const arb_tree* tree, uint64_t* leaves, uint64_t* internal_nodes,
                          uint64_t* depth);

/* On ARB_ERR_PARSE, *error_offset (when non-NULL) receives the 0-based byte
 * position of the problem. */
arb_status arb_tree_parse(arb_context* ctx, const char* text, arb_tree_format format,
                          arb_tree** tree_out, size_t* error_offset);
arb_status arb_tree_serialize(arb_context* ctx, const arb_tree* tree, arb_tree_format format,
                              char** text_out);

/* Graphviz digraph; annotate != 0 labels every node with its decoded value
 * (and can therefore fail with ARB_ERR_RESOURCE). */
arb_status arb_tree_render_dot(arb_context* ctx, const arb_tree* tree, int annotate,
                               char** text_out);
arb_status arb_tree_render_ascii(arb_context* ctx, const arb_tree* tree, char** text_out);
void arb_string_free(char* text);

size_t arb_trace_size(const arb_trace* trace);
arb_status arb_trace_entry(const arb_trace* trace, size_t i, uint64_t* node_id, uint64_t* value);
void arb_trace_free(arb_trace* trace);

/* ---- verification --------------------------------------------------- */

/* Compares a reference CSV ("n,type,order", rows for 2..1080) against the
 * chosen engine. */
arb_status arb_verify_appendix(arb_context* ctx, const char* csv_path, arb_engine engine,
                               arb_report** report_out);

/* Compares unrank(type, k), k = 1..k_max, against an OEIS b-file. */
arb_status arb_oeis_check(arb_context* ctx, uint64_t type_value, uint64_t k_max,
                          const char* bfile_path, arb_report** report_out);

/* Downloads https://oeis.org/<id>/b<digits>.txt into cache_path; on failure
 * the cache file is untouched. id must look like "A000040". */
arb_status arb_oeis_fetch(arb_context* ctx, const char* sequence_id, const char* cache_path);

uint64_t arb_report_total(const arb_report* report);
uint64_t arb_report_matches(const arb_report* report);
uint64_t arb_report_mismatches(const arb_report* report);
arb_status arb_report_mismatch(const arb_report* report, uint64_t i, uint64_t* n,
                               uint64_t* expected_type, uint64_t* expected_order,
                               uint64_t* computed_type, uint64_t* computed_order);
void arb_report_free(arb_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ARBORITH_H */
