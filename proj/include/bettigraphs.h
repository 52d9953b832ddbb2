/* bettigraphs: exact computation with Betti diagrams of 2-linear resolutions
 * via graph combinatorics.
 *
 * C interface of the shared library. All functions that can fail return a
 * betti_status; on failure betti_last_error() describes the problem (the
 * message is thread-local and valid until the next failing call on the same
 * thread). Strings and string arrays returned through out-parameters are
 * heap-allocated and must be released with betti_string_free /
 * betti_string_array_free.
 *
 * Vertices are labeled 1..k. Vertex subsets are bitmasks with bit v-1
 * representing vertex v. Rationals are rendered as "p/q", or "p" when the
 * denominator is 1.
 */
#ifndef BETTIGRAPHS_H
#define BETTIGRAPHS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum betti_status {
    BETTI_OK = 0,
    BETTI_ERR_INVALID = 1,        /* invalid argument or malformed value */
    BETTI_ERR_RANGE = 2,          /* size guard exceeded */
    BETTI_ERR_OVERFLOW = 3,       /* exact arithmetic left 64-bit range */
    BETTI_ERR_PARSE = 4,          /* unreadable graph text */
    BETTI_ERR_NOT_REALIZABLE = 5, /* no threshold graph has this Betti vector */
    BETTI_ERR_NOT_CHORDAL = 6,
    BETTI_ERR_NOT_IN_CONE = 7,    /* not a module Betti vector for this beta00 */
    BETTI_ERR_INTERNAL = 8
} betti_status;

const char* betti_last_error(void);

void betti_string_free(char* s);
void betti_string_array_free(char** strings, size_t count);

/* --- graphs --------------------------------------------------------------- */

typedef struct betti_graph betti_graph;

betti_status betti_graph_new(int32_t vertex_count, betti_graph** out);
betti_status betti_graph_add_edge(betti_graph* g, int32_t u, int32_t v);
/* use_graph6 = 0: "n <k>" header plus "u v" lines; 1: graph6 one-liner */
betti_status betti_graph_parse(const char* text, int use_graph6, betti_graph** out);
betti_status betti_graph_format(const betti_graph* g, int use_graph6, char** out_text);
void betti_graph_free(betti_graph* g);

int32_t betti_graph_vertex_count(const betti_graph* g);
int32_t betti_graph_edge_count(const betti_graph* g);
/* out_pairs must hold 2 * edge_count entries; written as u1,v1,u2,v2,... */
betti_status betti_graph_edges(const betti_graph* g, int32_t* out_pairs);

betti_status betti_graph_is_chordal(const betti_graph* g, int* out);
betti_status betti_graph_component_count(const betti_graph* g, uint32_t subset, int32_t* out);
betti_status betti_graph_move_vertex(const betti_graph* g, int32_t v, int32_t w,
                                     betti_graph** out);
/* out must hold vertex_count - 1 entries */
betti_status betti_froberg_vector(const betti_graph* g, int64_t* out);

/* --- Boij-Soderberg decomposition ----------------------------------------- */

/* c_num/c_den (each of length n) receive the exact coefficients */
betti_status betti_bs_decompose(const int64_t* omega, size_t n, int64_t m, int64_t* c_num,
                                int64_t* c_den, int* out_nonneg, int* out_sums_to_m);
/* verdict: 0 admissible, 1 negative coefficient, 2 wrong sum */
betti_status betti_chordality_certificate(const int64_t* omega, size_t n, int* out_verdict);

/* --- threshold graphs ------------------------------------------------------ */

betti_status betti_threshold_build_graph(const char* sequence, betti_graph** out);
/* out must hold strlen(sequence) entries */
betti_status betti_threshold_omega(const char* sequence, int64_t* out);
betti_status betti_omega_to_threshold(const int64_t* omega, size_t n, char** out_sequence);
betti_status betti_threshold_representative(const betti_graph* g, char** out_sequence);

/* --- anti-lecture hall compositions ---------------------------------------- */

betti_status betti_is_alhc(const int64_t* lambda, size_t n, int64_t t, int* out);
betti_status betti_omega_to_alhc(const int64_t* omega, size_t n, int64_t* out_lambda,
                                 int* out_in_simplex);
betti_status betti_alhc_to_omega(const int64_t* lambda, size_t n, int64_t* out_omega);
betti_status betti_count_alhc(int32_t n, int64_t t, int64_t* out);
/* m newly allocated sequence strings on success */
betti_status betti_decompose_module(const int64_t* omega, size_t n, int64_t m,
                                    char*** out_sequences, size_t* out_count);

/* --- lattice simplices ------------------------------------------------------ */

betti_status betti_ehrhart_check(int32_t n, int64_t t, int64_t* out_count, int64_t* out_expected,
                                 int* out_pass);
betti_status betti_reflexive_check(int32_t n, int* out_integral, int* out_off_diagonal_ok,
                                   int* out_formula_discrepancies);

/* --- census ----------------------------------------------------------------- */

betti_status betti_census_row(int32_t k, int64_t* out_chordal, int64_t* out_false_chordal,
                              int64_t* out_not_chordal);
/* classification: 0 chordal, 1 false chordal, 2 not chordal */
betti_status betti_classify(const betti_graph* g, int* out_class);

/* --- formatted reports (text, or a JSON document when as_json != 0) --------- */

betti_status betti_report_betti(const betti_graph* g, int as_json, char** out);
/* out_admissible may be NULL */
betti_status betti_report_decompose(const int64_t* omega, size_t n, int64_t m, int as_json,
                                    int* out_admissible, char** out);
betti_status betti_report_threshold_rep(const betti_graph* g, int as_json, char** out);
betti_status betti_report_from_omega(const int64_t* omega, size_t n, int as_json, char** out);
betti_status betti_report_module_decompose(const int64_t* omega, size_t n, int64_t m, int as_json,
                                           char** out);
betti_status betti_report_alhc(const int64_t* vec, size_t n, int inverse, int as_json, char** out);
betti_status betti_report_pure(const int64_t* degrees, size_t len, int as_json, char** out);
/* format: 0 aligned table, 1 CSV, 2 JSON */
betti_status betti_report_census(int32_t kmax, int format, char** out);
betti_status betti_report_polytope_ehrhart(int32_t n, int64_t t, int as_json, char** out);
betti_status betti_report_polytope_reflexive(int32_t n, int as_json, char** out);
betti_status betti_report_polytope_normal(int32_t n, int64_t t, int as_json, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BETTIGRAPHS_H */
