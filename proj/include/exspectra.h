/* exspectra — extended adjacency spectra of graphs: exact matrices,
 * characteristic polynomials, Perron radii, tree rankings, and exhaustive
 * verification scans, behind a C89-compatible surface.
 *
 * Conventions:
 *  - Functions that can fail return ex_status; EX_OK is 0.
 *  - ex_last_error() returns a thread-local message for the most recent
 *    failure on the calling thread.
 *  - Strings returned through char** out-parameters are heap-allocated by the
 *    library and must be released with ex_string_free().
 *  - Graph handles are opaque; release with ex_graph_free().
 */
#ifndef EXSPECTRA_H
#define EXSPECTRA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ex_status {
    EX_OK = 0,
    EX_ERROR_INVALID_ARGUMENT = 1,
    EX_ERROR_PARSE = 2,
    EX_ERROR_DISCONNECTED = 3,
    EX_ERROR_ISOLATED_VERTEX = 4,
    EX_ERROR_NOT_A_TREE = 5,
    EX_ERROR_NO_CONVERGENCE = 6,
    EX_ERROR_MIN_GAP = 7,
    EX_ERROR_IO = 8,
    EX_ERROR_INTERNAL = 9
} ex_status;

typedef struct ex_graph ex_graph;

typedef struct ex_solve_options {
    double tol;   /* convergence tolerance, default 1e-12 */
    int max_iter; /* power iteration cap, default 100000 */
    int jobs;     /* parallel workers for scans; 0 = all cores */
} ex_solve_options;

const char* ex_version(void);
const char* ex_status_name(ex_status status);
const char* ex_last_error(void);
void ex_string_free(char* s);
void ex_solve_options_init(ex_solve_options* opts);

/* ---- graph construction ----
 * endpoints holds edge_count (u,v) pairs flattened to 2*edge_count ints.
 * Family names: P S C K_ab T1 T2 T3 T4 T5 Z W H1..H6 spider double_star.
 * Parameter conventions: P/S/C/T1..T5/Z/W take {n}; K_ab and double_star take
 * {a,b}; H1..H6 take none; spider takes its leg lengths. */
ex_status ex_graph_from_edge_list(int n, const int* endpoints, int edge_count, ex_graph** out);
ex_status ex_graph_family(const char* name, const int* params, int param_count, ex_graph** out);
/* Edge-list text: "n m" header, then m lines "u v"; '#' comments. */
ex_status ex_graph_parse(const char* text, ex_graph** out);
ex_status ex_graph_read_file(const char* path, ex_graph** out);
void ex_graph_free(ex_graph* g);

/* ---- graph queries ---- */
int ex_graph_order(const ex_graph* g);
int ex_graph_size(const ex_graph* g);
/* out must hold ex_graph_order(g) ints */
ex_status ex_graph_degrees(const ex_graph* g, int* out);
int ex_graph_is_connected(const ex_graph* g);
int ex_graph_is_tree(const ex_graph* g);
ex_status ex_graph_delete_vertex(const ex_graph* g, int v, ex_graph** out);
/* isomorphism-invariant bracket code; trees only */
ex_status ex_graph_canonical_code(const ex_graph* g, char** out);
/* "regular", "bipartite_semiregular", or "other"; connected input required */
ex_status ex_graph_regularity_class(const ex_graph* g, char** out);
ex_status ex_graph_edge_list_text(const ex_graph* g, char** out);

/* ---- spectral and index computations ---- */
ex_status ex_eta1(const ex_graph* g, const ex_solve_options* opts, double* value);
ex_status ex_lambda1(const ex_graph* g, const ex_solve_options* opts, double* value);
ex_status ex_extended_energy(const ex_graph* g, const ex_solve_options* opts, double* value);
ex_status ex_first_zagreb(const ex_graph* g, long long* value);
ex_status ex_forgotten(const ex_graph* g, long long* value);
/* F/M1 as a reduced "p/q" string */
ex_status ex_fm1_bound(const ex_graph* g, char** out);
/* lambda1 <= eta1 <= weight(max_degree, min_degree) * lambda1 */
ex_status ex_sandwich(const ex_graph* g, const ex_solve_options* opts, double* lower,
                      double* upper);
/* Exact characteristic polynomial of the adjacency (extended=0) or extended
 * adjacency (extended=1) matrix, as a JSON array of "p/q" strings ascending
 * by degree. */
ex_status ex_charpoly(const ex_graph* g, int extended, char** json_out);

/* ---- enumeration ----
 * emit is "count", "codes" (one canonical code per line), or "edges"
 * (edge-list blocks separated by blank lines); trees are listed one per
 * isomorphism class in canonical-code order. */
ex_status ex_enumerate_trees(int n, const char* emit, char** out);
/* Labeled connected graphs on n vertices (2 <= n <= 7); dedup counts
 * isomorphism classes instead. */
ex_status ex_count_connected(int n, int dedup, long long* out);

/* ---- rankings and verification ----
 * JSON array of {code, eta1, lambda1, degrees}: the top `top` and bottom
 * `bottom` trees on n vertices by extended spectral radius. */
ex_status ex_rank_trees(int n, int top, int bottom, const ex_solve_options* opts,
                        char** json_out);
/* Named checks: theorem-1.2, theorem-1.3, theorem-4.1, conjecture,
 * claims-exact, g-identities, forest-identity, path-facts, appendix, bounds,
 * star-closed-form. n_lo/n_hi <= 0 select the check's default range. The
 * report is JSON (csv=0) or CSV (csv=1); *passed is 1 iff every assertion in
 * the check held. */
ex_status ex_verify(const char* check, int n_lo, int n_hi, const ex_solve_options* opts, int csv,
                    char** report_out, int* passed);
/* newline-separated list of check names */
ex_status ex_known_checks(char** out);

#ifdef __cplusplus
}
#endif

#endif /* EXSPECTRA_H */
