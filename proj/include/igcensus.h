/* C interface to the igcensus library: I-graph construction and
 * classification, exact isomorphism-class counts, tuple censuses, and the
 * analytic constants their densities converge to.
 *
 * Conventions:
 *   - Every fallible call returns igc_status and writes results through
 *     out-parameters; IGC_OK means the outputs are valid.
 *   - Handles from *_create calls are owned by the caller and released
 *     with the matching *_destroy (safe on NULL).
 *   - Streaming calls invoke a callback once per row, in order, on the
 *     calling thread. Pointers handed to callbacks (names, details) are
 *     valid only for the duration of that invocation. Callbacks must not
 *     throw and must not re-enter the library on the same sieve.
 *   - 128-bit counters are returned as {hi, lo} pairs; see
 *     igc_count128_to_string / igc_count128_to_double.
 */
#ifndef IGCENSUS_H
#define IGCENSUS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum igc_status {
  IGC_OK = 0,
  IGC_INVALID_ARGUMENT = 1,
  IGC_OUT_OF_RANGE = 2,
  IGC_NO_MEMORY = 3,
  IGC_INTERNAL = 4
} igc_status;

/* Static string such as "IGC_OK"; never NULL. */
const char* igc_status_name(igc_status status);

/* Library version, e.g. "0.1.0". */
const char* igc_version(void);

/* ------------------------------------------------------------------ */
/* Smallest-prime-factor sieve: the workhorse behind every count.     */

typedef struct igc_sieve igc_sieve;

/* limit in [2, 10^8]. */
igc_status igc_sieve_create(uint64_t limit, igc_sieve** out);
void igc_sieve_destroy(igc_sieve* sieve);
uint64_t igc_sieve_limit(const igc_sieve* sieve);

/* Arithmetic functions for n in [1, limit]. */
igc_status igc_euler_phi(const igc_sieve* sieve, uint64_t n, uint64_t* out);
igc_status igc_moebius(const igc_sieve* sieve, uint64_t n, int32_t* out);
igc_status igc_divisor_count(const igc_sieve* sieve, uint64_t n,
                             uint64_t* out);
igc_status igc_distinct_prime_count(const igc_sieve* sieve, uint64_t n,
                                    uint32_t* out);
igc_status igc_jordan2(const igc_sieve* sieve, uint64_t n, uint64_t* out);
igc_status igc_dedekind_psi(const igc_sieve* sieve, uint64_t n, uint64_t* out);
/* Solutions of x^2 = 1 (mod n) and x^2 = -1 (mod n) in [0, n). */
igc_status igc_sqrt_one_count(const igc_sieve* sieve, uint64_t n,
                              uint64_t* out);
igc_status igc_sqrt_minus_one_count(const igc_sieve* sieve, uint64_t n,
                                    uint64_t* out);
/* Multiplicative components g_1..g_4 of the class-count formula. */
igc_status igc_g_value(const igc_sieve* sieve, uint32_t index, uint64_t n,
                       uint64_t* out);

/* ------------------------------------------------------------------ */
/* Tuples and graphs.                                                 */

typedef enum igc_convention {
  IGC_CONVENTION_STRICT = 0,   /* k < n/2  */
  IGC_CONVENTION_INCLUSIVE = 1 /* k <= n/2 */
} igc_convention;

/* *out = 1 iff n >= 3 and 1 <= j <= k with k within the convention. */
igc_status igc_tuple_is_valid(uint64_t n, uint64_t j, uint64_t k,
                              igc_convention convention, int* out);

/* For a valid (inclusive) tuple: is_gpg = [gcd(n,j)=1 or gcd(n,k)=1],
 * is_connected = [gcd(n,j,k)=1]. Either out-pointer may be NULL. */
igc_status igc_tuple_classify(uint64_t n, uint64_t j, uint64_t k, int* is_gpg,
                              int* is_connected);

typedef struct igc_graph igc_graph;

/* Builds I(n,j,k) for a valid inclusive tuple: 2n vertices, outer steps j,
 * spokes, inner steps k (parallel edges collapsed). */
igc_status igc_graph_create(uint64_t n, uint64_t j, uint64_t k,
                            igc_graph** out);
void igc_graph_destroy(igc_graph* graph);

igc_status igc_graph_vertex_count(const igc_graph* graph, uint32_t* out);
igc_status igc_graph_edge_count(const igc_graph* graph, uint64_t* out);
igc_status igc_graph_components(const igc_graph* graph, uint32_t* out);

typedef enum igc_graph_format {
  IGC_FORMAT_EDGELIST = 0,
  IGC_FORMAT_DOT = 1
} igc_graph_format;

/* Renders the graph as text; *out must be released with igc_text_free. */
igc_status igc_graph_render(const igc_graph* graph, igc_graph_format format,
                            char** out);
void igc_text_free(char* text);

/* Exact isomorphism test (intended for small graphs). *out = 0 or 1. */
igc_status igc_graph_isomorphic(const igc_graph* a, const igc_graph* b,
                                int* out);

/* ------------------------------------------------------------------ */
/* Exact class counts.                                                */

/* The closed-form counts for one n >= 3 (strict convention). */
igc_status igc_isomorphism_classes(const igc_sieve* sieve, uint64_t n,
                                   uint64_t* out);
igc_status igc_connected_classes(const igc_sieve* sieve, uint64_t n,
                                 uint64_t* out);
igc_status igc_petersen_classes(const igc_sieve* sieve, uint64_t n,
                                uint64_t* out);

/* Exhaustive enumeration: partitions all valid tuples for n (3 <= n <=
 * brute_cap <= 20) into isomorphism classes by pairwise testing. */
typedef struct igc_class_counts {
  uint64_t total;
  uint64_t connected;
  uint64_t gpg;
} igc_class_counts;

igc_status igc_enumerate_classes(uint64_t n, igc_convention convention,
                                 uint32_t brute_cap, igc_class_counts* out);

typedef struct igc_census_row {
  uint64_t n;
  uint64_t classes;
  uint64_t connected_classes;
  uint64_t petersen_classes;
  uint64_t cum_classes;
  uint64_t cum_connected;
  uint64_t cum_petersen;
} igc_census_row;

typedef void (*igc_census_callback)(const igc_census_row* row, void* user);

/* One row per n in [3, max_n], ascending. */
igc_status igc_census_scan(const igc_sieve* sieve, uint64_t max_n,
                           igc_census_callback callback, void* user);

/* ------------------------------------------------------------------ */
/* 128-bit counters and cumulative counts.                            */

typedef struct igc_count128 {
  uint64_t hi;
  uint64_t lo;
} igc_count128;

/* Decimal rendering; buffer_size must be at least 40. */
igc_status igc_count128_to_string(igc_count128 value, char* buffer,
                                  size_t buffer_size);
double igc_count128_to_double(igc_count128 value);

/* A(N), B(N), C(N): valid tuples with 3 <= n <= N under the inclusive
 * convention - all, generalised-Petersen, connected. */
typedef struct igc_tuple_counts {
  igc_count128 all;
  igc_count128 petersen;
  igc_count128 connected;
} igc_tuple_counts;

/* Closed-form path; max_n <= sieve limit. */
igc_status igc_tuple_counts_fast(const igc_sieve* sieve, uint64_t max_n,
                                 igc_tuple_counts* out);
/* Literal gcd loop over every tuple; max_n <= 3000. */
igc_status igc_tuple_counts_direct(uint64_t max_n, igc_tuple_counts* out);

/* CI(N), CI_c(N), CP(N): class counts summed over n in [3, N]. */
typedef struct igc_partial_sums {
  igc_count128 classes;
  igc_count128 connected;
  igc_count128 petersen;
} igc_partial_sums;

igc_status igc_partial_sums_upto(const igc_sieve* sieve, uint64_t max_n,
                                 igc_partial_sums* out);

/* ------------------------------------------------------------------ */
/* Analytic constants and reports.                                    */

/* Riemann zeta for s > 1. */
igc_status igc_zeta(double s, double* out);

typedef struct igc_interval {
  double lower;
  double upper;
} igc_interval;

/* prod_{p <= prime_limit} (1 - 2/p^2) bracketed against the infinite
 * product; prime_limit in [2, 10^8]. */
igc_status igc_mirsky_constant(uint64_t prime_limit, igc_interval* out);

typedef struct igc_constant {
  const char* name;    /* e.g. "mirsky_C" */
  double value;
  const char* printed; /* short decimal the value is usually quoted as */
} igc_constant;

typedef void (*igc_constant_callback)(const igc_constant* constant,
                                      void* user);

/* Streams every tracked constant; prime_limit 0 means the default 10^7. */
igc_status igc_density_targets(uint64_t prime_limit,
                               igc_constant_callback callback, void* user);

typedef struct igc_density_entry {
  const char* name;    /* "B/A", "C/A", "CP/CI", "CIc/CI", "CP/CIc", "CI/N^2" */
  double value;
  double target;
  double residual;     /* value - target */
} igc_density_entry;

typedef void (*igc_density_callback)(const igc_density_entry* entry,
                                     void* user);

/* The six tracked ratios at cutoff max_n (3 <= max_n <= sieve limit);
 * prime_limit 0 means the default 10^7. */
igc_status igc_density_report(const igc_sieve* sieve, uint64_t max_n,
                              uint64_t prime_limit,
                              igc_density_callback callback, void* user);

/* ------------------------------------------------------------------ */
/* Verification suites.                                               */

typedef enum igc_suite {
  IGC_SUITE_BRUTE = 0,    /* formulas vs exhaustive classes; BFS vs gcd */
  IGC_SUITE_ROOTS = 1,    /* piecewise r, s vs O(n) scans */
  IGC_SUITE_SUMS = 2,     /* partial sums vs leading terms; g_1 identity */
  IGC_SUITE_DIRICHLET = 3 /* truncated series vs zeta closed forms */
} igc_suite;

typedef struct igc_check {
  const char* name;
  int pass;
  double value;
  double expected;
  double tolerance; /* 0 for exact checks */
  const char* detail; /* first failing case, or "" */
} igc_check;

typedef void (*igc_check_callback)(const igc_check* check, void* user);

/* Runs one suite; *all_passed (optional) is set to 0/1. brute_cap is only
 * read by IGC_SUITE_BRUTE. */
igc_status igc_verify(const igc_sieve* sieve, igc_suite suite, uint64_t max_n,
                      uint32_t brute_cap, igc_check_callback callback,
                      void* user, int* all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IGCENSUS_H */
