/*
 * C interface to the socialist-prime search library.
 *
 * Conventions:
 *   - Every fallible call returns sp_status; SP_OK is zero.
 *   - On failure, sp_last_error() describes the most recent error raised on
 *     the calling thread. The pointer stays valid until the next failing
 *     call on that thread.
 *   - Strings returned through char** are heap-allocated, NUL-terminated
 *     and must be released with sp_string_free().
 *   - Handles are opaque; each *_create has a matching *_destroy that
 *     accepts NULL.
 */
#ifndef SOCIALIST_SOCIALIST_H
#define SOCIALIST_SOCIALIST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SOCIALIST_BUILDING_LIBRARY)
#    define SP_API __declspec(dllexport)
#  else
#    define SP_API __declspec(dllimport)
#  endif
#else
#  define SP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
  SP_OK = 0,
  SP_ERR_INVALID_ARGUMENT = 1,
  SP_ERR_IO = 2,
  SP_ERR_FORMAT = 3,               /* malformed input file */
  SP_ERR_CHECKPOINT_MISMATCH = 4,  /* checkpoint belongs to another config */
  SP_ERR_CHECKPOINT_CORRUPT = 5,
  SP_ERR_CONTRADICTION = 6,        /* a proven identity failed */
  SP_ERR_INTERNAL = 7
} sp_status;

SP_API const char* sp_version(void);
SP_API const char* sp_last_error(void);
SP_API const char* sp_status_name(sp_status status);
SP_API void sp_string_free(char* s);

/* ---- modular arithmetic ------------------------------------------------ */

SP_API sp_status sp_mul_mod(uint64_t a, uint64_t b, uint64_t m, uint64_t* out);
SP_API sp_status sp_pow_mod(uint64_t a, uint64_t e, uint64_t m, uint64_t* out);
SP_API sp_status sp_jacobi(int64_t a, uint64_t n, int* out);
SP_API int sp_is_prime(uint64_t n);
/* *found is 0 when a is a non-residue; otherwise *out is the smaller root. */
SP_API sp_status sp_sqrt_mod(uint64_t a, uint64_t p, uint64_t* out, int* found);

/* ---- prime enumeration ------------------------------------------------- */

typedef struct sp_prime_iter sp_prime_iter;

/* Primes in [lo, hi); only those = 5 (mod 8) when only_5_mod_8 != 0. */
SP_API sp_status sp_prime_iter_create(uint64_t lo, uint64_t hi, int only_5_mod_8, sp_prime_iter** out);
/* Returns 1 and stores the next prime, or 0 when the range is exhausted. */
SP_API int sp_prime_iter_next(sp_prime_iter* it, uint64_t* p);
SP_API void sp_prime_iter_destroy(sp_prime_iter* it);

/* ---- necessary conditions ---------------------------------------------- */

SP_API sp_status sp_rs_filter(uint64_t p, int* pass);
SP_API sp_status sp_t_filter(uint64_t p, int* pass);
SP_API sp_status sp_quarter_factorial_filter(uint64_t p, int* pass);
/* Up to three roots, ascending. */
SP_API sp_status sp_cubic_roots(uint64_t p, uint64_t roots[3], size_t* count);
/* Full condition report as one JSON object. */
SP_API sp_status sp_conditions_json(uint64_t p, char** json_out);

/* ---- left factorials --------------------------------------------------- */

SP_API sp_status sp_left_factorial(uint64_t p, uint64_t* r_p);
/* values[i] receives !^ks[i] p mod p. */
SP_API sp_status sp_generalized_left_factorial(uint64_t p, const uint64_t* ks, size_t count, uint64_t* values);
SP_API sp_status sp_lfc_check(uint64_t p, int* holds);
SP_API sp_status sp_lfck_check(uint64_t p, uint64_t k, int* holds);
/* {"p":..,"r_p":..} plus a "generalized" list when count > 0. */
SP_API sp_status sp_leftfact_json(uint64_t p, const uint64_t* ks, size_t count, char** json_out);

typedef struct sp_residue_table sp_residue_table;

SP_API sp_status sp_residue_table_create(sp_residue_table** out);
/* Records must arrive in strictly increasing p with r_p < p. */
SP_API sp_status sp_residue_table_append(sp_residue_table* table, uint64_t p, uint64_t r_p);
SP_API size_t sp_residue_table_size(const sp_residue_table* table);
SP_API sp_status sp_residue_table_get(const sp_residue_table* table, size_t index, uint64_t* p, uint64_t* r_p);
SP_API sp_status sp_residue_table_write(const sp_residue_table* table, const char* path);
SP_API sp_status sp_residue_table_read(const char* path, sp_residue_table** out);
SP_API void sp_residue_table_destroy(sp_residue_table* table);

/* ---- duplicate scan ---------------------------------------------------- */

typedef enum sp_collision_status {
  SP_COLLISION_ELIMINATED = 0,
  SP_COLLISION_CANDIDATE = 1,
  SP_COLLISION_ITERATION_CAP = 2
} sp_collision_status;

typedef struct sp_collision_outcome {
  uint64_t p;
  sp_collision_status status;
  uint64_t iterations;
  int has_witness;
  uint64_t witness_i;
  uint64_t witness_j;
  uint64_t witness_value;
} sp_collision_outcome;

typedef struct sp_scanner sp_scanner;

/* max_iterations == 0 means no cap. */
SP_API sp_status sp_scanner_create(unsigned table_bits, int witness_mode, uint64_t max_iterations, sp_scanner** out);
SP_API sp_status sp_scanner_scan(sp_scanner* scanner, uint64_t p, sp_collision_outcome* out);
SP_API void sp_scanner_destroy(sp_scanner* scanner);
SP_API sp_status sp_expected_iterations(uint64_t p, double* out);

/* ---- brute-force oracle ------------------------------------------------ */

typedef struct sp_verdict {
  uint64_t p;
  int is_socialist;
  int has_duplicate;
  uint64_t duplicate_i;
  uint64_t duplicate_j;
  int has_missing_residue;
  uint64_t missing_residue;
  int res_r_consistent; /* 1, 0, or -1 when not applicable */
} sp_verdict;

SP_API sp_status sp_brute_force(uint64_t p, sp_verdict* out);
SP_API sp_status sp_verify_json(uint64_t p, char** json_out);
SP_API sp_status sp_wilson_identity_check(uint64_t p, uint64_t k, int* holds);
SP_API sp_status sp_quadruple_decomposition(uint64_t p, size_t* quadruple_count, int* has_defect, uint64_t* defect);

/* ---- heuristic estimates ----------------------------------------------- */

typedef enum sp_estimate_kind {
  SP_ESTIMATE_EXACT_WP = 0,
  SP_ESTIMATE_WP_BOUND = 1,
  SP_ESTIMATE_INTERVAL_SUM = 2,
  SP_ESTIMATE_TAIL_BOUND = 3
} sp_estimate_kind;

typedef struct sp_estimate {
  sp_estimate_kind kind;
  double argument;
  double argument_hi; /* interval sums only */
  double ln_value;
  double log10_value;
} sp_estimate;

SP_API sp_status sp_ln_wp(uint64_t p, sp_estimate* out);
SP_API sp_status sp_wp_upper_bound(uint64_t p, sp_estimate* out);
SP_API sp_status sp_interval_sum_wp(uint64_t a, uint64_t b, sp_estimate* out);
SP_API sp_status sp_tail_bound(double a, sp_estimate* out);
SP_API sp_status sp_estimate_json(const sp_estimate* estimate, char** json_out);

/* ---- range search ------------------------------------------------------ */

typedef struct sp_search_config sp_search_config;
typedef struct sp_search_report sp_search_report;

typedef struct sp_search_counters {
  uint64_t primes_seen;
  uint64_t rs_passed;
  uint64_t t_passed;
  uint64_t eliminated;
  uint64_t candidates;
  uint64_t capped;
} sp_search_counters;

/* Searches primes in [lo, hi). */
SP_API sp_status sp_search_config_create(uint64_t lo, uint64_t hi, sp_search_config** out);
SP_API void sp_search_config_destroy(sp_search_config* config);
/* Comma list over rs, t, qf, lfc. */
SP_API sp_status sp_search_config_set_filters(sp_search_config* config, const char* filters);
SP_API sp_status sp_search_config_set_table_bits(sp_search_config* config, unsigned bits);
SP_API sp_status sp_search_config_set_witness(sp_search_config* config, int enabled);
SP_API sp_status sp_search_config_set_max_iterations(sp_search_config* config, uint64_t cap);
SP_API sp_status sp_search_config_set_workers(sp_search_config* config, unsigned workers);
SP_API sp_status sp_search_config_set_chunk_size(sp_search_config* config, uint64_t primes);
SP_API sp_status sp_search_config_set_segment_size(sp_search_config* config, uint64_t integers);
/* "jsonl" or "csv". */
SP_API sp_status sp_search_config_set_format(sp_search_config* config, const char* format);
/* NULL: discard records; "-": standard output; otherwise a file path. */
SP_API sp_status sp_search_config_set_output(sp_search_config* config, const char* path);
SP_API sp_status sp_search_config_set_checkpoint(sp_search_config* config, const char* path, int resume);
/* Stop after this many chunks in one run; 0 removes the limit. */
SP_API sp_status sp_search_config_set_max_chunks(sp_search_config* config, uint64_t chunks);

SP_API sp_status sp_search_run(const sp_search_config* config, sp_search_report** out);
SP_API sp_status sp_search_report_json(const sp_search_report* report, char** json_out);
SP_API sp_status sp_search_report_counters(const sp_search_report* report, sp_search_counters* out);
SP_API size_t sp_search_report_survivor_count(const sp_search_report* report);
SP_API int sp_search_report_complete(const sp_search_report* report);
SP_API double sp_search_report_elapsed(const sp_search_report* report);
SP_API void sp_search_report_destroy(sp_search_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SOCIALIST_SOCIALIST_H */
