/*
 * bratteli.h - C interface to the SU(2)_k Bratteli diagram path counter.
 *
 * Counts D_k(i,j): directed paths from (0,0) to height i after j steps in
 * the diagram whose heights are bounded by k. Arguments are always ordered
 * (k, i, j) with i the height and j the length.
 *
 * Every function returning bratteli_status leaves its outputs untouched on
 * failure; bratteli_last_error() then describes the failure on the calling
 * thread. Exact integers cross the interface as decimal strings allocated by
 * the library; release them with bratteli_string_free(). Handles are
 * immutable after creation and may be shared across threads.
 */
#ifndef BRATTELI_H
#define BRATTELI_H

#include <stddef.h>
#include <stdint.h>

#if defined(BRATTELI_BUILDING_LIBRARY)
#define BRATTELI_API __attribute__((visibility("default")))
#else
#define BRATTELI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bratteli_status {
  BRATTELI_OK = 0,
  BRATTELI_ERR_ARGUMENT = 1,    /* null pointer or unknown enumerator */
  BRATTELI_ERR_DOMAIN = 2,      /* argument outside the operation's domain */
  BRATTELI_ERR_BUDGET = 3,      /* enumeration budget exhausted */
  BRATTELI_ERR_RESOURCE = 4,    /* size limit exceeded or out of memory */
  BRATTELI_ERR_PRECISION = 5,   /* adaptive precision exhausted */
  BRATTELI_ERR_INTEGRALITY = 6, /* negative coefficient in a counting series */
  BRATTELI_ERR_PARSE = 7,       /* malformed serialized input */
  BRATTELI_ERR_INTERNAL = 8
} bratteli_status;

typedef enum bratteli_backend {
  BRATTELI_BACKEND_DP = 0,       /* column recurrence */
  BRATTELI_BACKEND_DYCK = 1,     /* brute-force path enumeration, j <= 26 */
  BRATTELI_BACKEND_GF = 2,       /* rational generating function series */
  BRATTELI_BACKEND_SPECTRAL = 3, /* residue power sum, adaptive precision */
  BRATTELI_BACKEND_MATRIX = 4    /* transfer-matrix binary powering */
} bratteli_backend;

/* Longest path the dyck backend enumerates. */
#define BRATTELI_DYCK_MAX_LENGTH 26

/* Zero fields select the library defaults. */
typedef struct bratteli_count_options {
  uint64_t dyck_budget;   /* search nodes for the dyck backend */
  long initial_bits;      /* spectral: starting precision, >= 64 */
  long max_bits;          /* spectral: precision ceiling */
  double accept_distance; /* spectral: rounding acceptance, <= 2^-16 */
} bratteli_count_options;

BRATTELI_API const char* bratteli_version(void);
BRATTELI_API const char* bratteli_status_name(bratteli_status status);
/* Message of the most recent failure on this thread; "" if none. */
BRATTELI_API const char* bratteli_last_error(void);
BRATTELI_API void bratteli_string_free(char* s);

BRATTELI_API void bratteli_count_options_init(bratteli_count_options* opts);

/* D_k(i,j) by the chosen backend; opts may be NULL. Unreachable vertices,
 * including i > k, count "0". */
BRATTELI_API bratteli_status bratteli_count(bratteli_backend backend, uint32_t k, uint32_t i,
                                            uint32_t j, const bratteli_count_options* opts,
                                            char** out);

/* In- and outdegree of a reachable vertex. */
BRATTELI_API bratteli_status bratteli_degrees(uint32_t k, uint32_t i, uint32_t j,
                                              uint32_t* indegree, uint32_t* outdegree);

/* Closed forms. level is 1..5, or BRATTELI_LEVEL_UNBOUNDED for the ballot
 * numbers of the k -> infinity limit. */
#define BRATTELI_LEVEL_UNBOUNDED (-1)
BRATTELI_API bratteli_status bratteli_special_case(int level, uint32_t i, uint32_t j, char** out);

/* Splits a bounded path word over {u,d} into its factors P_1..P_{i+1},
 * written joined by '|' (empty factors stay empty, e.g. "ud||"). */
BRATTELI_API bratteli_status bratteli_factorize(const char* path, uint32_t k, char** out);

/* ---- count tables -------------------------------------------------------- */

typedef struct bratteli_table bratteli_table;

typedef enum bratteli_table_format {
  BRATTELI_FORMAT_CSV = 0,
  BRATTELI_FORMAT_JSON = 1,
  BRATTELI_FORMAT_PRETTY = 2,
  BRATTELI_FORMAT_PRETTY_COLOR = 3
} bratteli_table_format;

/* max_entries = 0 selects the default budget. */
BRATTELI_API bratteli_status bratteli_table_build(uint32_t k, uint32_t jmax, size_t max_entries,
                                                  bratteli_table** out);
BRATTELI_API bratteli_status bratteli_table_from_json(const char* text, bratteli_table** out);
BRATTELI_API void bratteli_table_free(bratteli_table* t);
BRATTELI_API uint32_t bratteli_table_k(const bratteli_table* t);
BRATTELI_API uint32_t bratteli_table_jmax(const bratteli_table* t);
BRATTELI_API size_t bratteli_table_size(const bratteli_table* t);
/* "0" where the vertex is absent from the table. */
BRATTELI_API bratteli_status bratteli_table_lookup(const bratteli_table* t, uint32_t i, uint32_t j,
                                                   char** out);
BRATTELI_API bratteli_status bratteli_table_render(const bratteli_table* t,
                                                   bratteli_table_format format, char** out);
/* 1 if equal, 0 otherwise (including NULL arguments). */
BRATTELI_API int bratteli_table_equal(const bratteli_table* a, const bratteli_table* b);

/* ---- generating functions ----------------------------------------------- */

typedef struct bratteli_gf bratteli_gf;

typedef enum bratteli_gf_form {
  BRATTELI_GF_CLOSED = 0,  /* x^i Uhat_{k-i}(x) / Uhat_{k+1}(x) */
  BRATTELI_GF_PRODUCT = 1  /* R_{k+1}(x^2) prod_r x R_{k+1-r}(x^2) */
} bratteli_gf_form;

BRATTELI_API bratteli_status bratteli_gf_create(bratteli_gf_form form, uint32_t k, uint32_t i,
                                                bratteli_gf** out);
/* R_k(x). */
BRATTELI_API bratteli_status bratteli_gf_r(uint32_t k, bratteli_gf** out);
/* Writes g(x) = x^shift h(x^2) and returns h. */
BRATTELI_API bratteli_status bratteli_gf_even(const bratteli_gf* g, unsigned* shift,
                                              bratteli_gf** out);
BRATTELI_API void bratteli_gf_free(bratteli_gf* g);
BRATTELI_API int bratteli_gf_equal(const bratteli_gf* a, const bratteli_gf* b);
/* Ascending coefficients, space separated; "0" for the zero polynomial. */
BRATTELI_API bratteli_status bratteli_gf_numerator(const bratteli_gf* g, char** out);
BRATTELI_API bratteli_status bratteli_gf_denominator(const bratteli_gf* g, char** out);
/* Series coefficients c_0..c_n, space separated. */
BRATTELI_API bratteli_status bratteli_gf_series(const bratteli_gf* g, size_t n, char** out);
/* c_m = coeffs[0] c_{m-1} + ... for m >= number of initial terms. */
BRATTELI_API bratteli_status bratteli_gf_recurrence(const bratteli_gf* g, size_t* order,
                                                    char** coeffs, char** initial);

/* ---- residues and growth ------------------------------------------------- */

typedef struct bratteli_spectral bratteli_spectral;

BRATTELI_API bratteli_status bratteli_residues(uint32_t k, uint32_t i, long bits,
                                               bratteli_spectral** out);
BRATTELI_API void bratteli_spectral_free(bratteli_spectral* s);
/* Number of terms, k+1. */
BRATTELI_API size_t bratteli_spectral_size(const bratteli_spectral* s);
/* Term r (1-based) rendered with `digits` significant digits. */
BRATTELI_API bratteli_status bratteli_spectral_term(const bratteli_spectral* s, size_t r,
                                                    int digits, char** weight, char** pole);
BRATTELI_API bratteli_status bratteli_spectral_weight_sum(const bratteli_spectral* s, int digits,
                                                          char** out);

/* 2 cos(pi/(k+2)). */
BRATTELI_API bratteli_status bratteli_growth_rate(uint32_t k, long bits, int digits, char** out);
/* sqrt(D_k(i,jmax) / D_k(i,jmax-2)); difference (nullable) receives
 * empirical - growth rate. */
BRATTELI_API bratteli_status bratteli_empirical_rate(uint32_t k, uint32_t i, uint32_t jmax,
                                                     long bits, int digits, char** rate,
                                                     char** difference);

#ifdef __cplusplus
}
#endif

#endif /* BRATTELI_H */
