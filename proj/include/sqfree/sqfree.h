/*
 * C interface to the sqfree library: ternary square-free words, Brinkhuis
 * triple-pairs, the induced substitution and the pair search.
 *
 * All handles are opaque and owned by the caller once returned; release them
 * with the matching *_free function. Strings returned through `char**` are
 * NUL-terminated and released with sqf_string_free. Every fallible call
 * returns an sqf_status; on failure sqf_last_error() describes the problem
 * (the message is thread-local and valid until the next call on that thread).
 */
#ifndef SQFREE_SQFREE_H
#define SQFREE_SQFREE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef SQFREE_BUILDING
#    define SQFREE_API __declspec(dllexport)
#  else
#    define SQFREE_API __declspec(dllimport)
#  endif
#else
#  define SQFREE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sqf_status {
  SQF_OK = 0,
  SQF_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad index */
  SQF_ERR_PARSE = 2,            /* bad letter, bad choice, malformed pair file */
  SQF_ERR_LENGTH_MISMATCH = 3,
  SQF_ERR_DEGENERATE_K = 4,     /* k < 2 */
  SQF_ERR_RANGE = 5,
  SQF_ERR_BUDGET = 6,
  SQF_ERR_PRECONDITION = 7,     /* e.g. expansion of an unverified pair */
  SQF_ERR_CONFIG = 8,
  SQF_ERR_INTERNAL = 9
} sqf_status;

typedef struct sqf_pair sqf_pair;
typedef struct sqf_certificate sqf_certificate;
typedef struct sqf_search_outcome sqf_search_outcome;

SQFREE_API const char* sqf_last_error(void);
SQFREE_API void sqf_string_free(char* s);

/* ---- words ------------------------------------------------------------ */

/* a(n), the number of ternary square-free words of length n. */
SQFREE_API sqf_status sqf_count_square_free(uint32_t n, uint64_t* out);

/* Parses `word` (digits 0-2, whitespace ignored). *found is set to 1 and the
 * smallest-start, smallest-period square is reported, or *found = 0. */
SQFREE_API sqf_status sqf_find_square(const char* word, int* found, size_t* start,
                                      size_t* period);

/* ---- triple-pairs ----------------------------------------------------- */

SQFREE_API sqf_status sqf_pair_paper(sqf_pair** out);
/* Pair file text: '#' comment lines, six word lines U0 V0 U1 V1 U2 V2. */
SQFREE_API sqf_status sqf_pair_parse(const char* text, sqf_pair** out);
/* words[0..5] in the order U0, V0, U1, V1, U2, V2. */
SQFREE_API sqf_status sqf_pair_from_words(const char* const words[6], sqf_pair** out);
SQFREE_API void sqf_pair_free(sqf_pair* pair);

SQFREE_API sqf_status sqf_pair_k(const sqf_pair* pair, size_t* k);
/* index 0..5 in file order. */
SQFREE_API sqf_status sqf_pair_word(const sqf_pair* pair, int index, char** out);
/* Pair file text without comments. */
SQFREE_API sqf_status sqf_pair_format(const sqf_pair* pair, char** out);
/* Canonical representative; *out is a new handle. */
SQFREE_API sqf_status sqf_pair_canonicalize(const sqf_pair* pair, sqf_pair** out);

SQFREE_API sqf_status sqf_pair_verify(const sqf_pair* pair, sqf_certificate** out);
SQFREE_API int sqf_certificate_passed(const sqf_certificate* cert);
SQFREE_API sqf_status sqf_certificate_text(const sqf_certificate* cert, char** out);
SQFREE_API void sqf_certificate_free(sqf_certificate* cert);

/* ---- substitution and bounds ------------------------------------------ */

/* `choices` is a string over 'U','V' of the same length as `word`. */
SQFREE_API sqf_status sqf_substitute(const sqf_pair* pair, const char* word,
                                     const char* choices, char** out);

typedef struct sqf_expansion_report {
  uint64_t total;
  uint64_t distinct;
  uint64_t square_free;
  int all_square_free;
  int all_distinct;
} sqf_expansion_report;

/* budget 0 selects the default guard of 10^7 images. */
SQFREE_API sqf_status sqf_verify_expansion(const sqf_pair* pair, uint32_t n, uint64_t budget,
                                           sqf_expansion_report* out);

/* 2^(1/(k-1)) */
SQFREE_API sqf_status sqf_lower_bound(uint32_t k, double* out);

/* ---- search ------------------------------------------------------------ */

typedef struct sqf_search_config {
  uint32_t k;
  int shift_symmetry;        /* default 1 */
  int palindrome_constraint; /* default 0 */
  int first_letter;          /* 0..2, or -1 for none; default 2 */
  uint64_t max_results;      /* 0 = unlimited */
  uint64_t node_budget;      /* 0 = unlimited */
  uint32_t parallel_shards;  /* worker threads, default 1 */
  int canonicalize;          /* default 1 */
} sqf_search_config;

SQFREE_API void sqf_search_config_init(sqf_search_config* config, uint32_t k);
SQFREE_API sqf_status sqf_find_pairs(const sqf_search_config* config,
                                     sqf_search_outcome** out);
SQFREE_API size_t sqf_outcome_count(const sqf_search_outcome* outcome);
/* Borrowed; valid while the outcome lives. */
SQFREE_API const sqf_pair* sqf_outcome_pair(const sqf_search_outcome* outcome, size_t index);
SQFREE_API uint64_t sqf_outcome_nodes(const sqf_search_outcome* outcome);
SQFREE_API int sqf_outcome_exhausted(const sqf_search_outcome* outcome);
SQFREE_API void sqf_outcome_free(sqf_search_outcome* outcome);

#ifdef __cplusplus
}
#endif

#endif /* SQFREE_SQFREE_H */
