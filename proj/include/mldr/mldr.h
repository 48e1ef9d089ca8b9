// Copyright 2026 The mldr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the mldr library. All objects are opaque handles owned by
 * the caller and released with the matching *_destroy function. Functions
 * return an mldr_status; on failure mldr_last_error() describes the cause
 * for the calling thread until the next call into the library.
 *
 * Strings filled into caller buffers are NUL-terminated. When a buffer is
 * too small the call returns MLDR_BUFFER_TOO_SMALL and stores the required
 * size (including the terminator) in *needed when needed is non-NULL.
 */
#ifndef MLDR_MLDR_H_
#define MLDR_MLDR_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MLDR_API __declspec(dllexport)
#else
#define MLDR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mldr_status {
  MLDR_OK = 0,
  MLDR_INVALID_ARGUMENT = 1,
  MLDR_NOT_PRIME_POWER = 2,
  MLDR_PARSE = 3,
  MLDR_RANK_ZERO = 4,
  MLDR_BUDGET_EXCEEDED = 5,
  MLDR_MODULUS_MISMATCH = 6,
  MLDR_BUFFER_TOO_SMALL = 7,
  MLDR_OVERFLOW = 8,
  MLDR_INAPPLICABLE = 9,
  MLDR_INTERNAL = 10
} mldr_status;

MLDR_API const char* mldr_status_name(mldr_status status);
MLDR_API const char* mldr_last_error(void);
MLDR_API const char* mldr_version(void);

/* ---- codes ---------------------------------------------------------------- */

typedef struct mldr_code mldr_code;

/* Row-major rows x cols generator matrix over Z_{p^t}. */
MLDR_API mldr_status mldr_code_create(uint64_t p, unsigned t, size_t rows,
                                      size_t cols, const uint64_t* entries,
                                      mldr_code** out);
/* Code file text: "p t n" header, then one row per line. On MLDR_PARSE,
 * *error_line (if non-NULL) receives the offending line number. */
MLDR_API mldr_status mldr_code_parse(const char* text, mldr_code** out,
                                     size_t* error_line);
MLDR_API mldr_status mldr_code_load(const char* path, mldr_code** out,
                                    size_t* error_line);
MLDR_API void mldr_code_destroy(mldr_code* code);

typedef struct mldr_code_info {
  uint64_t p;
  unsigned t;
  uint64_t q;
  size_t n;
  size_t rank;
  size_t free_rank;
  /* |C| = p^size_exponent */
  size_t size_exponent;
  /* kappa = kappa_num / kappa_den in lowest terms */
  int64_t kappa_num;
  int64_t kappa_den;
} mldr_code_info;

MLDR_API mldr_status mldr_code_info_get(const mldr_code* code,
                                        mldr_code_info* info);
/* k_1..k_t; *count receives t. Fails with MLDR_BUFFER_TOO_SMALL when
 * capacity < t. */
MLDR_API mldr_status mldr_code_rank_profile(const mldr_code* code,
                                            size_t* profile, size_t capacity,
                                            size_t* count);

typedef struct mldr_code_summary {
  uint64_t min_hamming;
  uint64_t min_lee;
  int64_t defect;
  int is_free;
  int is_mds_socle;
  int is_mdr;
} mldr_code_summary;

/* Enumerates the code; fails with MLDR_BUDGET_EXCEEDED if |C| > budget. */
MLDR_API mldr_status mldr_code_summarize(const mldr_code* code,
                                         uint64_t budget,
                                         mldr_code_summary* out);
MLDR_API mldr_status mldr_code_socle(const mldr_code* code, mldr_code** out);
MLDR_API mldr_status mldr_code_format(const mldr_code* code, char* buffer,
                                      size_t size, size_t* needed);

/* ---- bounds --------------------------------------------------------------- */

/* Values of mldr_bound.id; see mldr_bound_name(). */
#define MLDR_BOUND_COUNT 19

typedef struct mldr_bound {
  int id;
  int applicable;
  /* Exact value "n" or "n/d"; empty when inapplicable. */
  char value[64];
  int64_t floor_value;
  char note[96];
} mldr_bound;

MLDR_API const char* mldr_bound_name(int id);
/* Returns -1 for an unknown name. */
MLDR_API int mldr_bound_from_name(const char* name);

/* Every rank-level bound on Phi(n, K, q). */
MLDR_API mldr_status mldr_bounds_rank(size_t n, size_t K, uint64_t q,
                                      mldr_bound* out, size_t capacity,
                                      size_t* count);
/* Code-level bounds (kappa, free rank, defect). */
MLDR_API mldr_status mldr_bounds_code(const mldr_code* code, uint64_t budget,
                                      mldr_bound* out, size_t capacity,
                                      size_t* count);
MLDR_API mldr_status mldr_best_bound(size_t n, size_t K, uint64_t q,
                                     mldr_bound* out);

/* ---- search --------------------------------------------------------------- */

typedef struct mldr_search_options {
  uint64_t codeword_budget;
  uint64_t total_code_budget;
  unsigned workers;
} mldr_search_options;

MLDR_API void mldr_search_options_default(mldr_search_options* options);

typedef struct mldr_phi_result {
  /* 1 when exact, 0 when a lower bound from an exhausted budget. */
  int exact;
  uint64_t phi;
  uint64_t codes_examined;
  /* Owned by the caller; NULL when no code was examined. */
  mldr_code* witness;
  char note[256];
} mldr_phi_result;

MLDR_API mldr_status mldr_phi(size_t n, size_t K, uint64_t q,
                              const mldr_search_options* options,
                              mldr_phi_result* out);

typedef enum mldr_verdict {
  MLDR_VERDICT_PROVEN = 0,
  MLDR_VERDICT_BY_BOUND = 1,
  MLDR_VERDICT_NOT_MLDR = 2,
  MLDR_VERDICT_UNKNOWN = 3
} mldr_verdict;

typedef struct mldr_certificate {
  mldr_verdict verdict;
  uint64_t min_lee;
  mldr_bound best;
  int has_oracle;
  uint64_t oracle_phi;
  int oracle_exact;
  char evidence[256];
} mldr_certificate;

MLDR_API const char* mldr_verdict_name(mldr_verdict verdict);
/* options may be NULL for defaults; allow_oracle = 0 skips the search. */
MLDR_API mldr_status mldr_certify(const mldr_code* code,
                                  const mldr_search_options* options,
                                  int allow_oracle, mldr_certificate* out);

/* ---- reports -------------------------------------------------------------- */

typedef struct mldr_report mldr_report;

typedef enum mldr_format { MLDR_FORMAT_CSV = 0, MLDR_FORMAT_MARKDOWN = 1 } mldr_format;

#define MLDR_FIGURE_COUNT 10

/* Comparison table; failures counts cells that disagree with the
 * embedded reference. */
MLDR_API mldr_status mldr_report_table2(mldr_format format, mldr_report** out);
/* Figure 1..MLDR_FIGURE_COUNT; failures counts mismatched points. */
MLDR_API mldr_status mldr_report_figure(int id, mldr_format format,
                                        mldr_report** out);
/* Property suite "ring", "code", "bounds", "sweeps" or "all"; the text has
 * one PASS/FAIL line per check and failures counts FAIL lines. */
MLDR_API mldr_status mldr_report_check(const char* suite,
                                       const mldr_search_options* options,
                                       mldr_report** out);

/* Rendered output; valid until the report is destroyed. */
MLDR_API const char* mldr_report_text(const mldr_report* report);
/* Reference mismatches or failed checks, one per line. */
MLDR_API const char* mldr_report_diff(const mldr_report* report);
MLDR_API size_t mldr_report_failures(const mldr_report* report);
MLDR_API void mldr_report_destroy(mldr_report* report);

#ifdef __cplusplus
}
#endif

#endif /* MLDR_MLDR_H_ */
