/*
Copyright 2026 The submodk Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef SUBMODK_SUBMODK_H
#define SUBMODK_SUBMODK_H

/*
 * C interface to the submodk library.
 *
 * Every fallible call returns a submodk_status. On failure a message for the
 * calling thread is available from submodk_last_error() until the next call
 * on that thread. Strings returned through char** out-parameters are owned by
 * the caller and must be released with submodk_string_free(). Rationals cross
 * the boundary as "p/q" strings.
 *
 * Subsets are bit masks (bit i = element i). Partitions are returned as
 * restricted growth strings: rgs[i] is the block index of element i, blocks
 * numbered in order of their smallest element.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SUBMODK_BUILDING_LIBRARY)
#define SUBMODK_API __declspec(dllexport)
#else
#define SUBMODK_API __declspec(dllimport)
#endif
#else
#define SUBMODK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum submodk_status {
  SUBMODK_OK = 0,
  SUBMODK_INVALID_ARGUMENT = 1,
  SUBMODK_INVALID_PARTITION = 2,
  SUBMODK_CAP_EXCEEDED = 3,
  SUBMODK_PARSE_ERROR = 4,
  SUBMODK_PRECONDITION = 5,
  SUBMODK_VERIFICATION = 6,
  SUBMODK_INTERNAL = 7
} submodk_status;

/* A loaded set function with its evaluation memo. Safe to evaluate from
 * several threads at once. */
typedef struct submodk_oracle submodk_oracle;
/* A computed principal sequence of partitions. */
typedef struct submodk_sequence submodk_sequence;

SUBMODK_API const char* submodk_version(void);
SUBMODK_API const char* submodk_last_error(void);
SUBMODK_API const char* submodk_status_name(submodk_status status);
SUBMODK_API void submodk_string_free(char* s);

/* ---- instances ---------------------------------------------------------- */

/* validate != 0 rejects non-submodular functions (checked when n <= 12). */
SUBMODK_API submodk_status submodk_oracle_from_json(const char* json, int validate, submodk_oracle** out);
/* The instance id defaults to the file stem when the document has none. */
SUBMODK_API submodk_status submodk_oracle_from_file(const char* path, int validate, submodk_oracle** out);
/* Explicit table of 2^n values num[m]/den[m], indexed by mask m. */
SUBMODK_API submodk_status submodk_oracle_from_table(int n, const int64_t* num, const int64_t* den, int validate,
                                                     submodk_oracle** out);
/* Seeded random instance; family is graph_cut, hypergraph_cut,
 * graph_coverage, partition_matroid or graphic_matroid. */
SUBMODK_API submodk_status submodk_oracle_random(const char* family, int n, uint64_t seed, uint64_t index,
                                                 submodk_oracle** out);
SUBMODK_API void submodk_oracle_free(submodk_oracle* oracle);

SUBMODK_API int submodk_oracle_size(const submodk_oracle* oracle);
SUBMODK_API const char* submodk_oracle_id(const submodk_oracle* oracle);
SUBMODK_API submodk_status submodk_oracle_set_id(submodk_oracle* oracle, const char* id);
SUBMODK_API const char* submodk_oracle_family(const submodk_oracle* oracle);
/* Label of element i, or NULL when out of range. */
SUBMODK_API const char* submodk_oracle_label(const submodk_oracle* oracle, int i);
SUBMODK_API submodk_status submodk_oracle_eval(const submodk_oracle* oracle, uint32_t mask, char** value);
SUBMODK_API submodk_status submodk_oracle_stats(const submodk_oracle* oracle, uint64_t* distinct_evaluations,
                                                uint64_t* total_calls);
/* Instance document (format_version 1), pretty printed. */
SUBMODK_API submodk_status submodk_oracle_to_json(const submodk_oracle* oracle, char** json);

/* ---- properties --------------------------------------------------------- */

typedef enum submodk_property {
  SUBMODK_SUBMODULAR = 0,
  SUBMODK_MONOTONE = 1,
  SUBMODK_SYMMETRIC = 2,
  SUBMODK_POSIMODULAR = 3
} submodk_property;

/* *holds receives 1 or 0; on 0 the witness pair is written to *witness_a and
 * *witness_b when they are non-NULL. Requires n <= 12. */
SUBMODK_API submodk_status submodk_check_property(const submodk_oracle* oracle, submodk_property property, int* holds,
                                                  uint32_t* witness_a, uint32_t* witness_b);

/* ---- principal sequence ------------------------------------------------- */

SUBMODK_API submodk_status submodk_pps_compute(const submodk_oracle* oracle, submodk_sequence** out);
SUBMODK_API void submodk_sequence_free(submodk_sequence* sequence);
SUBMODK_API int submodk_sequence_length(const submodk_sequence* sequence);
/* rgs must hold n ints. */
SUBMODK_API submodk_status submodk_sequence_partition(const submodk_sequence* sequence, int index, int* rgs);
/* Breakpoint between partitions index and index + 1. */
SUBMODK_API submodk_status submodk_sequence_breakpoint(const submodk_sequence* sequence, int index, char** value);
/* *all_pass receives 1 when every condition holds. */
SUBMODK_API submodk_status submodk_sequence_verify(const submodk_oracle* oracle, const submodk_sequence* sequence,
                                                   int* all_pass);

/* ---- k-partition -------------------------------------------------------- */

/* algorithm is "pps", "greedy" or "singleton". rgs must hold n ints. */
SUBMODK_API submodk_status submodk_kpartition(const submodk_oracle* oracle, int k, const char* algorithm, int* rgs,
                                              char** value);
/* Exact optimum by exhaustive search (n bounded by the brute-force cap). */
SUBMODK_API submodk_status submodk_optimal_kpartition(const submodk_oracle* oracle, int k, int* rgs, char** value);
/* Guarantee for "monotone", "symmetric", "posimodular"; *value is set to NULL
 * for "general". */
SUBMODK_API submodk_status submodk_class_bound(const char* function_class, int n, char** value);

/* ---- reports ------------------------------------------------------------ */

/* Human-readable text, or JSON when json != 0. */
SUBMODK_API submodk_status submodk_report_pps(const submodk_oracle* oracle, int json, char** text, int* all_pass);
SUBMODK_API submodk_status submodk_report_properties(const submodk_oracle* oracle, int json, char** text);

typedef struct submodk_solve_options {
  int k;
  /* Comma separated subset of "pps,greedy,singleton"; NULL means all three. */
  const char* algorithms;
  int brute_force;
  /* "monotone", "symmetric", "posimodular", "general", or NULL / "auto" to
   * detect with the property checkers. */
  const char* function_class;
  int timing;
  int json;
} submodk_solve_options;

/* CSV (or JSON) rows for every instance, in input order. *violations receives
 * the number of rows whose bound check failed. */
SUBMODK_API submodk_status submodk_report_solve(const submodk_oracle* const* oracles, size_t count,
                                                const submodk_solve_options* options, char** text, int* violations);

typedef struct submodk_reproduce_options {
  const char* which; /* NULL means "all" */
  int n;             /* 0 keeps the case default */
  int k;             /* 0 keeps the case default */
  const char* epsilon;
  const char* arc_weight;
  int json;
} submodk_reproduce_options;

SUBMODK_API submodk_status submodk_report_reproduce(const submodk_reproduce_options* options, char** text,
                                                    int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* SUBMODK_SUBMODK_H */
