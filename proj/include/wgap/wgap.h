/*
 * wgap: Weierstrass gap sequences / numerical semigroups by genus.
 *
 * Plain C interface over the C++ core. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every fallible
 * call returns a wgap_status; on failure wgap_last_error() describes the
 * problem for the calling thread.
 */
#ifndef WGAP_H
#define WGAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(WGAP_BUILDING_LIBRARY)
#define WGAP_API __attribute__((visibility("default")))
#else
#define WGAP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wgap_status {
  WGAP_OK = 0,
  WGAP_INVALID_SEQUENCE = 1, /* candidate gaps rejected; see wgap_validation_error */
  WGAP_INVALID_ARGUMENT = 2, /* precondition violated */
  WGAP_RESOURCE_LIMIT = 3,   /* e.g. brute force above its genus limit */
  WGAP_INVALID_LADDER = 4,
  WGAP_IO_ERROR = 5,
  WGAP_PARSE_ERROR = 6,
  WGAP_INTERNAL_ERROR = 7
} wgap_status;

typedef enum wgap_validation_kind {
  WGAP_WRONG_LENGTH = 0,
  WGAP_MISSING_ONE = 1,
  WGAP_GAP_OUT_OF_RANGE = 2,
  WGAP_NOT_SORTED = 3,
  WGAP_CLOSURE_VIOLATION = 4
} wgap_validation_kind;

typedef struct wgap_validation_error {
  wgap_validation_kind kind;
  int has_witness; /* nonzero only for WGAP_CLOSURE_VIOLATION */
  int64_t gap;
  int64_t summand_a;
  int64_t summand_b;
} wgap_validation_error;

typedef enum wgap_classification {
  WGAP_RATIONAL = 0,
  WGAP_ORDINARY = 1,
  WGAP_HYPERELLIPTIC = 2,
  WGAP_EXCEPTIONAL = 3,
  WGAP_GENERIC_WEIERSTRASS = 4
} wgap_classification;

typedef struct wgap_weight_report {
  int64_t weight;
  int is_weierstrass;
  wgap_classification classification;
  int has_first_non_gap; /* zero for genus 0 */
  int64_t first_non_gap;
  int exceptional_shape; /* genus-2 {1,3} is also of exceptional shape */
} wgap_weight_report;

typedef struct wgap_point_count_bounds {
  int64_t genus;
  int64_t lower;
  int64_t upper;
  int64_t total_weight;
} wgap_point_count_bounds;

typedef struct wgap_sequence wgap_sequence;
typedef struct wgap_ladder wgap_ladder;
typedef struct wgap_count_table wgap_count_table;

/* Message for the last failed call on this thread; never NULL. */
WGAP_API const char* wgap_last_error(void);
WGAP_API const char* wgap_status_name(wgap_status status);
WGAP_API const char* wgap_validation_kind_name(wgap_validation_kind kind);
WGAP_API const char* wgap_classification_name(wgap_classification c);

/* ---- gap sequences ---------------------------------------------------- */

/* On WGAP_OK *out receives a new sequence. On WGAP_INVALID_SEQUENCE *error
 * (if non-NULL) describes the first failed check. */
WGAP_API wgap_status wgap_validate(int64_t genus, const int64_t* gaps, size_t count,
                                   wgap_sequence** out, wgap_validation_error* error);
WGAP_API wgap_sequence* wgap_sequence_clone(const wgap_sequence* seq);
WGAP_API void wgap_sequence_free(wgap_sequence* seq);
WGAP_API int64_t wgap_sequence_genus(const wgap_sequence* seq);
/* Copies up to `capacity` values; returns the total number available. */
WGAP_API size_t wgap_sequence_gaps(const wgap_sequence* seq, int64_t* buffer,
                                   size_t capacity);
WGAP_API size_t wgap_sequence_non_gaps(const wgap_sequence* seq, int64_t* buffer,
                                       size_t capacity);
/* Closure test on an arbitrary ascending non-gap list inside [2, 2g]. */
WGAP_API wgap_status wgap_non_gaps_closed(int64_t genus, const int64_t* non_gaps,
                                          size_t count, int* closed);
WGAP_API wgap_status wgap_first_non_gap(const wgap_sequence* seq, int64_t* out);

/* ---- analysis --------------------------------------------------------- */

WGAP_API int64_t wgap_weight(const wgap_sequence* seq);
WGAP_API wgap_status wgap_classify(const wgap_sequence* seq, wgap_weight_report* out);
WGAP_API wgap_status wgap_hyperelliptic_sequence(int64_t genus, wgap_sequence** out);
WGAP_API wgap_status wgap_exceptional_sequence(int64_t genus, wgap_sequence** out);
WGAP_API wgap_status wgap_point_count_bounds_for(int64_t genus,
                                                 wgap_point_count_bounds* out);
WGAP_API wgap_status wgap_implied_hyperelliptic_point_count(int64_t genus, int64_t* out);
WGAP_API wgap_status wgap_jenkins_forced_gap(int64_t h, int64_t k, int64_t genus,
                                             int* forced);

/* ---- dimension ladders ------------------------------------------------ */

WGAP_API wgap_status wgap_ladder_from_gaps(const wgap_sequence* seq, wgap_ladder** out);
/* Builds a ladder from raw rows of equal length (laws are not checked). */
WGAP_API wgap_status wgap_ladder_create(int64_t genus, const int64_t* h0,
                                        const int64_t* speciality, size_t length,
                                        wgap_ladder** out);
WGAP_API void wgap_ladder_free(wgap_ladder* ladder);
WGAP_API int64_t wgap_ladder_genus(const wgap_ladder* ladder);
WGAP_API size_t wgap_ladder_h0(const wgap_ladder* ladder, int64_t* buffer, size_t capacity);
WGAP_API size_t wgap_ladder_speciality(const wgap_ladder* ladder, int64_t* buffer,
                                       size_t capacity);
WGAP_API wgap_status wgap_gaps_from_ladder(const wgap_ladder* ladder, wgap_sequence** out);

/* first_offending_index is -1 when the law passed. */
typedef void (*wgap_law_callback)(void* user, const char* law, int passed,
                                  int64_t first_offending_index);
WGAP_API wgap_status wgap_verify_ladder_laws(const wgap_ladder* ladder,
                                             wgap_law_callback callback, void* user,
                                             int* all_passed);

/* ---- enumeration ------------------------------------------------------ */

/* The sequence is only valid during the call; clone it to keep it. With
 * workers > 1 calls come from worker threads but never overlap. */
typedef void (*wgap_sequence_callback)(void* user, const wgap_sequence* seq);

WGAP_API wgap_status wgap_tree_enumerate(int64_t genus, unsigned workers,
                                         wgap_sequence_callback callback, void* user,
                                         uint64_t* count);
WGAP_API wgap_status wgap_tree_count(int64_t genus, unsigned workers, uint64_t* count);
WGAP_API wgap_status wgap_brute_force_enumerate(int64_t genus, int64_t limit,
                                                wgap_sequence_callback callback,
                                                void* user, uint64_t* count);
/* filter is "firstNonGap=H", "weight=W" or "classification=LABEL". */
WGAP_API wgap_status wgap_filter_enumerate(int64_t genus, const char* filter,
                                           unsigned workers,
                                           wgap_sequence_callback callback, void* user,
                                           uint64_t* count);
/* Writes counts for genus 0..max_genus; `counts` must hold max_genus + 1. */
WGAP_API wgap_status wgap_count_by_genus(int64_t max_genus, unsigned workers,
                                         uint64_t* counts);

/* ---- count cache (CSV "genus,count") ---------------------------------- */

WGAP_API wgap_count_table* wgap_count_table_new(void);
WGAP_API void wgap_count_table_free(wgap_count_table* table);
WGAP_API wgap_status wgap_count_table_add(wgap_count_table* table, int64_t genus,
                                          uint64_t count);
WGAP_API size_t wgap_count_table_size(const wgap_count_table* table);
WGAP_API wgap_status wgap_count_table_row(const wgap_count_table* table, size_t index,
                                          int64_t* genus, uint64_t* count);
/* Returns nonzero and sets *count when the table has a row for genus. */
WGAP_API int wgap_count_table_lookup(const wgap_count_table* table, int64_t genus,
                                     uint64_t* count);
WGAP_API wgap_status wgap_count_table_save(const wgap_count_table* table, const char* path);
WGAP_API wgap_status wgap_count_table_load(const char* path, wgap_count_table** out);

/* ---- selftest --------------------------------------------------------- */

typedef void (*wgap_check_callback)(void* user, const char* name, int passed,
                                    const char* detail);
WGAP_API wgap_status wgap_selftest(int64_t max_genus, int64_t brute_force_limit,
                                   unsigned workers, wgap_check_callback callback,
                                   void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* WGAP_H */
