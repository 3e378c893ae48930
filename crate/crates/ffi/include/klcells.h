#ifndef KLCELLS_H
#define KLCELLS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define KL_ABI_VERSION 1

typedef enum KlStatus {
  KL_STATUS_OK = 0,
  KL_STATUS_NULL_POINTER = 1,
  KL_STATUS_INVALID_UTF8 = 2,
  KL_STATUS_INVALID_PERMUTATION = 3,
  KL_STATUS_INVALID_TABLEAU = 4,
  KL_STATUS_OUT_OF_RANGE = 5,
  KL_STATUS_BUFFER_TOO_SMALL = 6,
  KL_STATUS_INTERNAL = 7,
} KlStatus;

typedef enum KlClassification {
  KL_CLASSIFICATION_ALL_SMOOTH = 0,
  KL_CLASSIFICATION_ALL_NONSMOOTH = 1,
  KL_CLASSIFICATION_MIXED = 2,
} KlClassification;

typedef struct KlPermutation KlPermutation;

typedef struct KlSurvey KlSurvey;

typedef struct KlTableau KlTableau;

// Counts for one cell. The tableau itself is reached through its handle.
typedef struct KlCellReport {
  uint64_t size;
  uint64_t smooth_count;
  uint64_t nonsmooth_count;
  enum KlClassification classification;
} KlCellReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

uint32_t kl_abi_version(void);

// Message for the last failed call on this thread, or NULL. Valid until the
// next failing call on the same thread.
const char *kl_last_error_message(void);

// Parses a comma-separated one-line permutation such as `"3,1,2"`.
//
// # Safety
// `text` must be NUL-terminated; `out` must be writable.
enum KlStatus kl_permutation_parse(const char *text, struct KlPermutation **out);

// # Safety
// `values` must point to `len` readable values; `out` must be writable.
enum KlStatus kl_permutation_from_values(const uint32_t *values,
                                         size_t len,
                                         struct KlPermutation **out);

// # Safety
// `p` must be NULL or a handle from this library that has not been freed.
void kl_permutation_free(struct KlPermutation *p);

// Length of the permutation, 0 for NULL.
//
// # Safety
// `p` must be NULL or a live handle.
size_t kl_permutation_len(const struct KlPermutation *p);

// Copies the one-line values into `buf`; `needed` receives the length.
//
// # Safety
// `p` must be a live handle; `buf` must hold `cap` values; `needed` may be NULL.
enum KlStatus kl_permutation_values(const struct KlPermutation *p,
                                    uint32_t *buf,
                                    size_t cap,
                                    size_t *needed);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum KlStatus kl_permutation_is_smooth(const struct KlPermutation *p, bool *out);

// Insertion tableau of `p`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum KlStatus kl_rs_insert(const struct KlPermutation *p, struct KlTableau **out);

// Parses rows joined by `|`, entries by `,`, e.g. `"1,3,5|2,4"`.
//
// # Safety
// `text` must be NUL-terminated; `out` must be writable.
enum KlStatus kl_tableau_parse(const char *text, struct KlTableau **out);

// # Safety
// `t` must be NULL or a handle from this library that has not been freed.
void kl_tableau_free(struct KlTableau *t);

// # Safety
// `t` must be a live handle; `buf` must hold `cap` bytes; `needed` may be NULL.
enum KlStatus kl_tableau_to_string(const struct KlTableau *t,
                                   char *buf,
                                   size_t cap,
                                   size_t *needed);

// Classifies the cell whose insertion tableau is `t`.
//
// # Safety
// `t` must be a live handle; `out` must be writable.
enum KlStatus kl_tableau_classify(const struct KlTableau *t, struct KlCellReport *out);

// Surveys every cell of S_n, 1 <= n <= 10, on `jobs` threads.
//
// # Safety
// `out` must be writable.
enum KlStatus kl_survey_run(size_t n, size_t jobs, struct KlSurvey **out);

// # Safety
// `s` must be NULL or a handle from this library that has not been freed.
void kl_survey_free(struct KlSurvey *s);

// Number of cells, 0 for NULL.
//
// # Safety
// `s` must be NULL or a live handle.
size_t kl_survey_cell_count(const struct KlSurvey *s);

// # Safety
// `s` must be a live handle; `out` must be writable.
enum KlStatus kl_survey_cell(const struct KlSurvey *s, size_t index, struct KlCellReport *out);

// A new handle for the insertion tableau of cell `index`.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum KlStatus kl_survey_cell_tableau(const struct KlSurvey *s,
                                     size_t index,
                                     struct KlTableau **out);

// # Safety
// `s` must be a live handle; `buf` must hold `cap` bytes; `needed` may be NULL.
enum KlStatus kl_survey_to_json(const struct KlSurvey *s, char *buf, size_t cap, size_t *needed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KLCELLS_H */
