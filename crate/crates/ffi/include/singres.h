#ifndef SINGRES_H
#define SINGRES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status returned by every fallible entry point.
 */
typedef enum SrStatus {
  SR_STATUS_OK = 0,
  SR_STATUS_NULL_POINTER = 1,
  SR_STATUS_INVALID_INPUT = 2,
  /**
   * Well-formed input outside the supported range (e.g. determinant too large).
   */
  SR_STATUS_DEGENERATE = 3,
  /**
   * A panic was caught at the boundary.
   */
  SR_STATUS_INTERNAL = 4,
} SrStatus;

/**
 * Opaque handle to a validated support pair.
 */
typedef struct SrSupportPair SrSupportPair;

/**
 * The six support conditions plus the two verdict bits, as 0/1 bytes.
 */
typedef struct SrConditionFlags {
  uint8_t cond1;
  uint8_t cond2;
  uint8_t cond3;
  uint8_t cond4;
  uint8_t cond5;
  uint8_t cond6;
  /**
   * No condition among 1..=5 holds.
   */
  uint8_t generic_a1;
  /**
   * Condition 6 fails.
   */
  uint8_t codim2;
} SrConditionFlags;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a support pair from two exponent arrays (any order, distinct,
 * at least two each).
 *
 * # Safety
 * `b1`/`b2` must point to `n1`/`n2` readable values; `out` must be writable.
 */
enum SrStatus sr_support_pair_new(const int64_t *b1,
                                  size_t n1,
                                  const int64_t *b2,
                                  size_t n2,
                                  struct SrSupportPair **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `p` must come from `sr_support_pair_new` and not be freed twice.
 */
void sr_support_pair_free(struct SrSupportPair *p);

/**
 * Fills `out` with the condition flags of `p`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum SrStatus sr_check_conditions(const struct SrSupportPair *p, struct SrConditionFlags *out);

/**
 * Full classification report (conditions, witnesses, guarantee table) as JSON.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum SrStatus sr_classify_json(const struct SrSupportPair *p, char **out);

/**
 * Exact resultant as JSON; `SR_STATUS_DEGENERATE` when the Sylvester size
 * exceeds `det_bound`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum SrStatus sr_resultant_json(const struct SrSupportPair *p, size_t det_bound, char **out);

/**
 * `φ` of an exponent array (0 for a single element).
 *
 * # Safety
 * `b` must point to `n` readable values and `out` be writable.
 */
enum SrStatus sr_phi(const int64_t *b, size_t n, uint64_t *out);

/**
 * Minor-vanishing versus split-certificate scan over `n ≤ n_max`,
 * `B ⊆ [0, spread]` with `|B|` in `sizes`, as JSON.
 *
 * # Safety
 * `sizes` must point to `n_sizes` readable values and `out` be writable.
 */
enum SrStatus sr_scan_minors_json(uint32_t n_max,
                                  int64_t spread,
                                  const size_t *sizes,
                                  size_t n_sizes,
                                  char **out);

/**
 * Codimension estimate of the filtration subset named by `label`
 * (e.g. `"N(1,1,1)"`), as JSON.
 *
 * # Safety
 * `p` must be a live handle, `label` a nul-terminated string, `out` writable.
 */
enum SrStatus sr_estimate_codim_json(const struct SrSupportPair *p,
                                     const char *label,
                                     uint64_t seed,
                                     size_t trials,
                                     uint32_t n_max,
                                     char **out);

/**
 * Frees a string returned through an `out` parameter; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void sr_string_free(char *s);

/**
 * Message for the last failing call on this thread (empty after success).
 * Valid until the next call into the library on the same thread.
 */
const char *sr_last_error_message(void);

/**
 * Library version, static storage.
 */
const char *sr_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SINGRES_H */
