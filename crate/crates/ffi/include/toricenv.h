#ifndef TORICENV_H
#define TORICENV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every fallible call.
 */
typedef enum TeStatus {
  TE_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TE_STATUS_NULL_POINTER = 1,
  /**
   * An argument was out of range or not valid UTF-8.
   */
  TE_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A name, JSON document or polynomial failed to parse.
   */
  TE_STATUS_PARSE_ERROR = 3,
  /**
   * Group enumeration exceeded its element cap.
   */
  TE_STATUS_CAP_EXCEEDED = 4,
  /**
   * The computation failed (e.g. a group not in SL2).
   */
  TE_STATUS_COMPUTATION_ERROR = 5,
  /**
   * An internal panic was caught at the boundary.
   */
  TE_STATUS_PANIC = 6,
} TeStatus;

/**
 * Monomial order for Gröbner computations.
 */
typedef enum TeOrder {
  TE_ORDER_GRLEX = 0,
  TE_ORDER_GREVLEX = 1,
} TeOrder;

/**
 * How the cone ideal is built.
 */
typedef enum TeStrategy {
  TE_STRATEGY_INTERPOLATION = 0,
  TE_STRATEGY_INTERSECTION = 1,
} TeStrategy;

/**
 * A finite matrix group.
 */
typedef struct TeGroup TeGroup;

/**
 * A polynomial ideal.
 */
typedef struct TeIdeal TeIdeal;

/**
 * The outcome of one Algorithm-1 run.
 */
typedef struct TeResult TeResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Catalog group by tag (e.g. `"binary-icosahedral"`, `"cyclic-5"`).
 *
 * # Safety
 * `tag` must be a NUL-terminated string; `out` must be writable.
 */
enum TeStatus te_group_named(const char *tag, struct TeGroup **out);

/**
 * Group generated by the matrices of a group-file JSON document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum TeStatus te_group_from_json(const char *json, struct TeGroup **out);

/**
 * Number of elements of `group`.
 *
 * # Safety
 * `group` must be a live handle; `out` must be writable.
 */
enum TeStatus te_group_order(const struct TeGroup *group, size_t *out);

/**
 * # Safety
 * `group` must be null or a handle from a `te_group_*` constructor that has
 * not been freed.
 */
void te_group_free(struct TeGroup *group);

/**
 * Minimal truncation degree for the scalar cone of `group` (a subgroup of
 * SL2).
 *
 * # Safety
 * `group` must be a live handle; `out` must be writable.
 */
enum TeStatus te_algorithm1(const struct TeGroup *group,
                            enum TeOrder order,
                            enum TeStrategy strategy,
                            struct TeResult **out);

/**
 * The degree `d` found by Algorithm 1.
 *
 * # Safety
 * `result` must be a live handle; `out` must be writable.
 */
enum TeStatus te_result_d(const struct TeResult *result, uint32_t *out);

/**
 * Number of lines of the cone, which is also its degree.
 *
 * # Safety
 * `result` must be a live handle; `out` must be writable.
 */
enum TeStatus te_result_num_lines(const struct TeResult *result, size_t *out);

/**
 * The full report as JSON; release with `te_string_free`.
 *
 * # Safety
 * `result` must be a live handle; `out` must be writable.
 */
enum TeStatus te_result_json(const struct TeResult *result, char **out);

/**
 * # Safety
 * `result` must be null or an unfreed handle from `te_algorithm1`.
 */
void te_result_free(struct TeResult *result);

/**
 * Ideal from an ideal-file JSON document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum TeStatus te_ideal_from_json(const char *json, struct TeIdeal **out);

/**
 * Dimension and degree of the variety of `ideal`.
 *
 * # Safety
 * `ideal` must be a live handle; `dimension` and `degree` must be writable.
 */
enum TeStatus te_ideal_profile(const struct TeIdeal *ideal, size_t *dimension, uint64_t *degree);

/**
 * # Safety
 * `ideal` must be null or an unfreed handle from `te_ideal_from_json`.
 */
void te_ideal_free(struct TeIdeal *ideal);

/**
 * Every closed-form bound at `n` as JSON; release with `te_string_free`.
 *
 * # Safety
 * `out` must be writable.
 */
enum TeStatus te_bounds_json(uint64_t n, char **out);

/**
 * Message of the last failed call on this thread (empty after a success).
 * The pointer stays valid until the next `te_*` call on this thread.
 */
const char *te_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void te_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORICENV_H */
