#ifndef QKHILBERT_H
#define QKHILBERT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum QkStatus {
  QK_STATUS_OK = 0,
  QK_STATUS_NULL_POINTER = 1,
  QK_STATUS_INVALID_ARGUMENT = 2,
  QK_STATUS_INADMISSIBLE_ALGEBRA = 3,
  QK_STATUS_COMPUTATION_FAILED = 4,
  QK_STATUS_OUT_OF_RANGE = 5,
  QK_STATUS_PANIC = 6,
} QkStatus;

/**
 * Hilbert polynomial of one Wolf space.
 */
typedef struct QkHilbert QkHilbert;

/**
 * Prolongation tower of the twistor symbol.
 */
typedef struct QkTower QkTower;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *qk_last_error(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qk_string_free(char *s);

/**
 * Library version as a static string.
 */
const char *qk_version(void);

/**
 * Build the Hilbert report for a Cartan label such as `"E8"`.
 *
 * # Safety
 * `algebra` must be a NUL-terminated string; `out` must be writable.
 */
enum QkStatus qk_hilbert_new(const char *algebra, struct QkHilbert **out);

/**
 * # Safety
 * `h` must come from [`qk_hilbert_new`] and not have been freed; null is ignored.
 */
void qk_hilbert_free(struct QkHilbert *h);

/**
 * Quaternionic dimension `n`; the polynomial has degree `2n + 1`.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum QkStatus qk_hilbert_n(const struct QkHilbert *h, size_t *out);

/**
 * Coefficient of `r^i`.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum QkStatus qk_hilbert_coefficient(const struct QkHilbert *h, size_t i, char **out);

/**
 * `P(r)`.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum QkStatus qk_hilbert_value(const struct QkHilbert *h, int64_t r, char **out);

/**
 * Quaternionic volume.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum QkStatus qk_hilbert_volume(const struct QkHilbert *h, char **out);

/**
 * Whether every check of the default suite passed.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum QkStatus qk_hilbert_passed(const struct QkHilbert *h, bool *out);

/**
 * The same JSON document as `qkhilbert wolf --algebra <label> --r-max <r_max> --format json`.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum QkStatus qk_hilbert_report_json(const struct QkHilbert *h, int64_t r_max, char **out);

/**
 * Compute levels `0..=cap` of the tower for `(n, r)`; `cap = 0` means `2r`.
 *
 * # Safety
 * `out` must be writable.
 */
enum QkStatus qk_tower_new(size_t n, size_t r, size_t cap, struct QkTower **out);

/**
 * # Safety
 * `t` must come from [`qk_tower_new`] and not have been freed; null is ignored.
 */
void qk_tower_free(struct QkTower *t);

/**
 * Number of computed levels.
 *
 * # Safety
 * `t` must be a live handle and `out` writable.
 */
enum QkStatus qk_tower_level_count(const struct QkTower *t, size_t *out);

/**
 * Dimension of level `l`; zero past the end of a terminated tower.
 *
 * # Safety
 * `t` must be a live handle and `out` writable.
 */
enum QkStatus qk_tower_level_dim(const struct QkTower *t, size_t l, size_t *out);

/**
 * Writes whether the tower reached a zero level and, if so, the
 * termination degree and the total dimension. Both are left untouched otherwise.
 *
 * # Safety
 * `t` must be a live handle; all out pointers must be writable.
 */
enum QkStatus qk_tower_termination(const struct QkTower *t,
                                   bool *terminated,
                                   size_t *degree,
                                   size_t *total_dim);

/**
 * Run `qkhilbert verify` for `scope` (`"all"`, `"hilbert"` or `"prolong"`).
 * `passed` receives the verdict; `json_out`, if not null, the report.
 *
 * # Safety
 * `scope` must be a NUL-terminated string; `passed` must be writable.
 */
enum QkStatus qk_verify(const char *scope, int64_t r_max, bool *passed, char **json_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QKHILBERT_H */
