/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef JFRAC_H
#define JFRAC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum JfracStatus {
  JFRAC_STATUS_OK = 0,
  JFRAC_STATUS_NULL_POINTER = 1,
  JFRAC_STATUS_INVALID_UTF8 = 2,
  JFRAC_STATUS_PARSE = 3,
  JFRAC_STATUS_INVALID_PARAMS = 4,
  JFRAC_STATUS_NON_REGULAR = 5,
  JFRAC_STATUS_NON_CONVERGENT = 6,
  JFRAC_STATUS_DOMAIN = 7,
  JFRAC_STATUS_UNKNOWN_THEOREM = 8,
  JFRAC_STATUS_INSUFFICIENT = 9,
  JFRAC_STATUS_OUT_OF_RANGE = 10,
  /**
   * Any other library error, or a caught panic.
   */
  JFRAC_STATUS_INTERNAL = 99,
} JfracStatus;

/**
 * A J-fraction `(b_0, b_1, ...; λ_1, λ_2, ...)`.
 */
typedef struct JfracJFraction JfracJFraction;

/**
 * Reports from a verification run, sorted by id.
 */
typedef struct JfracSuite JfracSuite;

/**
 * A Stieltjes tableau `H_{i,n}`, `0 ≤ i ≤ n ≤ N`.
 */
typedef struct JfracTableau JfracTableau;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *jfrac_last_error(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void jfrac_string_free(char *s);

/**
 * J-fraction from explicit `b_0..b_{nb-1}` and `λ_1..λ_{nl}` given as
 * rational strings (`"3"`, `"-1/2"`, `"0.25"`).
 *
 * # Safety
 * The arrays must hold `nb` / `nl` valid C strings.
 */
enum JfracStatus jfrac_jfraction_new(const char *const *b,
                                     size_t nb,
                                     const char *const *lambda,
                                     size_t nl,
                                     struct JfracJFraction **out);

/**
 * J-fraction of a catalog family with enough coefficients for order `n`.
 * `params` is `"key=value,key=value"` (may be NULL or empty for defaults).
 *
 * # Safety
 * `family` must be a valid C string; `params` NULL or a valid C string.
 */
enum JfracStatus jfrac_jfraction_from_family(const char *family,
                                             const char *params,
                                             size_t n,
                                             struct JfracJFraction **out);

/**
 * The coefficients determined by moments `μ_0..μ_{len-1}` (`μ_0 = 1`).
 *
 * # Safety
 * `moments` must hold `len` valid C strings.
 */
enum JfracStatus jfrac_jfraction_from_moments(const char *const *moments,
                                              size_t len,
                                              struct JfracJFraction **out);

/**
 * # Safety
 * `jf` must be NULL or a live handle from this library.
 */
void jfrac_jfraction_free(struct JfracJFraction *jf);

/**
 * Number of `b` and `λ` coefficients held.
 *
 * # Safety
 * `jf` must be a live handle.
 */
enum JfracStatus jfrac_jfraction_len(const struct JfracJFraction *jf, size_t *nb, size_t *nl);

/**
 * `b_n` as a `"p/q"` string.
 *
 * # Safety
 * `jf` must be a live handle.
 */
enum JfracStatus jfrac_jfraction_b(const struct JfracJFraction *jf, size_t n, char **out);

/**
 * `λ_n` (`n ≥ 1`) as a `"p/q"` string.
 *
 * # Safety
 * `jf` must be a live handle.
 */
enum JfracStatus jfrac_jfraction_lambda(const struct JfracJFraction *jf, size_t n, char **out);

/**
 * Weighted Motzkin path sum from level `from` to `to` in `steps` steps.
 *
 * # Safety
 * `jf` must be a live handle.
 */
enum JfracStatus jfrac_path_weight_sum(const struct JfracJFraction *jf,
                                       size_t from,
                                       size_t to,
                                       size_t steps,
                                       char **out);

/**
 * Tableau of order `n` (needs `b_0..b_{n-1}`, `λ_1..λ_{n-1}`).
 *
 * # Safety
 * `jf` must be a live handle.
 */
enum JfracStatus jfrac_tableau_new(const struct JfracJFraction *jf,
                                   size_t n,
                                   struct JfracTableau **out);

/**
 * # Safety
 * `t` must be NULL or a live handle from this library.
 */
void jfrac_tableau_free(struct JfracTableau *t);

/**
 * Order `N` of the tableau.
 *
 * # Safety
 * `t` must be a live handle.
 */
enum JfracStatus jfrac_tableau_degree(const struct JfracTableau *t, size_t *out);

/**
 * `H_{i,n}` as a `"p/q"` string; zero for `i > n`.
 *
 * # Safety
 * `t` must be a live handle.
 */
enum JfracStatus jfrac_tableau_get(const struct JfracTableau *t, size_t i, size_t n, char **out);

/**
 * Hankel determinant `D_n = det(μ_{i+j})_{0 ≤ i,j ≤ n}`.
 *
 * # Safety
 * `moments` must hold `len` valid C strings.
 */
enum JfracStatus jfrac_hankel_d(const char *const *moments, size_t len, size_t n, char **out);

/**
 * Run every registered theorem and identity whose id matches the glob
 * `pattern` (NULL for all) at its defaults.
 *
 * # Safety
 * `pattern` must be NULL or a valid C string.
 */
enum JfracStatus jfrac_verify(const char *pattern,
                              uint32_t precision_bits,
                              struct JfracSuite **out);

/**
 * # Safety
 * `s` must be NULL or a live handle from this library.
 */
void jfrac_suite_free(struct JfracSuite *s);

/**
 * Number of reports, and how many passed.
 *
 * # Safety
 * `s` must be a live handle.
 */
enum JfracStatus jfrac_suite_counts(const struct JfracSuite *s, size_t *total, size_t *passed);

/**
 * Id and verdict of report `idx`.
 *
 * # Safety
 * `s` must be a live handle.
 */
enum JfracStatus jfrac_suite_report(const struct JfracSuite *s, size_t idx, char **id, bool *pass);

/**
 * Report `idx` as a JSON object (same schema as the CLI).
 *
 * # Safety
 * `s` must be a live handle.
 */
enum JfracStatus jfrac_suite_report_json(const struct JfracSuite *s, size_t idx, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JFRAC_H */
