#ifndef QUATLIN_H
#define QUATLIN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. `PARSE`, `SINGULAR_FRAME` and `PRECONDITION` share their
 * values with the command-line exit codes.
 */
typedef enum QlStatus {
  QL_STATUS_OK = 0,
  QL_STATUS_INTERNAL = 1,
  QL_STATUS_PARSE = 2,
  QL_STATUS_SINGULAR_FRAME = 3,
  QL_STATUS_PRECONDITION = 4,
  QL_STATUS_NULL_POINTER = 5,
  QL_STATUS_OUT_OF_RANGE = 6,
} QlStatus;

typedef enum QlAutoKind {
  QL_AUTO_KIND_LINEAR = 0,
  QL_AUTO_KIND_ANTILINEAR = 1,
  QL_AUTO_KIND_NEITHER = 2,
} QlAutoKind;

/**
 * Opaque expansion: four quaternion coefficients against a frame.
 */
typedef struct QlExpansion QlExpansion;

/**
 * Opaque 4×4 exact operator.
 */
typedef struct QlOperator QlOperator;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *ql_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void ql_string_free(char *s);

/**
 * Parses an operator written in the frame-spec operator syntax: a catalog
 * name (`"A1"`), a composition (`"A1A1"`), a unit multiplication (`"*i"`),
 * or an inline matrix `"[1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1]"`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum QlStatus ql_operator_parse(const char *text, struct QlOperator **out);

/**
 * Builds an operator from 16 row-major rational strings.
 *
 * # Safety
 * `entries` must point to 16 valid NUL-terminated strings.
 */
enum QlStatus ql_operator_from_entries(const char *const *entries, struct QlOperator **out);

/**
 * Matrix of `x ↦ a·x` for the quaternion `"w,x,y,z"`.
 *
 * # Safety
 * `a` must be a valid NUL-terminated string; `out` must be writable.
 */
enum QlStatus ql_operator_left_mul(const char *a, struct QlOperator **out);

/**
 * Matrix of `x ↦ x·a`.
 *
 * # Safety
 * As for [`ql_operator_left_mul`].
 */
enum QlStatus ql_operator_right_mul(const char *a, struct QlOperator **out);

/**
 * Matrix of `x ↦ q x q⁻¹`; `QL_STATUS_PRECONDITION` for `q = 0`.
 *
 * # Safety
 * As for [`ql_operator_left_mul`].
 */
enum QlStatus ql_operator_conjugation_by(const char *q, struct QlOperator **out);

/**
 * `outer ∘ inner`.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum QlStatus ql_operator_compose(const struct QlOperator *outer,
                                  const struct QlOperator *inner,
                                  struct QlOperator **out);

/**
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum QlStatus ql_operator_add(const struct QlOperator *a,
                              const struct QlOperator *b,
                              struct QlOperator **out);

/**
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum QlStatus ql_operator_equal(const struct QlOperator *a, const struct QlOperator *b, bool *out);

/**
 * Entry `(row, col)` as a rational string; free it with [`ql_string_free`].
 *
 * # Safety
 * `op` must be live; `out` must be writable.
 */
enum QlStatus ql_operator_entry(const struct QlOperator *op, size_t row, size_t col, char **out);

/**
 * # Safety
 * `op` must be NULL or a live handle; it is invalid afterwards.
 */
void ql_operator_free(struct QlOperator *op);

/**
 * # Safety
 * `op` must be live; `out` must be writable.
 */
enum QlStatus ql_classify(const struct QlOperator *op, enum QlAutoKind *out);

/**
 * Writes whether the closed-form coordinate conditions hold; when they do
 * not, [`ql_last_error`] names the first violated condition.
 *
 * # Safety
 * `op` must be live; `out` must be writable.
 */
enum QlStatus ql_check_coordinate_conditions(const struct QlOperator *op, bool *out);

/**
 * Conjugator `"w,x,y,z"` (unnormalized); `QL_STATUS_PRECONDITION` if the
 * operator is not a linear automorphism.
 *
 * # Safety
 * `op` must be live; `out` must be writable.
 */
enum QlStatus ql_recover_conjugator(const struct QlOperator *op, char **out);

/**
 * Expands `op` against a builtin frame name or a 4-term frame spec.
 *
 * # Safety
 * `op` must be live; `frame` a valid string; `out` writable.
 */
enum QlStatus ql_expand(const struct QlOperator *op, const char *frame, struct QlExpansion **out);

/**
 * Coefficient `term` (0..4) as `"w,x,y,z"`.
 *
 * # Safety
 * `e` must be live; `out` must be writable.
 */
enum QlStatus ql_expansion_coefficient(const struct QlExpansion *e, size_t term, char **out);

/**
 * Rebuilds the operator from the expansion.
 *
 * # Safety
 * `e` must be live; `out` must be writable.
 */
enum QlStatus ql_expansion_reconstruct(const struct QlExpansion *e, struct QlOperator **out);

/**
 * # Safety
 * `e` must be NULL or a live handle; it is invalid afterwards.
 */
void ql_expansion_free(struct QlExpansion *e);

/**
 * Rank and nullity of the family described by `spec` (1 or more terms).
 *
 * # Safety
 * `spec` must be a valid string; `rank` and `nullity` must be writable.
 */
enum QlStatus ql_family_rank(const char *spec, size_t *rank, size_t *nullity);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUATLIN_H */
