#ifndef EISENSTEIN_DESCENT_H
#define EISENSTEIN_DESCENT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Residue-ring statements that can be checked exhaustively.
 */
typedef enum EdLemma {
  ED_LEMMA_CUBE_CLOSURE = 0,
  ED_LEMMA_NO_SOLUTION = 1,
} EdLemma;

/**
 * Result codes shared by every entry point.
 */
typedef enum EdStatus {
  ED_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  ED_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  ED_STATUS_INVALID_UTF8 = 2,
  /**
   * An element or coefficient list could not be parsed.
   */
  ED_STATUS_PARSE = 3,
  /**
   * A numeric argument is outside the supported range.
   */
  ED_STATUS_OUT_OF_RANGE = 4,
  /**
   * The requested object does not exist (e.g. no solution of `g = a`).
   */
  ED_STATUS_NOT_FOUND = 5,
  /**
   * Any other library error.
   */
  ED_STATUS_FAILED = 6,
  /**
   * The library panicked; this is a bug.
   */
  ED_STATUS_PANIC = 7,
} EdStatus;

/**
 * Outcome of classifying `t^3 = a`.
 */
typedef enum EdVerdict {
  ED_VERDICT_DESCENDS = 0,
  ED_VERDICT_DISCONNECTED = 1,
  ED_VERDICT_NO_DESCENT = 2,
  ED_VERDICT_UNDEFINED = 3,
} EdVerdict;

/**
 * Opaque element of `Q(w)`.
 */
typedef struct EdElement EdElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread; do not free it.
 */
const char *ed_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, not yet freed.
 */
void ed_string_free(char *s);

/**
 * Parses text such as `"1/2-5/3*w"` into a new element.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum EdStatus ed_element_parse(const char *text, struct EdElement **out);

/**
 * Builds `(a + b w) / d` from machine integers.
 *
 * # Safety
 * `out` must be writable.
 */
enum EdStatus ed_element_new(int64_t a, int64_t b, int64_t d, struct EdElement **out);

/**
 * Releases an element. Null is ignored.
 *
 * # Safety
 * `e` must be null or a handle from this library, not yet freed.
 */
void ed_element_free(struct EdElement *e);

/**
 * Canonical text of an element; free with [`ed_string_free`].
 *
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum EdStatus ed_element_to_string(const struct EdElement *e, char **out);

/**
 * Writes whether the element is a cube in `Q(w)`.
 *
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum EdStatus ed_element_is_cube(const struct EdElement *e, bool *out);

/**
 * Classifies `t^3 = a`; a null `e` stands for the point at infinity.
 *
 * # Safety
 * `e` must be null or a live handle; `out` must be writable.
 */
enum EdStatus ed_classify(const struct EdElement *e, enum EdVerdict *out);

/**
 * Rational `(x, y)` with `g(x, y) = a`, as new elements with zero `w`
 * part. Returns `ED_STATUS_NOT_FOUND` when `a` is not a value of `g`.
 *
 * # Safety
 * `e` must be a live handle; `out_x` and `out_y` must be writable.
 */
enum EdStatus ed_solve(const struct EdElement *e,
                       struct EdElement **out_x,
                       struct EdElement **out_y);

/**
 * Exhaustively checks `lemma` mod `3^k`. Writes the verdict to `holds`
 * and, if `report_json` is non-null, the JSON report (free with
 * [`ed_string_free`]).
 *
 * # Safety
 * `holds` must be writable; `report_json` must be null or writable.
 */
enum EdStatus ed_verify(enum EdLemma lemma, uint32_t k, bool *holds, char **report_json);

/**
 * Smallest `k <= max_k` at which the no-solution check holds, or 0.
 *
 * # Safety
 * `out` must be writable.
 */
enum EdStatus ed_minimal_modulus(uint32_t max_k, uint32_t *out);

/**
 * Searches `t^3 = f(z)` over rationals of height `<= height`. `coeffs` is
 * a comma-separated list, constant term first. Writes the number of
 * descending points to `descends` and, if `report_json` is non-null, the
 * JSON report.
 *
 * # Safety
 * `coeffs` must be a nul-terminated string; `descends` must be writable;
 * `report_json` must be null or writable.
 */
enum EdStatus ed_search(const char *coeffs,
                        uint64_t height,
                        uint64_t *descends,
                        char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EISENSTEIN_DESCENT_H */
