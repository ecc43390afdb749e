#ifndef WIELANDT_H
#define WIELANDT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WlStatus {
  WL_STATUS_OK = 0,
  WL_STATUS_NULL_POINTER = 1,
  WL_STATUS_INVALID_UTF8 = 2,
  WL_STATUS_PARSE = 3,
  WL_STATUS_DEGREE_MISMATCH = 4,
  WL_STATUS_POINT_OUT_OF_RANGE = 5,
  WL_STATUS_CAP_EXCEEDED = 6,
  WL_STATUS_NOT_NILPOTENT = 7,
  WL_STATUS_HYPOTHESIS_NOT_MET = 8,
  WL_STATUS_INVALID_ARGUMENT = 9,
  WL_STATUS_OTHER = 10,
  WL_STATUS_PANIC = 11,
} WlStatus;

/**
 * Opaque permutation group.
 */
typedef struct WlGroup WlGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `"degree: (1 2 3), (1 2)"` into a new handle stored in `*out_group`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out_group` a valid pointer.
 */
enum WlStatus wl_group_parse(const char *spec, struct WlGroup **out_group);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void wl_group_free(struct WlGroup *g);

/**
 * # Safety
 * `g` must be a live handle and `out_order` a valid pointer.
 */
enum WlStatus wl_group_order(const struct WlGroup *g, uint64_t *out_order);

/**
 * # Safety
 * `g` must be a live handle and `out_degree` a valid pointer.
 */
enum WlStatus wl_group_degree(const struct WlGroup *g, size_t *out_degree);

/**
 * Writes the group in `"degree: gen, gen"` form. Free with [`wl_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out_text` a valid pointer.
 */
enum WlStatus wl_group_to_string(const struct WlGroup *g, char **out_text);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void wl_string_free(char *s);

/**
 * Computes the k-closure as a new handle.
 *
 * # Safety
 * `g` must be a live handle and `out_group` a valid pointer.
 */
enum WlStatus wl_k_closure(const struct WlGroup *g, size_t k, struct WlGroup **out_group);

/**
 * # Safety
 * `g` must be a live handle and `out_closed` a valid pointer.
 */
enum WlStatus wl_is_k_closed(const struct WlGroup *g, size_t k, bool *out_closed);

/**
 * # Safety
 * `g` must be a live handle and `out_base` a valid pointer.
 */
enum WlStatus wl_base_number(const struct WlGroup *g, size_t *out_base);

/**
 * Decides whether the abstract group of `g` is totally k-closed, using the
 * structural criteria only.
 *
 * # Safety
 * `g` must be a live handle and `out_closed` a valid pointer.
 */
enum WlStatus wl_classify(const struct WlGroup *g, size_t k, bool *out_closed);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *wl_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WIELANDT_H */
