/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef ICR_H
#define ICR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IcrEssentialTag {
  ICR_ESSENTIAL_TAG_ZERO = 0,
  ICR_ESSENTIAL_TAG_LEFT_ZERO = 1,
  ICR_ESSENTIAL_TAG_RIGHT_ZERO = 2,
  ICR_ESSENTIAL_TAG_ADDITIVE_COPY = 3,
  ICR_ESSENTIAL_TAG_INESSENTIAL = 4,
} IcrEssentialTag;

typedef enum IcrFilter {
  ICR_FILTER_ALL = 0,
  ICR_FILTER_ASSOCIATIVE = 1,
  ICR_FILTER_COMMUTATIVE = 2,
  ICR_FILTER_BAND = 3,
  ICR_FILTER_ESSENTIAL = 4,
} IcrFilter;

// Result of every call.
typedef enum IcrStatus {
  ICR_STATUS_OK = 0,
  ICR_STATUS_NULL_POINTER = 1,
  ICR_STATUS_INVALID_INPUT = 2,
  ICR_STATUS_CAP_EXCEEDED = 3,
  ICR_STATUS_VERIFICATION_FAILED = 4,
  ICR_STATUS_BUFFER_TOO_SMALL = 5,
  ICR_STATUS_PANIC = 6,
} IcrStatus;

// A finite group.
typedef struct IcrGroup IcrGroup;

// An interchange near ring.
typedef struct IcrRing IcrRing;

// Properties of a ring's product.
typedef struct IcrProps {
  bool associative;
  bool commutative;
  bool idempotent;
  bool zero_semigroup;
  bool proper;
  enum IcrEssentialTag essential_tag;
} IcrProps;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the calling thread's last error message into `buf` and returns
// its size including the NUL. Pass a null `buf` to query the size. The
// message is empty after a successful call.
//
// # Safety
// `buf` must be null or valid for `len` bytes.
size_t icr_last_error(char *buf, size_t len);

// The library version as a static NUL-terminated string.
const char *icr_version(void);

// Builds a group from a spec such as `Z4+Z2`, `V`, `S3`, `D4`, `Q8` or
// `table:path`. A `cap` of 0 selects the default size cap.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be writable.
enum IcrStatus icr_group_parse(const char *spec, size_t cap, struct IcrGroup **out);

// # Safety
// `g` must be null or a handle from [`icr_group_parse`] not yet freed.
void icr_group_free(struct IcrGroup *g);

// # Safety
// `g` must be a live group handle; `out` must be writable.
enum IcrStatus icr_group_order(const struct IcrGroup *g, size_t *out);

// # Safety
// `g` must be a live group handle; `out` must be writable.
enum IcrStatus icr_group_is_abelian(const struct IcrGroup *g, bool *out);

// Number of endomorphisms and of automorphisms. Either output may be null.
//
// # Safety
// `g` must be a live group handle; non-null outputs must be writable.
enum IcrStatus icr_group_endomorphism_counts(const struct IcrGroup *g,
                                             uint64_t *endomorphisms,
                                             uint64_t *automorphisms);

// Number of isomorphism classes of rings on `g` passing `filter`.
//
// # Safety
// `g` must be a live group handle; `out` must be writable.
enum IcrStatus icr_classify(const struct IcrGroup *g, enum IcrFilter filter, uint64_t *out);

// Builds the ring of a pair written as `(0abc),(0def)`.
//
// # Safety
// `g` must be a live group handle, `pair` a NUL-terminated string and
// `out` writable.
enum IcrStatus icr_ring_from_pair(const struct IcrGroup *g, const char *pair, struct IcrRing **out);

// Builds a ring from a row-major product table of `len = n * n` entries,
// rejecting tables that break the interchange law.
//
// # Safety
// `g` must be a live group handle, `table` valid for `len` reads and `out`
// writable.
enum IcrStatus icr_ring_from_product(const struct IcrGroup *g,
                                     const uint32_t *table,
                                     size_t len,
                                     struct IcrRing **out);

// # Safety
// `r` must be null or a live ring handle.
void icr_ring_free(struct IcrRing *r);

// # Safety
// `r` must be a live ring handle; `out` must be writable.
enum IcrStatus icr_ring_order(const struct IcrRing *r, size_t *out);

// `x . y`.
//
// # Safety
// `r` must be a live ring handle; `out` must be writable.
enum IcrStatus icr_ring_mul(const struct IcrRing *r, uint32_t x, uint32_t y, uint32_t *out);

// Copies the row-major product table into `buf`, which must hold `n * n`
// entries.
//
// # Safety
// `r` must be a live ring handle and `buf` valid for `len` writes.
enum IcrStatus icr_ring_product_table(const struct IcrRing *r, uint32_t *buf, size_t len);

// Product properties, each computed from the pair and from the table.
//
// # Safety
// `r` must be a live ring handle; `out` must be writable.
enum IcrStatus icr_ring_props(const struct IcrRing *r, struct IcrProps *out);

// Writes the generating pair as `(0abc),(0def)`. `needed`, if non-null,
// receives the size including the NUL even when `buf` is too small.
//
// # Safety
// `r` must be a live ring handle, `buf` null or valid for `len` bytes, and
// `needed` null or writable.
enum IcrStatus icr_ring_pair(const struct IcrRing *r, char *buf, size_t len, size_t *needed);

// `(r+1)(r+2)(r+3)/6`, the number of associative classes on `r` copies of
// `Z_{p^n}`. Saturates at `UINT64_MAX`.
uint64_t icr_count_formula(uint32_t r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ICR_H */
