#ifndef HOPFSEQ_H
#define HOPFSEQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum HsStatus {
  HS_STATUS_OK = 0,
  HS_STATUS_NULL_POINTER = 1,
  HS_STATUS_INVALID_UTF8 = 2,
  HS_STATUS_PARSE = 3,
  HS_STATUS_VERIFICATION = 4,
  HS_STATUS_CAP_EXCEEDED = 5,
  HS_STATUS_INTERNAL = 6,
} HsStatus;

/**
 * Verdict of a simplicity certificate.
 */
typedef enum HsVerdict {
  HS_VERDICT_SIMPLE = 0,
  HS_VERDICT_NOT_SIMPLE = 1,
  HS_VERDICT_INCONCLUSIVE = 2,
} HsVerdict;

/**
 * Opaque finite permutation group.
 */
typedef struct HsGroup HsGroup;

/**
 * Opaque finite-dimensional Hopf algebra.
 */
typedef struct HsHopf HsHopf;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until
 * the next call into this library on the same thread.
 */
const char *hs_last_error(void);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hs_string_free(char *s);

/**
 * Builds a group from a name ("A6", "S3", "Z2xS3") or a group file path.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum HsStatus hs_group_new(const char *spec, struct HsGroup **out);

/**
 * Order of the group, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
uintptr_t hs_group_order(const struct HsGroup *g);

/**
 * Writes the group in the text format to `*out`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum HsStatus hs_group_dump(const struct HsGroup *g, char **out);

/**
 * # Safety
 * `g` must be NULL or a handle not yet freed.
 */
void hs_group_free(struct HsGroup *g);

/**
 * Builds a Hopf algebra from a target ("kG:S3", "k^G:A4", "D:S3",
 * "split:E:Γ:G" or a file path).
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum HsStatus hs_hopf_new(const char *spec, struct HsHopf **out);

/**
 * Parses a Hopf algebra from its text dump.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum HsStatus hs_hopf_load(const char *text, struct HsHopf **out);

/**
 * Dimension of the algebra, or 0 for NULL.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
uintptr_t hs_hopf_dim(const struct HsHopf *h);

/**
 * Writes the text dump of `h` to `*out`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HsStatus hs_hopf_dump(const struct HsHopf *h, char **out);

/**
 * Checks the Hopf axioms; `samples == 0` means exhaustively. Writes the
 * number of violations to `*violations`.
 *
 * # Safety
 * `h` must be a live handle; `violations` must be writable.
 */
enum HsStatus hs_hopf_verify(const struct HsHopf *h,
                             uintptr_t samples,
                             uint64_t seed,
                             uintptr_t *violations);

/**
 * Verifies the canonical sequence k^Γ → H → kG of a bicrossed product
 * and its dual. `*exact` is set to 1 when both are exact, else 0.
 *
 * # Safety
 * `h` must be a live handle; `exact` must be writable.
 */
enum HsStatus hs_hopf_sequence_exact(const struct HsHopf *h, int32_t *exact);

/**
 * # Safety
 * `h` must be NULL or a handle not yet freed.
 */
void hs_hopf_free(struct HsHopf *h);

/**
 * Runs a simplicity certificate ("a6-simple", "ty:5", "cpq:3:5",
 * "vecA6", ...). The verdict goes to `*verdict`; if `trace` is not NULL
 * the key=value trace is written there.
 *
 * # Safety
 * `target` must be a NUL-terminated string; `verdict` must be writable;
 * `trace` may be NULL.
 */
enum HsStatus hs_certify(const char *target, enum HsVerdict *verdict, char **trace);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFSEQ_H */
