#ifndef GRASSMORI_H
#define GRASSMORI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code shared by every entry point.
 */
typedef enum GmStatus {
  /**
   * The call succeeded and the out-parameters are populated.
   */
  GM_STATUS_OK = 0,
  /**
   * A pointer was null, a denominator zero, or an index out of range.
   */
  GM_STATUS_INVALID_ARGUMENT = 1,
  /**
   * The configuration is well-formed but outside the supported catalog.
   */
  GM_STATUS_UNSUPPORTED = 2,
  /**
   * Sampling could not decide the question for this configuration.
   */
  GM_STATUS_INCONCLUSIVE = 3,
  /**
   * An internal invariant failed; the out-parameters are untouched.
   */
  GM_STATUS_INTERNAL_ERROR = 4,
} GmStatus;

/**
 * Ambient family for the blow-up classification.
 */
typedef enum GmFamily {
  /**
   * Projective space of dimension `n`.
   */
  GM_FAMILY_PROJECTIVE = 0,
  /**
   * Smooth quadric hypersurface of dimension `n`.
   */
  GM_FAMILY_QUADRIC = 1,
  /**
   * Smooth cubic hypersurface of dimension `n`.
   */
  GM_FAMILY_CUBIC = 2,
  /**
   * Intersection of two quadrics of dimension `n`.
   */
  GM_FAMILY_Y22 = 3,
  /**
   * Codimension-`codim` linear section of the 6-dimensional variety of
   * lines in P4 (pass the codimension through the `codim` argument).
   */
  GM_FAMILY_G14_SECTION = 4,
  /**
   * Variety of projective `r`-planes in `Pn` (pass `r` and `n`).
   */
  GM_FAMILY_GRASSMANNIAN = 5,
} GmFamily;

/**
 * Positivity class of the blown-up variety.
 */
typedef enum GmFanoStatus {
  /**
   * The anticanonical class is ample.
   */
  GM_FANO_STATUS_FANO = 0,
  /**
   * The anticanonical class is nef and big but not ample.
   */
  GM_FANO_STATUS_WEAK_FANO_NOT_FANO = 1,
  /**
   * The anticanonical class is not nef (or not big).
   */
  GM_FANO_STATUS_NOT_WEAK_FANO = 2,
  /**
   * The configuration is outside the classified range.
   */
  GM_FANO_STATUS_OUT_OF_SCOPE = 3,
} GmFanoStatus;

/**
 * Which chamber of the divisor cone a class falls into.
 */
typedef enum GmChamberKind {
  /**
   * The class is not effective; no base locus is defined.
   */
  GM_CHAMBER_KIND_NOT_EFFECTIVE = 0,
  /**
   * Between the exceptional ray and the hyperplane ray: the stable base
   * locus is the exceptional divisor.
   */
  GM_CHAMBER_KIND_EXCEPTIONAL_CHAMBER = 1,
  /**
   * The nef chamber: the stable base locus is empty.
   */
  GM_CHAMBER_KIND_NEF_CHAMBER = 2,
  /**
   * Past the nef chamber: the stable base locus is the contact stratum
   * whose order is reported through `out_index`.
   */
  GM_CHAMBER_KIND_STRATUM_CHAMBER = 3,
} GmChamberKind;

/**
 * Opaque handle to an orbit-complexity report.
 */
typedef struct GmComplexity GmComplexity;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the underlying library, as a static NUL-terminated string.
 * The pointer stays valid for the lifetime of the process; do not free it.
 */
const char *gm_version(void);

/**
 * Classifies the blow-up of a catalogued variety at `k` general points.
 *
 * `n` is the dimension (ignored for `GM_FAMILY_G14_SECTION`, which takes
 * `codim` instead); `r` is only read for `GM_FAMILY_GRASSMANNIAN`.
 *
 * # Safety
 * `out` must be null or a valid pointer to a `GmFanoStatus`.
 */
enum GmStatus gm_classify(enum GmFamily family,
                          uintptr_t n,
                          uintptr_t r,
                          uintptr_t codim,
                          uintptr_t k,
                          enum GmFanoStatus *out);

/**
 * Runs the orbit-complexity engine for `k` general points on the variety
 * of `r`-planes in `Pn` and stores a handle to the report in `*out`.
 *
 * `samples` is the number of random trials per value (must be ≥ 1) and
 * `bound` the magnitude limit on sampled coordinates (must be ≥ 1).
 * On `GM_STATUS_OK` the handle must be released with
 * [`gm_complexity_free`].
 *
 * # Safety
 * `out` must be null or a valid pointer to a `*mut GmComplexity`.
 */
enum GmStatus gm_complexity_run(uintptr_t r,
                                uintptr_t n,
                                uintptr_t k,
                                uint64_t seed,
                                uint64_t samples,
                                int64_t bound,
                                struct GmComplexity **out);

/**
 * Complexity value recorded in the report.  Returns 0 on a null handle.
 *
 * # Safety
 * `handle` must be null or a pointer from [`gm_complexity_run`].
 */
uintptr_t gm_complexity_value(const struct GmComplexity *handle);

/**
 * True when the reported value is exact rather than a lower bound.
 * Returns false on a null handle.
 *
 * # Safety
 * `handle` must be null or a pointer from [`gm_complexity_run`].
 */
bool gm_complexity_is_exact(const struct GmComplexity *handle);

/**
 * Best sampled orbit dimension.  Returns 0 on a null handle.
 *
 * # Safety
 * `handle` must be null or a pointer from [`gm_complexity_run`].
 */
uintptr_t gm_complexity_orbit_dim(const struct GmComplexity *handle);

/**
 * Dimension of the stabilizer subalgebra of the sampled configuration.
 * Returns 0 on a null handle.
 *
 * # Safety
 * `handle` must be null or a pointer from [`gm_complexity_run`].
 */
uintptr_t gm_complexity_stabilizer_dim(const struct GmComplexity *handle);

/**
 * Serializes the report as the same JSON document the CLI prints.  The
 * string must be released with [`gm_string_free`].
 *
 * # Safety
 * `handle` must be null or a pointer from [`gm_complexity_run`]; `out`
 * must be null or a valid pointer to a `*mut c_char`.
 */
enum GmStatus gm_complexity_json(const struct GmComplexity *handle, char **out);

/**
 * Releases a report handle.  Null is a no-op.
 *
 * # Safety
 * `handle` must be null or a pointer from [`gm_complexity_run`] that has
 * not been freed yet.
 */
void gm_complexity_free(struct GmComplexity *handle);

/**
 * Decides whether the `k`-point configuration is spherical (complexity
 * zero).  Writes the answer to `*out` and returns `GM_STATUS_OK`, or
 * returns `GM_STATUS_INCONCLUSIVE` when sampling only produced an
 * undecisive lower bound.
 *
 * # Safety
 * `out` must be null or a valid pointer to a `bool`.
 */
enum GmStatus gm_spherical(uintptr_t r, uintptr_t n, uintptr_t k, uint64_t seed, bool *out);

/**
 * Locates the divisor class `(h_num/h_den)·H + (e_num/e_den)·E` in the
 * chamber decomposition of the one-point blow-up of the variety of
 * `r`-planes in `Pn`, and reports its stable base locus.
 *
 * On `GM_STATUS_OK`:
 * * `*out_kind` holds the chamber kind;
 * * `*out_index` holds the stratum order for `GM_CHAMBER_KIND_STRATUM_CHAMBER`
 *   and 0 otherwise;
 * * `*out_base_dim` holds the dimension of the stable base locus, or −1
 *   when it is empty or undefined.
 *
 * # Safety
 * The three out-parameters must each be null or valid pointers.
 */
enum GmStatus gm_sbld_locate(uintptr_t r,
                             uintptr_t n,
                             int64_t h_num,
                             int64_t h_den,
                             int64_t e_num,
                             int64_t e_den,
                             enum GmChamberKind *out_kind,
                             uintptr_t *out_index,
                             int64_t *out_base_dim);

/**
 * Releases a string returned by this library.  Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string pointer produced by this library that has
 * not been freed yet.
 */
void gm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRASSMORI_H */
