#ifndef RELCALC_H
#define RELCALC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which part of a relation to extract.
 */
typedef enum RcPart {
  RC_PART_DOMAIN = 0,
  RC_PART_RANGE = 1,
  RC_PART_KERNEL = 2,
  RC_PART_MULTIVALUED = 3,
} RcPart;

/**
 * Mirrors the command-line exit codes; negative values are ABI misuse.
 */
typedef enum RcStatus {
  RC_STATUS_OK = 0,
  RC_STATUS_PARSE_ERROR = 2,
  RC_STATUS_DIMENSION_ERROR = 3,
  RC_STATUS_PRECONDITION_FAILED = 4,
  RC_STATUS_INVARIANT_BREACH = 5,
  RC_STATUS_NULL_POINTER = -1,
  RC_STATUS_INVALID_UTF8 = -2,
  RC_STATUS_PANIC = -3,
} RcStatus;

/**
 * Opaque relation handle.
 */
typedef struct RcRelation RcRelation;

/**
 * Opaque subspace handle.
 */
typedef struct RcSubspace RcSubspace;

typedef struct RcClassification {
  bool operator_;
  bool sub;
  bool super_;
  bool idempotent;
  bool semi_projection;
  bool projection;
} RcClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The error record of the last failed call on this thread, or null. The
 * pointer stays valid until the next call on the same thread.
 */
const char *rc_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void rc_string_free(char *s);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum RcStatus rc_subspace_from_json(const char *json, struct RcSubspace **out);

/**
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_subspace_to_json(const struct RcSubspace *s, char **out);

/**
 * Dimension of the subspace, or `usize::MAX` for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
size_t rc_subspace_dim(const struct RcSubspace *s);

/**
 * # Safety
 * `s` must be null or a live handle.
 */
size_t rc_subspace_ambient(const struct RcSubspace *s);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum RcStatus rc_subspace_sum(const struct RcSubspace *a,
                              const struct RcSubspace *b,
                              struct RcSubspace **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum RcStatus rc_subspace_intersect(const struct RcSubspace *a,
                                    const struct RcSubspace *b,
                                    struct RcSubspace **out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_subspace_ortho_complement(const struct RcSubspace *a, struct RcSubspace **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `equal` must be writable.
 */
enum RcStatus rc_subspace_equal(const struct RcSubspace *a,
                                const struct RcSubspace *b,
                                bool *equal);

/**
 * # Safety
 * `s` must be null or a handle from this library, freed once.
 */
void rc_subspace_free(struct RcSubspace *s);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum RcStatus rc_relation_from_json(const char *json, struct RcRelation **out);

/**
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_relation_to_json(const struct RcRelation *r, char **out);

/**
 * # Safety
 * `r` must be null or a handle from this library, freed once.
 */
void rc_relation_free(struct RcRelation *r);

/**
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_relation_part(const struct RcRelation *r,
                               enum RcPart part,
                               struct RcSubspace **out);

/**
 * The product `ST` (first `t`, then `s`).
 *
 * # Safety
 * `s`, `t` must be live handles; `out` must be writable.
 */
enum RcStatus rc_relation_compose(const struct RcRelation *s,
                                  const struct RcRelation *t,
                                  struct RcRelation **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum RcStatus rc_relation_hat_sum(const struct RcRelation *a,
                                  const struct RcRelation *b,
                                  struct RcRelation **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum RcStatus rc_relation_meet(const struct RcRelation *a,
                               const struct RcRelation *b,
                               struct RcRelation **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum RcStatus rc_relation_plus(const struct RcRelation *a,
                               const struct RcRelation *b,
                               struct RcRelation **out);

/**
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_relation_adjoint(const struct RcRelation *r, struct RcRelation **out);

/**
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_relation_inverse(const struct RcRelation *r, struct RcRelation **out);

/**
 * `I − T`.
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_relation_one_minus(const struct RcRelation *r, struct RcRelation **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `equal` must be writable.
 */
enum RcStatus rc_relation_equal(const struct RcRelation *a,
                                const struct RcRelation *b,
                                bool *equal);

/**
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_relation_classify(const struct RcRelation *r, struct RcClassification *out);

/**
 * `P_{M,N}`.
 *
 * # Safety
 * `m`, `n` must be live handles; `out` must be writable.
 */
enum RcStatus rc_semi_projection(const struct RcSubspace *m,
                                 const struct RcSubspace *n,
                                 struct RcRelation **out);

/**
 * `P_{M,N,S}`; fails with `PreconditionFailed` when `(M+N)∩S ≠ M∩N`.
 *
 * # Safety
 * `m`, `n`, `s` must be live handles; `out` must be writable.
 */
enum RcStatus rc_build_pmns(const struct RcSubspace *m,
                            const struct RcSubspace *n,
                            const struct RcSubspace *s,
                            struct RcRelation **out);

/**
 * # Safety
 * `m`, `n`, `s` must be live handles; `out` must be writable.
 */
enum RcStatus rc_minimal_idempotent(const struct RcSubspace *m,
                                    const struct RcSubspace *n,
                                    const struct RcSubspace *s,
                                    struct RcRelation **out);

/**
 * # Safety
 * `x`, `y`, `z` must be live handles; `out` must be writable.
 */
enum RcStatus rc_maximal_idempotent(const struct RcSubspace *x,
                                    const struct RcSubspace *y,
                                    const struct RcSubspace *z,
                                    struct RcRelation **out);

/**
 * Dixmier and Friedrichs cosines.
 *
 * # Safety
 * `s`, `t` must be live handles; `dixmier`, `friedrichs` must be writable.
 */
enum RcStatus rc_angles(const struct RcSubspace *s,
                        const struct RcSubspace *t,
                        double tol,
                        double *dixmier,
                        double *friedrichs);

/**
 * Runs the default verification suite and writes the report document.
 * `passed` receives the overall verdict.
 *
 * # Safety
 * `out` and `passed` must be writable.
 */
enum RcStatus rc_verify(size_t dim, size_t trials, uint64_t seed, char **out, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RELCALC_H */
