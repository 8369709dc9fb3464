#ifndef FILIPPOV_H
#define FILIPPOV_H

/* Generated by cbindgen from the filippov-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum FaStatus {
  FA_STATUS_OK = 0,
  FA_STATUS_NULL_ARGUMENT = 1,
  FA_STATUS_INVALID_UTF8 = 2,
  FA_STATUS_PARSE_ERROR = 3,
  FA_STATUS_INVALID_INPUT = 4,
  FA_STATUS_IDENTITY_VIOLATED = 5,
  FA_STATUS_NOT_SUBALGEBRA = 6,
  FA_STATUS_GRADING_VIOLATION = 7,
  FA_STATUS_INTERNAL = 8,
} FaStatus;

/**
 * Opaque n-Lie algebra handle.
 */
typedef struct FaAlgebra FaAlgebra;

/**
 * Opaque inner-derivation algebra handle.
 */
typedef struct FaInduced FaInduced;

/**
 * Opaque Lie algebra handle.
 */
typedef struct FaLie FaLie;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL after a
 * success. The pointer stays valid until the next call on the thread.
 */
const char *fa_last_error_message(void);

/**
 * Frees a string returned by this library.
 */
void fa_string_free(char *s);

/**
 * Parses an algebra from its canonical JSON document.
 */
enum FaStatus fa_algebra_from_json(const char *json, struct FaAlgebra **out);

/**
 * Serializes an algebra to canonical JSON.
 */
enum FaStatus fa_algebra_to_json(const struct FaAlgebra *alg, char **out);

void fa_algebra_free(struct FaAlgebra *alg);

/**
 * Builds the simple Euclidean n-Lie algebra of dimension n+1; n >= 2.
 */
enum FaStatus fa_simple(size_t n, struct FaAlgebra **out);

size_t fa_algebra_arity(const struct FaAlgebra *alg);

size_t fa_algebra_dim(const struct FaAlgebra *alg);

/**
 * Exhaustive Filippov-identity check; writes true into `holds` on success.
 */
enum FaStatus fa_verify_fi(const struct FaAlgebra *alg, bool *holds);

/**
 * Contraction with respect to the subalgebra spanned by the 1-based
 * coordinates in `i0`.
 */
enum FaStatus fa_contract(const struct FaAlgebra *alg,
                          const size_t *i0,
                          size_t i0_len,
                          struct FaAlgebra **out);

/**
 * Lie algebra of inner derivations; the input is FI-checked first.
 */
enum FaStatus fa_induce(const struct FaAlgebra *alg, struct FaInduced **out);

void fa_induced_free(struct FaInduced *il);

size_t fa_induced_lie_dim(const struct FaInduced *il);

size_t fa_induced_kernel_dim(const struct FaInduced *il);

/**
 * Serializes the full induced structure (lie, basis words, ad map, kernel).
 */
enum FaStatus fa_induced_to_json(const struct FaInduced *il, char **out);

/**
 * Clones the Lie-algebra part of an induced structure.
 */
enum FaStatus fa_induced_lie(const struct FaInduced *il, struct FaLie **out);

/**
 * Parses a Lie algebra from either the plain arity-2 document or a full
 * induced-algebra document.
 */
enum FaStatus fa_lie_from_json(const char *json, struct FaLie **out);

enum FaStatus fa_lie_to_json(const struct FaLie *lie, char **out);

void fa_lie_free(struct FaLie *lie);

size_t fa_lie_dim(const struct FaLie *lie);

/**
 * Exhaustive Jacobi-identity check.
 */
enum FaStatus fa_verify_ji(const struct FaLie *lie, bool *holds);

/**
 * İnönü-Wigner contraction with respect to the subalgebra spanned by the
 * 1-based coordinates.
 */
enum FaStatus fa_iw_contract(const struct FaLie *lie,
                             const size_t *subalgebra,
                             size_t len,
                             struct FaLie **out);

/**
 * Weimar-Woods contraction under the given weights, one per basis element.
 */
enum FaStatus fa_ww_contract(const struct FaLie *lie,
                             const uint32_t *weights,
                             size_t len,
                             struct FaLie **out);

/**
 * Isomorphism-invariant fingerprint (dim, series, center, Killing rank) as
 * a JSON document.
 */
enum FaStatus fa_lie_fingerprint_json(const struct FaLie *lie, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FILIPPOV_H */
