#ifndef LFORGE_H
#define LFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LfStability {
  LF_STABILITY_STABLE = 0,
  LF_STABILITY_NOT_STABLE = 1,
  LF_STABILITY_STABLE_BOUNDED = 2,
} LfStability;

typedef enum LfStatus {
  LF_STATUS_OK = 0,
  LF_STATUS_NULL_POINTER = 1,
  LF_STATUS_INVALID_UTF8 = 2,
  LF_STATUS_PARSE = 3,
  LF_STATUS_INVALID_ARGUMENT = 4,
  LF_STATUS_TRUNCATION = 5,
  LF_STATUS_INTEGRALITY = 6,
  LF_STATUS_RESOURCE = 7,
  LF_STATUS_DOMAIN = 8,
  LF_STATUS_PANIC = 9,
} LfStatus;

/**
 * A finite abelian group with a multiplicative family of endomorphisms.
 */
typedef struct LfF1Module LfF1Module;

/**
 * A polynomial in Z[x].
 */
typedef struct LfUPoly LfUPoly;

/**
 * A truncated big Witt vector over Z.
 */
typedef struct LfWittVector LfWittVector;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next call into the library on the same thread.
 */
const char *lf_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library.
 */
void lf_string_free(char *s);

/**
 * `P_n` as JSON: `{"polynomial", "variables", "terms"}`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LfStatus lf_universal_p_json(size_t n, char **out);

/**
 * `P_{n,m}` as JSON, same shape as [`lf_universal_p_json`].
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LfStatus lf_universal_pnm_json(size_t n, size_t m, char **out);

/**
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LfStatus lf_upoly_parse(const char *text, struct LfUPoly **out);

/**
 * # Safety
 * `p` must be a valid handle and `out` a valid pointer.
 */
enum LfStatus lf_upoly_to_string(const struct LfUPoly *p, char **out);

/**
 * Λ-stability of the ideal `(f)`. `witness_k` receives the first failing
 * `k` for `NotStable` and `k_max` for `StableBounded`, otherwise 0.
 *
 * # Safety
 * `p` must be a valid handle; `verdict` and `witness_k` valid pointers.
 */
enum LfStatus lf_upoly_lambda_stable(const struct LfUPoly *p,
                                     size_t k_max,
                                     enum LfStability *verdict,
                                     uint64_t *witness_k);

/**
 * # Safety
 * `p` must be NULL or a handle from this library.
 */
void lf_upoly_free(struct LfUPoly *p);

/**
 * # Safety
 * `comps` must point to `len` integers; `out` must be valid.
 */
enum LfStatus lf_witt_from_i64(const int64_t *comps, size_t len, struct LfWittVector **out);

/**
 * Witt sum; both vectors must have the same length.
 *
 * # Safety
 * `a`, `b` must be valid handles and `out` a valid pointer.
 */
enum LfStatus lf_witt_add(const struct LfWittVector *a,
                          const struct LfWittVector *b,
                          struct LfWittVector **out);

/**
 * Witt product; both vectors must have the same length.
 *
 * # Safety
 * `a`, `b` must be valid handles and `out` a valid pointer.
 */
enum LfStatus lf_witt_mul(const struct LfWittVector *a,
                          const struct LfWittVector *b,
                          struct LfWittVector **out);

/**
 * # Safety
 * `w` must be a valid handle.
 */
size_t lf_witt_len(const struct LfWittVector *w);

/**
 * Component `a_{index+1}` as a decimal string.
 *
 * # Safety
 * `w` must be a valid handle and `out` a valid pointer.
 */
enum LfStatus lf_witt_component(const struct LfWittVector *w, size_t index, char **out);

/**
 * Components and ghost coordinates as JSON: `{"components", "ghost"}`.
 *
 * # Safety
 * `w` must be a valid handle and `out` a valid pointer.
 */
enum LfStatus lf_witt_to_json(const struct LfWittVector *w, char **out);

/**
 * # Safety
 * `w` must be NULL or a handle from this library.
 */
void lf_witt_free(struct LfWittVector *w);

/**
 * `C_n` with `λ_k` multiplication by `scalars[k-1]`, `k ≤ len`.
 *
 * # Safety
 * `scalars` must point to `len` integers; `out` must be valid.
 */
enum LfStatus lf_f1module_cyclic(uint64_t n,
                                 const int64_t *scalars,
                                 size_t len,
                                 struct LfF1Module **out);

/**
 * `C_p` with `λ_q` given at the primes `q ≤ bound` and extended
 * multiplicatively.
 *
 * # Safety
 * `values` must point to `len` integers; `out` must be valid.
 */
enum LfStatus lf_f1module_from_prime_values(uint64_t p,
                                            size_t bound,
                                            const uint64_t *values,
                                            size_t len,
                                            struct LfF1Module **out);

/**
 * Number of morphisms from the module to the affine line.
 *
 * # Safety
 * `m` must be a valid handle and `out` a valid pointer.
 */
enum LfStatus lf_f1module_hom_count(const struct LfF1Module *m, uint64_t *out);

/**
 * # Safety
 * `m` must be NULL or a handle from this library.
 */
void lf_f1module_free(struct LfF1Module *m);

/**
 * Truncated Euler product. `spec` is `primes`, `monoid-cat`, `f1-modules`
 * or `custom:2,3,...`; `s` must exceed 1. `value` and `tail_bound` receive
 * decimal strings.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; the out pointers must be valid.
 */
enum LfStatus lf_zeta_euler(const char *spec,
                            double s,
                            uint64_t bound,
                            uint32_t bits,
                            char **value,
                            char **tail_bound);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LFORGE_H */
