#ifndef RHO_H
#define RHO_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum RhoStatus {
  RHO_STATUS_OK = 0,
  RHO_STATUS_INVALID_ARGUMENT = 1,
  RHO_STATUS_POLE = 2,
  RHO_STATUS_CAPACITY_EXCEEDED = 3,
  RHO_STATUS_CONVERGENCE = 4,
  RHO_STATUS_NULL_POINTER = 5,
  RHO_STATUS_UTF8 = 6,
  RHO_STATUS_PANIC = 7,
} RhoStatus;

/**
 * Opaque handle to a set of memo tables.
 */
typedef struct RhoContext RhoContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * New memo tables holding at most `cap` entries each; 0 means unbounded.
 * Returns null only if allocation panics.
 */
struct RhoContext *rho_context_new(uint64_t cap);

/**
 * Releases a context. Null is ignored.
 *
 * # Safety
 * `ctx` must come from [`rho_context_new`] and not be used afterwards.
 */
void rho_context_free(struct RhoContext *ctx);

/**
 * Releases a string returned through an `out` parameter. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void rho_string_free(char *s);

/**
 * Message of the last failed call on this thread, or an empty string.
 * Valid until the next call on the same thread.
 */
const char *rho_last_error(void);

/**
 * The Roman harmonic number c_n^(k).
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum RhoStatus rho_c(const struct RhoContext *ctx, int64_t n, int64_t k, char **out);

/**
 * The Stirling number of the first kind s(n, k) for any integer n.
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum RhoStatus rho_stirling_first(const struct RhoContext *ctx, int64_t n, int64_t k, char **out);

/**
 * The Stirling number of the second kind S(n, k).
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum RhoStatus rho_stirling_second(const struct RhoContext *ctx, int64_t n, int64_t k, char **out);

/**
 * The generalized Bernoulli number B_j^(m).
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum RhoStatus rho_bernoulli(const struct RhoContext *ctx, int64_t m, int64_t j, char **out);

/**
 * The generalized harmonic number H_n^(k).
 *
 * # Safety
 * `out` must be writable.
 */
enum RhoStatus rho_harmonic(int64_t n, int64_t k, char **out);

/**
 * The k-th derivative of (x)_n at the rational `at` ("p/q" or an integer).
 *
 * # Safety
 * `ctx` must be a live context, `at` NUL-terminated and `out` writable.
 */
enum RhoStatus rho_pochhammer_deriv(const struct RhoContext *ctx,
                                    int64_t n,
                                    int64_t k,
                                    const char *at,
                                    char **out);

/**
 * The k-th derivative of 1/(x)_n at the rational `at`; poles report
 * `RHO_STATUS_POLE`.
 *
 * # Safety
 * `at` must be NUL-terminated and `out` writable.
 */
enum RhoStatus rho_recip_deriv(int64_t n, int64_t k, const char *at, char **out);

/**
 * The p-th moment of 2(D-1) e^(-2t) (1-e^(-2t))^(D-2) by quadrature.
 *
 * # Safety
 * `value` and `est_error` must be writable.
 */
enum RhoStatus rho_coffey_moment(int64_t d,
                                 int64_t p,
                                 double tol,
                                 double *value,
                                 double *est_error);

/**
 * c_n^(k) from its integral representation by quadrature.
 *
 * # Safety
 * `value` and `est_error` must be writable.
 */
enum RhoStatus rho_quad_c(int64_t n, int64_t k, double tol, double *value, double *est_error);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RHO_H */
