/*
 * C interface to the gyroball library: Einstein velocity addition on the
 * open unit ball, gyrations, the rapidity metric and the isometry group of
 * the ball.
 *
 * Conventions
 *   - Every function returns a gb_status. On failure a message is available
 *     from gb_last_error() until the next call on the same thread.
 *   - Vectors are passed as gb_vec {data, len}. Output buffers are sized by
 *     the caller: a point result needs len doubles, an n x n matrix needs n*n
 *     doubles in row-major order.
 *   - Isometries are opaque handles released with gb_isometry_destroy.
 */
#ifndef GYROBALL_H
#define GYROBALL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GYROBALL_BUILDING)
#    define GB_API __declspec(dllexport)
#  else
#    define GB_API __declspec(dllimport)
#  endif
#else
#  define GB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gb_status {
    GB_OK = 0,
    GB_ERR_INVALID_ARGUMENT = 1, /* null pointer, non-finite entry, bad parameter */
    GB_ERR_DOMAIN = 2,           /* point not strictly inside the unit ball */
    GB_ERR_DIMENSION = 3,        /* operand lengths or shapes disagree */
    GB_ERR_NOT_ORTHOGONAL = 4,   /* supplied rotation part fails orthonormality */
    GB_ERR_NOT_ISOMETRY = 5,     /* decomposition residual above tolerance */
    GB_ERR_UNKNOWN_SUITE = 6,    /* check suite name not recognised */
    GB_ERR_INTERNAL = 7          /* internal consistency check failed */
} gb_status;

typedef struct gb_vec {
    const double* data;
    size_t len;
} gb_vec;

typedef struct gb_isometry gb_isometry;

GB_API const char* gb_last_error(void);
GB_API const char* gb_status_name(gb_status status);

/* Gyrogroup */
GB_API gb_status gb_gamma(gb_vec v, double* out);
GB_API gb_status gb_add(gb_vec u, gb_vec v, double* out);
GB_API gb_status gb_sub(gb_vec u, gb_vec v, double* out);
GB_API gb_status gb_gyr(gb_vec u, gb_vec v, gb_vec w, double* out);
GB_API gb_status gb_gyr_matrix(gb_vec u, gb_vec v, double* out);

/* Metric */
GB_API gb_status gb_rapidity(gb_vec v, double* out);
GB_API gb_status gb_dist(gb_vec u, gb_vec v, double* out);
GB_API gb_status gb_gyrometric(gb_vec u, gb_vec v, double* out);
GB_API gb_status gb_dist_oracle_cosh(gb_vec u, gb_vec v, double* out);
GB_API gb_status gb_dist_oracle_crossratio(gb_vec u, gb_vec v, double* out);

/* Lorentz boosts. gb_boost writes (n+1)*(n+1) doubles. gb_thomas_rotation
 * writes n*n doubles and, when angle is non-null and n == 2, the planar
 * rotation angle; *has_angle (if non-null) tells whether it was set. */
GB_API gb_status gb_boost(gb_vec v, double* out);
GB_API gb_status gb_boost_compose_residual(gb_vec u, gb_vec v, double* out);
GB_API gb_status gb_thomas_rotation(gb_vec u, gb_vec v, double* out, double* angle, int* has_angle);

/* Isometries: w -> u (+) tau w. tau is row-major, rows x cols. tol bounds
 * max |tau^T tau - I|. */
GB_API gb_status gb_isometry_create(gb_vec u, const double* tau, size_t rows, size_t cols, double tol,
                                    gb_isometry** out);
GB_API gb_status gb_isometry_identity(size_t n, gb_isometry** out);
GB_API void gb_isometry_destroy(gb_isometry* f);
GB_API size_t gb_isometry_dim(const gb_isometry* f);
/* u_out needs n doubles, tau_out n*n (row-major). Either may be null. */
GB_API gb_status gb_isometry_get(const gb_isometry* f, double* u_out, double* tau_out);
GB_API gb_status gb_isometry_apply(const gb_isometry* f, gb_vec w, double* out);
GB_API gb_status gb_isometry_compose(const gb_isometry* f, const gb_isometry* g, gb_isometry** out);
GB_API gb_status gb_isometry_invert(const gb_isometry* f, gb_isometry** out);
GB_API gb_status gb_isometry_transport(gb_vec u, gb_vec v, gb_isometry** out);
GB_API gb_status gb_isometry_reflection(gb_vec v, gb_isometry** out);

/* Recover an isometry from count (input, output) pairs of dimension n,
 * stored back to back: inputs[k*n + i], outputs[k*n + i]. Needs
 * count >= n + 1. max_residual (if non-null) receives the fit residual, also
 * on GB_ERR_NOT_ISOMETRY. */
GB_API gb_status gb_isometry_decompose_probes(const double* inputs, const double* outputs, size_t count,
                                              size_t n, double tol, gb_isometry** out,
                                              double* max_residual);

/* Recover an isometry from a map known only by evaluation. The callback
 * writes map(in) into out (both n doubles) and returns 0 on success. */
typedef int (*gb_ball_map)(void* user, const double* in, double* out, size_t n);
GB_API gb_status gb_isometry_decompose_map(gb_ball_map map, void* user, size_t n, double tol,
                                           uint64_t seed, gb_isometry** out, double* max_residual);

/* Randomized identity checks. Suites: gyrogroup-axioms, theorem1, theorem2,
 * metric-axioms, oracles, isometry-group, eq5-eq6, boosts, all. */
typedef struct gb_check_report {
    char suite[32];
    uint64_t trials;
    uint64_t dimension;
    double max_residual;
    uint64_t violations;
    int passed;
    uint64_t seed;
} gb_check_report;

GB_API gb_status gb_check_run(const char* suite, size_t n, uint64_t trials, double rmax, uint64_t seed,
                              double tol, gb_check_report* out);

#ifdef __cplusplus
}
#endif

#endif /* GYROBALL_H */
