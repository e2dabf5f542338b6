#pragma once

#include <optional>

#include "gyroball/gyro.hpp"

namespace gyroball {

/// Lorentz boost acting on spacetime coordinates (t, x), c = 1.
struct BoostMatrix {
    Matrix m;     ///< (n+1) x (n+1), symmetric
    BallPoint v;  ///< generating velocity
};

/// Standard symmetric boost:
///   [ g      g v^T                   ]
///   [ g v    I + g^2/(1+g) v v^T     ]
BoostMatrix boost(const BallPoint& v);

/// diag(1, -1, ..., -1) of size n + 1.
Matrix minkowski_form(Eigen::Index n);

/// max |m^T eta m - eta|.
double minkowski_residual(const Matrix& m);

/// blockdiag(1, gyr[u,v]): the gyration acting on spacetime, time untouched.
Matrix spacetime_gyration(const BallPoint& u, const BallPoint& v, const Tolerance& tol = {});

/// max |L(u) L(v) - L(u (+) v) Gyr[u,v]|.
double boost_compose_residual(const BallPoint& u, const BallPoint& v, const Tolerance& tol = {});

/// max |L(u (+) v)^{-1} L(u) L(v) - Gyr[u,v]| with the inverse taken by an
/// LU solve, i.e. the rotation read back out of the boost product.
double gyration_block_residual(const BallPoint& u, const BallPoint& v, const Tolerance& tol = {});

struct ThomasRotation {
    OrthoMatrix rotation;
    /// atan2(R[1][0], R[0][0]); only set in the plane (n == 2).
    std::optional<double> angle;
};

/// Spatial rotation that makes L(u) L(v) = L(u (+) v) Gyr[u,v] hold.
ThomasRotation thomas_rotation(const BallPoint& u, const BallPoint& v, const Tolerance& tol = {});

}  // namespace gyroball
