#pragma once

#include "gyroball/gyro.hpp"

namespace gyroball {

/// Inverse hyperbolic tangent with the argument clamped to [-(1 - 1e-15), 1 - 1e-15].
double artanh(double x) noexcept;

/// artanh |v|. Zero exactly at the origin.
double rapidity(const BallPoint& v);

/// Rapidity metric: artanh |(-u) (+) v|. Coincides with the Beltrami-Klein
/// (Cayley-Klein) hyperbolic distance.
double dist(const BallPoint& u, const BallPoint& v);

/// |(-u) (+) v|; tanh(dist(u, v)) == gyrometric(u, v).
double gyrometric(const BallPoint& u, const BallPoint& v);

// The two functions below compute the same distance along routes that share
// no code with Einstein addition. They are kept in the library as oracles for
// cross-validation.

/// arccosh((1 - <u,v>) / sqrt((1 - |u|^2)(1 - |v|^2))).
double dist_oracle_cosh(const BallPoint& u, const BallPoint& v);

/// Half the log cross-ratio of (a, u, v, b) where a, b are the ends of the
/// chord through u and v, a on the side of u.
double dist_oracle_crossratio(const BallPoint& u, const BallPoint& v);

}  // namespace gyroball
