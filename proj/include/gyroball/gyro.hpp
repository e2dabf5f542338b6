#pragma once

#include "gyroball/linalg.hpp"

namespace gyroball {

/// A point of the open unit ball B = {v : |v| < 1}, i.e. a relativistic
/// velocity in units where c = 1.
class BallPoint {
public:
    /// Throws DomainError if |v| >= 1, InvalidArgument/DimensionError for
    /// non-finite or empty input.
    explicit BallPoint(Vector v);

    static BallPoint zero(Eigen::Index n);

    const Vector& vector() const noexcept { return v_; }
    Eigen::Index dim() const noexcept { return v_.size(); }
    double operator[](Eigen::Index i) const { return v_(i); }

    /// True when this value came out of add() with a norm that rounded onto
    /// or past the boundary and was pulled back to 1 - kBoundaryMargin.
    bool rescaled() const noexcept { return rescaled_; }

private:
    friend BallPoint add(const BallPoint&, const BallPoint&);
    friend BallPoint neg(const BallPoint&);
    friend BallPoint gyr_apply(const BallPoint&, const BallPoint&, const BallPoint&);
    BallPoint(Vector v, bool rescaled) : v_(std::move(v)), rescaled_(rescaled) {}
    static BallPoint rounded(const Eigen::Matrix<long double, Eigen::Dynamic, 1>& wide, bool rescaled);

    Vector v_;
    bool rescaled_ = false;
};

inline constexpr double kBoundaryMargin = 1e-12;

/// Lorentz factor 1 / sqrt(1 - |v|^2).
double gamma(const BallPoint& v);
/// Same, for a raw vector; throws DomainError when |v| >= 1.
double gamma(const Vector& v);

/// Einstein velocity addition.
///
///   u (+) v = 1/(1 + <u,v>) * (u + v/g_u + g_u/(1 + g_u) <u,v> u)
///
/// Not commutative and not associative; see gyr_apply for the correction.
BallPoint add(const BallPoint& u, const BallPoint& v);
BallPoint neg(const BallPoint& v);
/// (-u) (+) v
BallPoint sub(const BallPoint& u, const BallPoint& v);

/// gyr[u,v]w = -(u (+) v) (+) (u (+) (v (+) w)).
BallPoint gyr_apply(const BallPoint& u, const BallPoint& v, const BallPoint& w);

/// The orthogonal matrix of gyr[u,v]. Column i is 2 gyr[u,v](e_i / 2).
/// Throws InternalError if the recovered matrix fails the orthogonality check
/// at tol.
OrthoMatrix gyr_matrix(const BallPoint& u, const BallPoint& v, const Tolerance& tol = {});

}  // namespace gyroball
