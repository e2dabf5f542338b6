#include "gyroball/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gyroball/errors.hpp"

namespace gyroball {

namespace {

constexpr double kArtanhLimit = 1.0 - 1e-15;

void require_same_dim(const BallPoint& u, const BallPoint& v, const char* op) {
    if (u.dim() != v.dim())
        throw DimensionError(std::string(op) + ": dimensions " + std::to_string(u.dim()) + " and " +
                             std::to_string(v.dim()) + " differ");
}

// Roots of a t^2 + 2 b t + c = 0 with a > 0 and c < 0, so one is negative
// and one positive. Computed without cancellation.
struct ChordRoots {
    double negative;
    double positive;
};

ChordRoots chord_roots(double a, double b, double c) {
    const double disc = b * b - a * c;
    if (!(disc > 0.0) || !(a > 0.0))
        throw InternalError("cross-ratio oracle: chord does not cross the unit sphere");
    const double q = -(b + std::copysign(std::sqrt(disc), b));
    const double t1 = q / a;
    const double t2 = c / q;
    return {std::min(t1, t2), std::max(t1, t2)};
}

}  // namespace

double artanh(double x) noexcept {
    x = std::clamp(x, -kArtanhLimit, kArtanhLimit);
    return 0.5 * (std::log1p(x) - std::log1p(-x));
}

double rapidity(const BallPoint& v) { return artanh(v.vector().norm()); }

double dist(const BallPoint& u, const BallPoint& v) {
    require_same_dim(u, v, "dist");
    return artanh(sub(u, v).vector().norm());
}

double gyrometric(const BallPoint& u, const BallPoint& v) {
    require_same_dim(u, v, "gyrometric");
    return sub(u, v).vector().norm();
}

double dist_oracle_cosh(const BallPoint& u, const BallPoint& v) {
    require_same_dim(u, v, "dist_oracle_cosh");
    const Vector& a = u.vector();
    const Vector& b = v.vector();
    const double arg = (1.0 - a.dot(b)) / std::sqrt((1.0 - a.squaredNorm()) * (1.0 - b.squaredNorm()));
    return std::acosh(std::max(arg, 1.0));
}

double dist_oracle_crossratio(const BallPoint& u, const BallPoint& v) {
    require_same_dim(u, v, "dist_oracle_crossratio");
    const Vector& x = u.vector();
    const Vector& y = v.vector();
    const Vector d = y - x;
    const double dd = d.squaredNorm();
    if (dd == 0.0) return 0.0;

    // Chord x + t d meets the sphere at t_a < 0 (point a) and t_b > 1 (point b).
    // Roots are found from both endpoints so that |a - v| and |v - b| do not
    // come from subtracting nearly equal parameters.
    const ChordRoots from_u = chord_roots(dd, x.dot(d), x.squaredNorm() - 1.0);
    const ChordRoots from_v = chord_roots(dd, y.dot(d), y.squaredNorm() - 1.0);

    const Vector a = x + from_u.negative * d;
    const Vector b = y + from_v.positive * d;

    const double av = (a - y).norm();
    const double ub = (x - b).norm();
    const double au = (a - x).norm();
    const double vb = (y - b).norm();
    return 0.5 * std::log((av * ub) / (au * vb));
}

}  // namespace gyroball
