#include "gyroball/gyro.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "gyroball/errors.hpp"

namespace gyroball {

namespace {

void require_same_dim(const BallPoint& u, const BallPoint& v, const char* op) {
    if (u.dim() != v.dim())
        throw DimensionError(std::string(op) + ": dimensions " + std::to_string(u.dim()) + " and " +
                             std::to_string(v.dim()) + " differ");
}

// Additions are carried out in extended precision and rounded once. Near
// the boundary 1 - |x|^2 is tiny and the gyrator chain otherwise loses
// about log10(gamma^2) digits at every intermediate point.
using Wide = long double;
using WideVector = Eigen::Matrix<Wide, Eigen::Dynamic, 1>;

WideVector widen(const BallPoint& p) { return p.vector().cast<Wide>(); }

WideVector add_wide(const WideVector& a, const WideVector& b, bool& rescaled) {
    const Wide uv = a.dot(b);
    const Wide g = 1.0L / std::sqrt(1.0L - a.squaredNorm());
    WideVector sum = (a * (1.0L + g / (1.0L + g) * uv) + b / g) / (1.0L + uv);
    const Wide r = sum.norm();
    if (r >= 1.0L) {
        sum *= (1.0L - static_cast<Wide>(kBoundaryMargin)) / r;
        rescaled = true;
    }
    return sum;
}

}  // namespace

BallPoint::BallPoint(Vector v) : v_(std::move(v)) {
    require_finite(v_, "ball point");
    const double r = v_.norm();
    if (!(r < 1.0)) {
        std::ostringstream os;
        os << "point of norm " << r << " lies outside the open unit ball";
        throw DomainError(os.str());
    }
}

BallPoint BallPoint::zero(Eigen::Index n) {
    if (n < 1) throw DimensionError("zero: dimension must be >= 1");
    return BallPoint(Vector::Zero(n));
}

double gamma(const BallPoint& v) { return 1.0 / std::sqrt(1.0 - v.vector().squaredNorm()); }

double gamma(const Vector& v) { return gamma(BallPoint(v)); }

BallPoint BallPoint::rounded(const Eigen::Matrix<long double, Eigen::Dynamic, 1>& wide, bool rescaled) {
    Vector v = wide.cast<double>();
    const double r = v.norm();
    if (r >= 1.0) {
        v *= (1.0 - kBoundaryMargin) / r;
        rescaled = true;
    }
    return BallPoint(std::move(v), rescaled);
}

BallPoint add(const BallPoint& u, const BallPoint& v) {
    require_same_dim(u, v, "add");
    bool rescaled = false;
    const WideVector sum = add_wide(widen(u), widen(v), rescaled);
    return BallPoint::rounded(sum, rescaled);
}

BallPoint neg(const BallPoint& v) { return BallPoint(-v.vector(), false); }

BallPoint sub(const BallPoint& u, const BallPoint& v) { return add(neg(u), v); }

BallPoint gyr_apply(const BallPoint& u, const BallPoint& v, const BallPoint& w) {
    require_same_dim(u, v, "gyr");
    require_same_dim(u, w, "gyr");
    const WideVector a = widen(u);
    const WideVector b = widen(v);
    bool rescaled = false;
    const WideVector ab = add_wide(a, b, rescaled);
    const WideVector nested = add_wide(a, add_wide(b, widen(w), rescaled), rescaled);
    return BallPoint::rounded(add_wide(-ab, nested, rescaled), rescaled);
}

OrthoMatrix gyr_matrix(const BallPoint& u, const BallPoint& v, const Tolerance& tol) {
    require_same_dim(u, v, "gyr_matrix");
    const Eigen::Index n = u.dim();
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Vector probe = Vector::Zero(n);
        probe(i) = 0.5;
        m.col(i) = 2.0 * gyr_apply(u, v, BallPoint(std::move(probe))).vector();
    }
    try {
        return OrthoMatrix(std::move(m), tol);
    } catch (const NotOrthogonalError& e) {
        throw InternalError(std::string("gyr_matrix: ") + e.what());
    }
}

}  // namespace gyroball
