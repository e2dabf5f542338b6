#include "gyroball/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "gyroball/errors.hpp"

namespace gyroball {

namespace {

// tau(p) for a point already in the ball. An orthogonal map preserves the
// norm, so the only way out of the ball is rounding at |p| ~ 1 - 1e-16.
BallPoint rotate(const OrthoMatrix& tau, const BallPoint& p) {
    Vector q = tau.apply(p.vector());
    const double r = q.norm();
    if (r >= 1.0) q *= (1.0 - kBoundaryMargin) / r;
    return BallPoint(std::move(q));
}

std::string describe_residual(const char* what, double r) {
    std::ostringstream os;
    os << what << " (max residual " << r << ")";
    return os.str();
}

Vector lift(const BallPoint& p) {
    const Eigen::Index n = p.dim();
    Vector h(n + 1);
    const double g = gamma(p);
    h(0) = g;
    h.tail(n) = g * p.vector();
    return h;
}

}  // namespace

Isometry::Isometry(BallPoint u_, OrthoMatrix tau_) : u(std::move(u_)), tau(std::move(tau_)) {
    if (u.dim() != tau.dim())
        throw DimensionError("isometry: translation has dimension " + std::to_string(u.dim()) +
                             " but rotation is " + std::to_string(tau.dim()) + "x" +
                             std::to_string(tau.dim()));
}

Isometry identity(Eigen::Index n) { return {BallPoint::zero(n), OrthoMatrix::identity(n)}; }

Isometry translation(const BallPoint& u) { return {u, OrthoMatrix::identity(u.dim())}; }

Isometry rotation(const OrthoMatrix& tau) { return {BallPoint::zero(tau.dim()), tau}; }

BallPoint apply(const Isometry& f, const BallPoint& w) {
    if (w.dim() != f.dim())
        throw DimensionError("apply: isometry of dimension " + std::to_string(f.dim()) +
                             " applied to point of dimension " + std::to_string(w.dim()));
    return add(f.u, rotate(f.tau, w));
}

Isometry compose(const Isometry& f, const Isometry& g, const Tolerance& tol) {
    if (f.dim() != g.dim()) throw DimensionError("compose: isometry dimensions differ");
    const BallPoint moved = rotate(f.tau, g.u);
    return {add(f.u, moved), gyr_matrix(f.u, moved, tol).compose(f.tau).compose(g.tau)};
}

Isometry invert(const Isometry& f) {
    OrthoMatrix back = f.tau.transpose();
    BallPoint u = rotate(back, neg(f.u));
    return {std::move(u), std::move(back)};
}

Isometry transport(const BallPoint& u, const BallPoint& v, const Tolerance& tol) {
    if (u.dim() != v.dim()) throw DimensionError("transport: point dimensions differ");
    return compose(translation(v), translation(neg(u)), tol);
}

Isometry point_reflection(const BallPoint& v, const Tolerance& tol) {
    const Eigen::Index n = v.dim();
    const Isometry flip = rotation(OrthoMatrix(-Matrix::Identity(n, n)));
    return compose(translation(v), compose(flip, translation(neg(v)), tol), tol);
}

double canonical_distance(const Isometry& f, const Isometry& g) {
    if (f.dim() != g.dim()) throw DimensionError("canonical_distance: dimensions differ");
    return std::max(max_abs_diff(f.u.vector(), g.u.vector()),
                    max_abs_diff(f.tau.matrix(), g.tau.matrix()));
}

Decomposition decompose(const BallMap& psi, Eigen::Index n, const Tolerance& tol, std::uint64_t seed,
                        int validation_probes) {
    if (n < 1) throw InvalidArgument("decompose: dimension must be >= 1");
    const BallPoint origin = BallPoint::zero(n);
    const BallPoint u = psi(origin);
    if (u.dim() != n) throw DimensionError("decompose: map changes the dimension");

    Matrix cols(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Vector probe = Vector::Zero(n);
        probe(i) = 0.5;
        cols.col(i) = 2.0 * sub(u, psi(BallPoint(std::move(probe)))).vector();
    }

    const double ortho = orthogonality_residual(cols);
    if (ortho > tol.bound())
        throw NotIsometryError(describe_residual("decompose: recovered linear part is not orthogonal", ortho),
                               ortho);
    const Isometry f{u, OrthoMatrix(std::move(cols), tol)};

    double worst = ortho;
    Rng rng(seed);
    for (int k = 0; k < validation_probes; ++k) {
        const BallPoint w(random_ball_point(n, 0.9, rng));
        worst = std::max(worst, max_abs_diff(apply(f, w).vector(), psi(w).vector()));
    }
    if (worst > tol.bound())
        throw NotIsometryError(describe_residual("decompose: map is not an isometry", worst), worst);
    return {f, worst};
}

Decomposition decompose(std::span<const std::pair<BallPoint, BallPoint>> probes, const Tolerance& tol) {
    if (probes.empty()) throw InvalidArgument("decompose: no probe pairs");
    const Eigen::Index n = probes.front().first.dim();
    const auto count = static_cast<Eigen::Index>(probes.size());
    if (count < n + 1)
        throw InvalidArgument("decompose: need at least " + std::to_string(n + 1) + " probe pairs, got " +
                              std::to_string(count));
    for (const auto& [in, out] : probes)
        if (in.dim() != n || out.dim() != n) throw DimensionError("decompose: probe dimensions differ");

    // Lorentz lift: an isometry acts linearly on g_x (1, x).
    Matrix lifted_in(count, n + 1);
    Matrix lifted_out(count, n + 1);
    for (Eigen::Index k = 0; k < count; ++k) {
        lifted_in.row(k) = lift(probes[k].first).transpose();
        lifted_out.row(k) = lift(probes[k].second).transpose();
    }
    const Eigen::ColPivHouseholderQR<Matrix> lift_qr(lifted_in);
    if (lift_qr.rank() < n + 1) throw InvalidArgument("decompose: probe inputs are not in general position");
    const Matrix lorentz = lift_qr.solve(lifted_out).transpose();

    const double time_part = lorentz(0, 0);
    if (!(time_part > 0.0) || !std::isfinite(time_part))
        throw NotIsometryError("decompose: probes do not fit a time-preserving Lorentz map", INFINITY);
    const Vector u_raw = lorentz.col(0).tail(n) / time_part;
    if (!(u_raw.norm() < 1.0))
        throw NotIsometryError("decompose: probes imply a translation outside the ball", u_raw.norm());
    const BallPoint u(u_raw);

    Matrix inputs(count, n);
    Matrix untranslated(count, n);
    for (Eigen::Index k = 0; k < count; ++k) {
        inputs.row(k) = probes[k].first.vector().transpose();
        untranslated.row(k) = sub(u, probes[k].second).vector().transpose();
    }
    const Eigen::ColPivHouseholderQR<Matrix> tau_qr(inputs);
    if (tau_qr.rank() < n) throw InvalidArgument("decompose: probe inputs do not span the space");
    Matrix tau = tau_qr.solve(untranslated).transpose();

    const double ortho = orthogonality_residual(tau);
    if (ortho > tol.bound())
        throw NotIsometryError(describe_residual("decompose: fitted linear part is not orthogonal", ortho),
                               ortho);
    const Isometry f{u, OrthoMatrix(std::move(tau), tol)};

    double worst = ortho;
    for (const auto& [in, out] : probes)
        worst = std::max(worst, max_abs_diff(apply(f, in).vector(), out.vector()));
    if (worst > tol.bound())
        throw NotIsometryError(describe_residual("decompose: probes are not matched by an isometry", worst),
                               worst);
    return {f, worst};
}

}  // namespace gyroball
