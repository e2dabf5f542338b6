#include "gyroball/boost.hpp"

#include <cmath>

#include "gyroball/errors.hpp"

namespace gyroball {

namespace {

void require_same_dim(const BallPoint& u, const BallPoint& v, const char* op) {
    if (u.dim() != v.dim()) throw DimensionError(std::string(op) + ": point dimensions differ");
}

}  // namespace

BoostMatrix boost(const BallPoint& v) {
    const Eigen::Index n = v.dim();
    const Vector& x = v.vector();
    const double g = gamma(v);
    Matrix m(n + 1, n + 1);
    m(0, 0) = g;
    m.block(0, 1, 1, n) = g * x.transpose();
    m.block(1, 0, n, 1) = g * x;
    const double k = g * g / (1.0 + g);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j)
            m(1 + i, 1 + j) = m(1 + j, 1 + i) = (i == j ? 1.0 : 0.0) + k * (x[i] * x[j]);
    return {std::move(m), v};
}

Matrix minkowski_form(Eigen::Index n) {
    Matrix eta = -Matrix::Identity(n + 1, n + 1);
    eta(0, 0) = 1.0;
    return eta;
}

double minkowski_residual(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() < 2)
        throw DimensionError("minkowski_residual: need a square matrix of size >= 2");
    const Matrix eta = minkowski_form(m.rows() - 1);
    return max_abs_diff(Matrix(m.transpose() * eta * m), eta);
}

Matrix spacetime_gyration(const BallPoint& u, const BallPoint& v, const Tolerance& tol) {
    require_same_dim(u, v, "spacetime_gyration");
    const Eigen::Index n = u.dim();
    Matrix g = Matrix::Identity(n + 1, n + 1);
    g.block(1, 1, n, n) = gyr_matrix(u, v, tol).matrix();
    return g;
}

double boost_compose_residual(const BallPoint& u, const BallPoint& v, const Tolerance& tol) {
    require_same_dim(u, v, "boost_compose_residual");
    const Matrix lhs = boost(u).m * boost(v).m;
    const Matrix rhs = boost(add(u, v)).m * spacetime_gyration(u, v, tol);
    return max_abs_diff(lhs, rhs);
}

double gyration_block_residual(const BallPoint& u, const BallPoint& v, const Tolerance& tol) {
    require_same_dim(u, v, "gyration_block_residual");
    const Matrix product = boost(u).m * boost(v).m;
    const Matrix recovered = boost(add(u, v)).m.partialPivLu().solve(product);
    return max_abs_diff(recovered, spacetime_gyration(u, v, tol));
}

ThomasRotation thomas_rotation(const BallPoint& u, const BallPoint& v, const Tolerance& tol) {
    require_same_dim(u, v, "thomas_rotation");
    OrthoMatrix r = gyr_matrix(u, v, tol);
    std::optional<double> angle;
    if (r.dim() == 2) angle = std::atan2(r.matrix()(1, 0), r.matrix()(0, 0));
    return {std::move(r), angle};
}

}  // namespace gyroball
