#include "gyroball/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "gyroball/errors.hpp"

namespace gyroball {

namespace {

std::string shape(const Matrix& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols();
    return os.str();
}

constexpr int kMaxOrthogonalRetries = 16;

}  // namespace

void Tolerance::validate() const {
    if (!(rel >= 0.0) || !(abs >= 0.0) || (rel == 0.0 && abs == 0.0))
        throw InvalidArgument("tolerance must have rel >= 0, abs >= 0, not both zero");
}

bool Tolerance::close(double x, double y) const noexcept {
    return std::abs(x - y) <= abs + rel * std::max(std::abs(x), std::abs(y));
}

double inner(const Vector& u, const Vector& v) {
    if (u.size() != v.size())
        throw DimensionError("inner: lengths " + std::to_string(u.size()) + " and " +
                             std::to_string(v.size()) + " differ");
    return u.dot(v);
}

double norm(const Vector& v) noexcept { return v.norm(); }

Vector mat_apply(const Matrix& m, const Vector& v) {
    if (m.cols() != v.size())
        throw DimensionError("mat_apply: " + shape(m) + " matrix times length " +
                             std::to_string(v.size()) + " vector");
    return m * v;
}

Matrix mat_compose(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("mat_compose: " + shape(a) + " times " + shape(b));
    return a * b;
}

Matrix transpose(const Matrix& m) { return m.transpose(); }

double determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square " + shape(m));
    return m.determinant();
}

double orthogonality_residual(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw DimensionError("orthogonality check needs a non-empty square matrix, got " + shape(m));
    const Matrix defect = m.transpose() * m - Matrix::Identity(m.rows(), m.cols());
    return defect.cwiseAbs().maxCoeff();
}

bool is_orthogonal(const Matrix& m, const Tolerance& tol) {
    return orthogonality_residual(m) <= tol.bound();
}

double max_abs_diff(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("max_abs_diff: vector lengths differ");
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("max_abs_diff: " + shape(a) + " vs " + shape(b));
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

void require_finite(const Vector& v, const char* what) {
    if (v.size() == 0) throw DimensionError(std::string(what) + ": empty vector");
    if (!v.allFinite()) throw InvalidArgument(std::string(what) + ": non-finite entry");
}

void require_finite(const Matrix& m, const char* what) {
    if (m.size() == 0) throw DimensionError(std::string(what) + ": empty matrix");
    if (!m.allFinite()) throw InvalidArgument(std::string(what) + ": non-finite entry");
}

OrthoMatrix::OrthoMatrix(Matrix m, const Tolerance& tol) : m_(std::move(m)) {
    require_finite(m_, "orthogonal matrix");
    const double r = orthogonality_residual(m_);
    if (r > tol.bound()) {
        std::ostringstream os;
        os << "matrix is not orthogonal (max |M^T M - I| = " << r << ")";
        throw NotOrthogonalError(os.str(), r);
    }
}

OrthoMatrix OrthoMatrix::identity(Eigen::Index n) {
    if (n < 1) throw DimensionError("identity: dimension must be >= 1");
    return OrthoMatrix(Matrix::Identity(n, n), Unchecked{});
}

OrthoMatrix OrthoMatrix::compose(const OrthoMatrix& other) const {
    return OrthoMatrix(mat_compose(m_, other.m_), Unchecked{});
}

OrthoMatrix OrthoMatrix::transpose() const { return OrthoMatrix(m_.transpose(), Unchecked{}); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
    auto splitmix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return splitmix(splitmix(splitmix(seed) ^ stream) ^ index);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

OrthoMatrix random_orthogonal(Eigen::Index n, Rng& rng) {
    if (n < 1) throw InvalidArgument("random_orthogonal: n must be >= 1");
    for (int attempt = 0; attempt < kMaxOrthogonalRetries; ++attempt) {
        Matrix g(n, n);
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index i = 0; i < n; ++i) g(i, j) = rng.normal();

        Eigen::HouseholderQR<Matrix> qr(g);
        const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        if (r.diagonal().cwiseAbs().minCoeff() < 1e-10 * std::max(1.0, r.diagonal().cwiseAbs().maxCoeff()))
            continue;
        Matrix q = qr.householderQ();
        for (Eigen::Index j = 0; j < n; ++j)
            if (r(j, j) < 0.0) q.col(j) *= -1.0;
        return OrthoMatrix(std::move(q));
    }
    throw InternalError("random_orthogonal: repeated degenerate Gaussian samples");
}

OrthoMatrix random_orthogonal(Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    return random_orthogonal(n, rng);
}

Vector random_ball_point(Eigen::Index n, double rmax, Rng& rng) {
    if (n < 1) throw InvalidArgument("random_ball_point: n must be >= 1");
    if (!(rmax >= 0.0 && rmax < 1.0)) throw InvalidArgument("random_ball_point: rmax must lie in [0, 1)");
    Vector dir(n);
    double len = 0.0;
    do {
        for (Eigen::Index i = 0; i < n; ++i) dir(i) = rng.normal();
        len = dir.norm();
    } while (len == 0.0);
    Vector p = dir * (rmax * rng.uniform() / len);
    while (p.norm() > rmax) p *= 1.0 - 1e-15;
    return p;
}

Vector random_ball_point(Eigen::Index n, double rmax, std::uint64_t seed) {
    Rng rng(seed);
    return random_ball_point(n, rmax, rng);
}

}  // namespace gyroball
