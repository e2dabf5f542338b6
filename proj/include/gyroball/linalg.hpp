#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace gyroball {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Mixed relative/absolute tolerance. Two reals agree when
/// |x - y| <= abs + rel * max(|x|, |y|).
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;

    /// Throws InvalidArgument unless rel, abs >= 0 and not both zero.
    void validate() const;
    bool close(double x, double y) const noexcept;
    /// Budget used for residual checks that compare against zero.
    double bound() const noexcept { return abs + rel; }
};

double inner(const Vector& u, const Vector& v);
double norm(const Vector& v) noexcept;
Vector mat_apply(const Matrix& m, const Vector& v);
Matrix mat_compose(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
double determinant(const Matrix& m);

/// max |m^T m - I|, the entrywise orthonormality defect of a square matrix.
double orthogonality_residual(const Matrix& m);
bool is_orthogonal(const Matrix& m, const Tolerance& tol = {});

/// Largest absolute entry of a - b. Shapes must agree.
double max_abs_diff(const Vector& a, const Vector& b);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Throws DimensionError for an empty vector, InvalidArgument for NaN/inf entries.
void require_finite(const Vector& v, const char* what);
void require_finite(const Matrix& m, const char* what);

/// Square matrix with orthonormal columns. Construction validates.
class OrthoMatrix {
public:
    /// Throws NotOrthogonalError when the residual exceeds tol.bound().
    explicit OrthoMatrix(Matrix m, const Tolerance& tol = {});

    static OrthoMatrix identity(Eigen::Index n);

    const Matrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }

    Vector apply(const Vector& v) const { return mat_apply(m_, v); }
    OrthoMatrix compose(const OrthoMatrix& other) const;
    OrthoMatrix transpose() const;

private:
    struct Unchecked {};
    OrthoMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}

    Matrix m_;
};

/// Seed mixing (splitmix64 finalizer). Used to derive independent per-trial
/// streams from a base seed so results do not depend on evaluation order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept;

/// Portable random source: mt19937_64 with explicit uniform/normal transforms,
/// so a seed reproduces the same draws on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform();
    /// Standard normal (Box-Muller).
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Orthonormalizes an n x n standard Gaussian matrix (QR with the diagonal of
/// R made positive). Resamples degenerate draws a bounded number of times.
OrthoMatrix random_orthogonal(Eigen::Index n, Rng& rng);
OrthoMatrix random_orthogonal(Eigen::Index n, std::uint64_t seed);

/// Uniform direction times a radius uniform in [0, rmax]. rmax must lie in [0, 1).
Vector random_ball_point(Eigen::Index n, double rmax, Rng& rng);
Vector random_ball_point(Eigen::Index n, double rmax, std::uint64_t seed);

}  // namespace gyroball
