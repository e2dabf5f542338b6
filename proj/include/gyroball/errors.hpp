#pragma once

#include <stdexcept>
#include <string>

namespace gyroball {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (vector lengths, matrix sizes).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A point that must lie in the open unit ball does not.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed argument that is neither a shape nor a ball-membership problem.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A matrix offered as an orthogonal transformation fails the orthonormality check.
class NotOrthogonalError : public Error {
public:
    NotOrthogonalError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// A black-box map (or a set of probe pairs) is not an isometry of the ball.
class NotIsometryError : public Error {
public:
    NotIsometryError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// An internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace gyroball
