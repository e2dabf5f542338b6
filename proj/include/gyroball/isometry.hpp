#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>

#include "gyroball/gyro.hpp"

namespace gyroball {

/// An isometry of (B, d_E) in canonical form w -> u (+) tau(w): a left
/// gyrotranslation after an orthogonal map. Every isometry has exactly one
/// such form, so the pair doubles as an element of the gyrosemidirect
/// product B x| O(B) with multiplication
///
///   (u, a)(v, b) = (u (+) a v, gyr[u, a v] a b).
struct Isometry {
    BallPoint u;
    OrthoMatrix tau;

    /// Throws DimensionError if u and tau disagree on dimension.
    Isometry(BallPoint u, OrthoMatrix tau);

    Eigen::Index dim() const noexcept { return u.dim(); }
};

Isometry identity(Eigen::Index n);
/// Pure left gyrotranslation (u, I).
Isometry translation(const BallPoint& u);
/// Pure orthogonal map (0, tau).
Isometry rotation(const OrthoMatrix& tau);

BallPoint apply(const Isometry& f, const BallPoint& w);

/// f after g.
Isometry compose(const Isometry& f, const Isometry& g, const Tolerance& tol = {});

/// (tau^T(-u), tau^T).
Isometry invert(const Isometry& f);

/// Map u to v by L_v o L_{-u}.
Isometry transport(const BallPoint& u, const BallPoint& v, const Tolerance& tol = {});

/// sigma_v = L_v o (-id) o L_{-v}: an involution whose only fixed point is v.
Isometry point_reflection(const BallPoint& v, const Tolerance& tol = {});

/// Largest field difference between two canonical forms.
double canonical_distance(const Isometry& f, const Isometry& g);

using BallMap = std::function<BallPoint(const BallPoint&)>;

struct Decomposition {
    Isometry isometry;
    /// Worst of the orthogonality defect of tau and the probe mismatches.
    double max_residual;
};

/// Recovers (u, tau) from a map known only by evaluation: u = psi(0) and
/// column i of tau is 2 ((-u) (+) psi(e_i / 2)). The result is checked on
/// `validation_probes` random points drawn from `seed`. Throws
/// NotIsometryError if any residual exceeds tol.bound().
Decomposition decompose(const BallMap& psi, Eigen::Index n, const Tolerance& tol = {},
                        std::uint64_t seed = 0, int validation_probes = 8);

/// Same recovery from a fixed list of (input, output) pairs. Needs at least
/// n + 1 inputs in general position. The translation part comes from a
/// least-squares fit of the isometry lifted to a linear map on the hyperboloid
/// model; tau is then fitted from (-u) (+) output against input. Every pair
/// is checked against the fit.
Decomposition decompose(std::span<const std::pair<BallPoint, BallPoint>> probes,
                        const Tolerance& tol = {});

}  // namespace gyroball
