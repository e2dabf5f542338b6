#include <cmath>

#include "doctest.h"
#include "gyroball/errors.hpp"
#include "gyroball/gyro.hpp"
#include "reference.hpp"

using namespace gyroball;

namespace {

BallPoint pt(std::initializer_list<double> xs) {
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return BallPoint(v);
}

double diff(const BallPoint& a, const BallPoint& b) { return max_abs_diff(a.vector(), b.vector()); }
double diff(const OrthoMatrix& a, const OrthoMatrix& b) { return max_abs_diff(a.matrix(), b.matrix()); }

double diff(const BallPoint& a, const reference::Point& b) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.dim(); ++i)
        worst = std::max(worst, static_cast<double>(std::abs(a[i] - b[static_cast<std::size_t>(i)])));
    return worst;
}

constexpr double kTol = 1e-9;

}  // namespace

TEST_CASE("ball membership") {
    CHECK_THROWS_AS(pt({0.6, 0.8}), DomainError);
    CHECK_THROWS_AS(pt({1.0, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(pt({NAN, 0.0}), InvalidArgument);
    CHECK_THROWS_AS(BallPoint{Vector{}}, DimensionError);
    CHECK_NOTHROW(pt({0.6, 0.8 * 0.9999999999}));
}

TEST_CASE("Lorentz factor") {
    CHECK(gamma(pt({0, 0})) == 1.0);
    CHECK(gamma(pt({0.6, 0})) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(gamma(pt({0.6, 0.8 * 0.9999999999})) > 1e4);
    Vector edge(2);
    edge << 0.6, 0.8;
    CHECK_THROWS_AS(gamma(edge), DomainError);
}

TEST_CASE("Einstein addition: worked values") {
    const BallPoint v = pt({0.3, -0.4});
    CHECK(diff(add(BallPoint::zero(2), v), v) == 0.0);
    // Collinear speeds add as (a + b) / (1 + ab).
    CHECK(diff(add(pt({0.5, 0}), pt({0.5, 0})), pt({0.8, 0})) < 1e-15);
    // Orthogonal: <u,v> = 0, gamma_u = 1.25, so u + v / 1.25.
    CHECK(diff(add(pt({0.6, 0}), pt({0, 0.6})), pt({0.6, 0.48})) < 1e-15);
    // 50-digit evaluation of the defining formula.
    CHECK(diff(add(pt({0.3, -0.2, 0.5}), pt({-0.4, 0.1, 0.6})),
               pt({0.010253726224509481865, -0.11996811452340590486, 0.87689500121455263859})) < 1e-15);
    CHECK_THROWS_AS(add(pt({0.1, 0}), pt({0.1, 0, 0})), DimensionError);
}

TEST_CASE("negation and subtraction") {
    CHECK(diff(neg(pt({0, 0})), pt({0, 0})) == 0.0);
    const BallPoint v = pt({0.3, 0.4});
    CHECK(norm(add(neg(v), v).vector()) < 1e-16);
    CHECK(diff(neg(neg(v)), v) == 0.0);
    CHECK(norm(sub(v, v).vector()) < 1e-16);
    CHECK(diff(sub(BallPoint::zero(2), v), v) == 0.0);
    // (-0.5 + 0.8) / (1 - 0.4)
    CHECK(diff(sub(pt({0.5, 0}), pt({0.8, 0})), pt({0.5, 0})) < 1e-15);
}

TEST_CASE("addition never leaves the ball") {
    const double edge = std::nextafter(1.0, 0.0);
    const BallPoint u = pt({edge, 0.0});
    const BallPoint s = add(u, u);
    CHECK(norm(s.vector()) < 1.0);
    CHECK(s.rescaled());
    CHECK(norm(s.vector()) == doctest::Approx(1.0 - kBoundaryMargin).epsilon(1e-15));
    CHECK_FALSE(add(pt({0.5, 0}), pt({0.5, 0})).rescaled());
}

TEST_CASE("gyrations: worked values") {
    const BallPoint w = pt({0.2, 0.1});
    CHECK(diff(gyr_apply(BallPoint::zero(2), pt({0.3, 0.7}), w), w) < 1e-15);
    CHECK(diff(gyr_apply(pt({0.5, 0}), pt({0.3, 0}), w), w) < 1e-15);

    const BallPoint turned = gyr_apply(pt({0.5, 0}), pt({0, 0.5}), w);
    CHECK(norm(turned.vector()) == doctest::Approx(norm(w.vector())).epsilon(1e-15));
    CHECK(diff(turned, pt({0.21223437800787169069, 0.070402903289650131059})) < 1e-15);

    CHECK(diff(gyr_apply(pt({0.3, -0.2, 0.5}), pt({-0.4, 0.1, 0.6}), pt({0.1, 0.7, -0.2})),
               pt({0.036860383233299272211, 0.72038957223025690137, -0.14028605194316997593})) < 1e-15);
}

TEST_CASE("gyration matrices") {
    const BallPoint u = pt({0.5, 0}), v = pt({0, 0.5});
    CHECK(diff(gyr_matrix(BallPoint::zero(2), v), OrthoMatrix::identity(2)) < 1e-15);
    CHECK(diff(gyr_matrix(v, v), OrthoMatrix::identity(2)) < 1e-15);

    Matrix expected(2, 2);
    expected << 0.98974331861078702487, 0.14285714285714285714, -0.14285714285714285714,
        0.98974331861078702487;
    CHECK(max_abs_diff(gyr_matrix(u, v).matrix(), expected) < 1e-15);

    Rng rng(2);
    const OrthoMatrix g = gyr_matrix(u, v);
    for (int k = 0; k < 20; ++k) {
        const BallPoint w(random_ball_point(2, 0.95, rng));
        CHECK(max_abs_diff(g.apply(w.vector()), gyr_apply(u, v, w).vector()) < 1e-15);
    }
}

TEST_CASE("agreement with the reference transcription") {
    Rng rng(99);
    for (int t = 0; t < 500; ++t) {
        const Eigen::Index n = 2 + t % 4;
        const BallPoint u(random_ball_point(n, 0.95, rng)), v(random_ball_point(n, 0.95, rng)),
            w(random_ball_point(n, 0.95, rng));
        const auto ru = reference::from(u.vector()), rv = reference::from(v.vector()),
                   rw = reference::from(w.vector());
        CHECK(diff(add(u, v), reference::einstein_add(ru, rv)) < 1e-14);
        CHECK(diff(gyr_apply(u, v, w), reference::gyration(ru, rv, rw)) < 1e-13);
    }
}

TEST_CASE("gyrogroup identities on random triples") {
    Rng rng(1234);
    for (int t = 0; t < 2000; ++t) {
        const Eigen::Index n = 2 + t % 4;
        const BallPoint u(random_ball_point(n, 0.95, rng)), v(random_ball_point(n, 0.95, rng)),
            w(random_ball_point(n, 0.95, rng));
        const BallPoint zero = BallPoint::zero(n);
        const OrthoMatrix g = gyr_matrix(u, v);

        CHECK(diff(add(zero, v), v) <= kTol);
        CHECK(norm(add(neg(v), v).vector()) <= kTol);
        CHECK(diff(add(u, add(v, w)), add(add(u, v), gyr_apply(u, v, w))) <= kTol);
        CHECK(diff(add(add(u, v), w), add(u, add(v, gyr_apply(v, u, w)))) <= kTol);
        CHECK(diff(gyr_matrix(add(u, v), v), g) <= kTol);
        CHECK(diff(gyr_matrix(u, add(v, u)), g) <= kTol);
        CHECK(diff(add(u, v), gyr_apply(u, v, add(v, u))) <= kTol);
        CHECK(diff(sub(u, add(u, v)), v) <= kTol);
        CHECK(diff(neg(add(u, v)), gyr_apply(u, v, add(neg(v), neg(u)))) <= kTol);
        CHECK(diff(add(sub(u, v), gyr_apply(neg(u), v, sub(v, w))), sub(u, w)) <= kTol);
        CHECK(diff(gyr_matrix(neg(u), neg(v)), g) <= kTol);
        CHECK(diff(gyr_matrix(v, u), g.transpose()) <= kTol);
        CHECK(std::abs(norm(gyr_apply(u, v, w).vector()) - norm(w.vector())) <= kTol);

        const double nu = norm(u.vector()), nv = norm(v.vector());
        CHECK(norm(add(u, v).vector()) <= (nu + nv) / (1.0 + nu * nv) + 1e-12);
    }
}

TEST_CASE("gyr_matrix flags an inconsistent result instead of returning it") {
    // An absurdly tight tolerance turns ordinary rounding into a failed
    // consistency check.
    Rng rng(5);
    bool threw = false;
    for (int t = 0; t < 50 && !threw; ++t) {
        const BallPoint u(random_ball_point(4, 0.95, rng)), v(random_ball_point(4, 0.95, rng));
        try {
            (void)gyr_matrix(u, v, Tolerance{0.0, 1e-300});
        } catch (const InternalError&) {
            threw = true;
        }
    }
    CHECK(threw);
}
