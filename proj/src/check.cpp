#include "gyroball/check.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "gyroball/boost.hpp"
#include "gyroball/errors.hpp"
#include "gyroball/isometry.hpp"
#include "gyroball/metric.hpp"

namespace gyroball {

namespace {

constexpr std::array<std::string_view, 8> kSuites = {
    "gyrogroup-axioms", "theorem1", "theorem2", "metric-axioms",
    "oracles",          "isometry-group", "eq5-eq6", "boosts",
};

// Minimum separation for the "no other fixed point" check of a point reflection.
constexpr double kFixedPointSeparation = 1e-6;

class Recorder {
public:
    explicit Recorder(double tol) : tol_(tol), slack_(inequality_slack(tol)) {}

    void equal(std::string_view name, const BallPoint& a, const BallPoint& b) {
        residual(name, max_abs_diff(a.vector(), b.vector()));
    }
    void equal(std::string_view name, const Vector& a, const Vector& b) {
        residual(name, max_abs_diff(a, b));
    }
    void equal(std::string_view name, const Matrix& a, const Matrix& b) {
        residual(name, max_abs_diff(a, b));
    }
    void equal(std::string_view name, double a, double b) { residual(name, std::abs(a - b)); }

    void residual(std::string_view name, double r) {
        PropertyResult& p = slot(name);
        ++p.evaluations;
        if (!(r <= p.max_residual)) p.max_residual = std::isnan(r) ? INFINITY : r;
    }

    /// lhs <= rhs up to the inequality slack.
    void at_most(std::string_view name, double lhs, double rhs) {
        PropertyResult& p = slot(name);
        ++p.evaluations;
        const double over = lhs - rhs;
        if (!(over <= slack_)) ++p.violations;
        if (over > p.max_residual) p.max_residual = over;
    }

    void holds(std::string_view name, bool condition) {
        PropertyResult& p = slot(name);
        ++p.evaluations;
        if (!condition) ++p.violations;
    }

    double tol() const noexcept { return tol_; }
    Tolerance tolerance() const noexcept { return {0.0, tol_}; }

    std::vector<PropertyResult> take() && { return std::move(props_); }

private:
    PropertyResult& slot(std::string_view name) {
        for (auto& p : props_)
            if (p.name == name) return p;
        props_.push_back({std::string(name), 0.0, 0, 0});
        return props_.back();
    }

    double tol_;
    double slack_;
    std::vector<PropertyResult> props_;
};

struct Sampler {
    Rng rng;
    Eigen::Index n;
    double rmax;

    BallPoint point() { return BallPoint(random_ball_point(n, rmax, rng)); }
    OrthoMatrix orthogonal() { return random_orthogonal(n, rng); }
    Isometry isometry() {
        BallPoint u = point();
        return {std::move(u), orthogonal()};
    }
};

Vector origin(Eigen::Index n) { return Vector::Zero(n); }

void gyrogroup_axioms(Sampler& s, Recorder& r) {
    const BallPoint u = s.point(), v = s.point(), w = s.point(), x = s.point();
    const BallPoint zero = BallPoint::zero(s.n);
    const Tolerance tol = r.tolerance();

    r.equal("left-identity", add(zero, v), v);
    r.equal("right-identity", add(v, zero), v);
    r.equal("left-inverse", add(neg(v), v).vector(), origin(s.n));
    r.equal("right-inverse", add(v, neg(v)).vector(), origin(s.n));
    r.equal("gyroassociative-left", add(u, add(v, w)), add(add(u, v), gyr_apply(u, v, w)));
    r.equal("gyroassociative-right", add(add(u, v), w), add(u, add(v, gyr_apply(v, u, w))));

    const OrthoMatrix g = gyr_matrix(u, v, tol);
    r.equal("loop-left", gyr_matrix(add(u, v), v, tol).matrix(), g.matrix());
    r.equal("loop-right", gyr_matrix(u, add(v, u), tol).matrix(), g.matrix());
    r.equal("gyrocommutative", add(u, v), gyr_apply(u, v, add(v, u)));
    r.equal("gyration-automorphism", gyr_apply(u, v, add(w, x)),
            add(gyr_apply(u, v, w), gyr_apply(u, v, x)));
    r.equal("gyration-matrix-action", g.apply(w.vector()), gyr_apply(u, v, w).vector());
    r.residual("gyration-orthogonal", orthogonality_residual(g.matrix()));
}

void theorem1(Sampler& s, Recorder& r) {
    const BallPoint u = s.point(), v = s.point(), w = s.point();
    const BallPoint zero = BallPoint::zero(s.n);

    r.holds("rapidity-nonnegative", rapidity(v) >= 0.0);
    r.residual("rapidity-zero-at-origin", std::abs(rapidity(zero)));
    if (norm(v.vector()) > 0.0) r.holds("rapidity-positive-off-origin", rapidity(v) > 0.0);
    r.equal("rapidity-even", rapidity(neg(v)), rapidity(v));
    r.at_most("rapidity-subadditive", rapidity(add(u, v)), rapidity(u) + rapidity(v));

    const double nu = norm(u.vector()), nv = norm(v.vector());
    r.at_most("norm-subadditive", norm(add(u, v).vector()), (nu + nv) / (1.0 + nu * nv));

    const BallPoint turned = gyr_apply(u, v, w);
    r.equal("rapidity-gyration-invariant", rapidity(turned), rapidity(w));
    r.equal("norm-gyration-invariant", norm(turned.vector()), norm(w.vector()));
}

void theorem2(Sampler& s, Recorder& r) {
    const BallPoint u = s.point(), v = s.point(), w = s.point();
    const Tolerance tol = r.tolerance();

    r.equal("left-cancellation", sub(u, add(u, v)), v);
    r.equal("negation-identity", neg(add(u, v)), gyr_apply(u, v, add(neg(v), neg(u))));
    r.equal("three-point-identity", add(sub(u, v), gyr_apply(neg(u), v, sub(v, w))), sub(u, w));
    r.equal("even-property", gyr_matrix(neg(u), neg(v), tol).matrix(), gyr_matrix(u, v, tol).matrix());
    r.equal("inversive-symmetry",
            Matrix(gyr_matrix(v, u, tol).matrix() * gyr_matrix(u, v, tol).matrix()),
            Matrix(Matrix::Identity(s.n, s.n)));
    r.equal("translation-inverse-left", add(neg(u), add(u, w)), w);
    r.equal("translation-inverse-right", add(u, add(neg(u), w)), w);
}

void metric_axioms(Sampler& s, Recorder& r) {
    const BallPoint x = s.point(), y = s.point(), z = s.point();
    const bool distinct = max_abs_diff(x.vector(), y.vector()) > 0.0;

    using Metric = double (*)(const BallPoint&, const BallPoint&);
    const std::array<std::pair<std::string_view, Metric>, 2> metrics = {{
        {"dist", &dist},
        {"gyrometric", &gyrometric},
    }};
    for (const auto& [label, d] : metrics) {
        const std::string p(label);
        const double xy = d(x, y);
        r.holds(p + "-nonnegative", xy >= 0.0 && d(y, z) >= 0.0);
        r.residual(p + "-self-zero", std::abs(d(x, x)));
        if (distinct) r.holds(p + "-separates-points", xy > 0.0);
        r.equal(p + "-symmetric", xy, d(y, x));
        r.at_most(p + "-triangle", d(x, z), xy + d(y, z));
    }
    r.equal("tanh-bridge", std::tanh(dist(x, y)), gyrometric(x, y));
}

void oracles(Sampler& s, Recorder& r) {
    const BallPoint x = s.point(), y = s.point();
    const double d = dist(x, y);
    r.equal("cosh-oracle", d, dist_oracle_cosh(x, y));
    r.equal("crossratio-oracle", d, dist_oracle_crossratio(x, y));
    r.equal("crossratio-symmetric", dist_oracle_crossratio(x, y), dist_oracle_crossratio(y, x));
}

void isometry_group(Sampler& s, Recorder& r, std::uint64_t probe_seed) {
    const Isometry f = s.isometry(), g = s.isometry(), h = s.isometry();
    const BallPoint x = s.point(), y = s.point(), a = s.point(), b = s.point();
    const Tolerance tol = r.tolerance();
    const Isometry id = identity(s.n);

    const Isometry fg = compose(f, g, tol);
    r.equal("action-equivalence", apply(fg, x), apply(f, apply(g, x)));
    r.residual("associativity",
               canonical_distance(compose(fg, h, tol), compose(f, compose(g, h, tol), tol)));
    r.residual("identity-left", canonical_distance(compose(id, f, tol), f));
    r.residual("identity-right", canonical_distance(compose(f, id, tol), f));
    const Isometry finv = invert(f);
    r.residual("inverse-left", canonical_distance(compose(finv, f, tol), id));
    r.residual("inverse-right", canonical_distance(compose(f, finv, tol), id));

    const double dxy = dist(x, y);
    r.equal("isometry-invariance", dist(apply(f, x), apply(f, y)), dxy);
    r.equal("translation-is-isometry", dist(add(a, x), add(a, y)), dxy);
    r.equal("orthogonal-is-isometry",
            dist(BallPoint(f.tau.apply(x.vector())), BallPoint(f.tau.apply(y.vector()))), dxy);
    r.equal("gyration-is-isometry", dist(gyr_apply(a, b, x), gyr_apply(a, b, y)), dxy);

    const Decomposition black_box =
        decompose([&f](const BallPoint& p) { return apply(f, p); }, s.n, tol, probe_seed);
    r.residual("decompose-roundtrip", canonical_distance(black_box.isometry, f));

    // n + 1 generic probes pin down the canonical form.
    std::vector<std::pair<BallPoint, BallPoint>> probes;
    for (Eigen::Index k = 0; k <= s.n; ++k) {
        BallPoint in = s.point();
        BallPoint out = apply(f, in);
        probes.emplace_back(std::move(in), std::move(out));
    }
    r.residual("canonical-uniqueness", canonical_distance(decompose(probes, tol).isometry, f));

    r.equal("transport-endpoint", apply(transport(x, y, tol), x), y);

    const Isometry sigma = point_reflection(x, tol);
    r.residual("reflection-involution", canonical_distance(compose(sigma, sigma, tol), id));
    r.equal("reflection-fixes-center", apply(sigma, x), x);
    if (norm(y.vector() - x.vector()) > kFixedPointSeparation)
        r.holds("reflection-unique-fixed-point",
                norm(apply(sigma, y).vector() - y.vector()) > r.tol());
}

void eq5_eq6(Sampler& s, Recorder& r, std::uint64_t probe_seed) {
    const Isometry f = s.isometry(), g = s.isometry();
    const BallPoint x = s.point(), u = s.point(), v = s.point();
    const Tolerance tol = r.tolerance();

    // Map form: (L_u o a) o (L_v o b) = L_{u (+) a v} o (gyr[u, a v] o a o b),
    // evaluated pointwise without going through compose().
    const BallPoint av(f.tau.apply(g.u.vector()));
    const BallPoint lhs = add(f.u, BallPoint(f.tau.apply(add(g.u, BallPoint(g.tau.apply(x.vector()))).vector())));
    const Matrix linear = gyr_matrix(f.u, av, tol).matrix() * f.tau.matrix() * g.tau.matrix();
    const BallPoint rhs = add(add(f.u, av), BallPoint(linear * x.vector()));
    r.equal("map-form-composition", lhs, rhs);

    // Pair multiplication agrees with decomposing the composite map.
    const Isometry fg = compose(f, g, tol);
    const Decomposition composite = decompose(
        [&f, &g](const BallPoint& p) { return apply(f, apply(g, p)); }, s.n, tol, probe_seed);
    r.residual("pair-law-matches-maps", canonical_distance(fg, composite.isometry));
    r.equal("pair-law-translation", fg.u, add(f.u, av));

    const Isometry tt = compose(translation(u), translation(v), tol);
    r.equal("translation-composition-point", tt.u, add(u, v));
    r.equal("translation-composition-gyration", tt.tau.matrix(), gyr_matrix(u, v, tol).matrix());

    r.residual("identity-composition", canonical_distance(compose(identity(s.n), g, tol), g));
    r.equal("orthogonal-automorphism", BallPoint(f.tau.apply(add(u, v).vector())),
            add(BallPoint(f.tau.apply(u.vector())), BallPoint(f.tau.apply(v.vector()))));
}

void boosts(Sampler& s, Recorder& r) {
    const BallPoint u = s.point(), v = s.point();
    const Tolerance tol = r.tolerance();

    const BoostMatrix bu = boost(u);
    r.residual("minkowski-orthogonal", minkowski_residual(bu.m));
    r.equal("time-entry-is-gamma", bu.m(0, 0), gamma(u));
    r.equal("symmetric", bu.m, Matrix(bu.m.transpose()));
    r.residual("composition-law", boost_compose_residual(u, v, tol));
    r.residual("gyration-block", gyration_block_residual(u, v, tol));

    // A point on the line through u, strictly inside the sampling radius.
    const double nu = norm(u.vector());
    const double scale = nu > 0.0 ? (2.0 * s.rng.uniform() - 1.0) * s.rmax / nu : 0.0;
    const BallPoint along(u.vector() * scale);
    r.equal("collinear-thomas-identity", thomas_rotation(u, along, tol).rotation.matrix(),
            Matrix(Matrix::Identity(s.n, s.n)));
}

SuiteResult run_one(std::size_t index, const CheckConfig& config) {
    Recorder recorder(config.tol);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        Sampler s{Rng(mix_seed(config.seed, index, t)), config.dim, config.rmax};
        const std::uint64_t probe_seed = mix_seed(config.seed, index + 1000, t);
        try {
            switch (index) {
                case 0: gyrogroup_axioms(s, recorder); break;
                case 1: theorem1(s, recorder); break;
                case 2: theorem2(s, recorder); break;
                case 3: metric_axioms(s, recorder); break;
                case 4: oracles(s, recorder); break;
                case 5: isometry_group(s, recorder, probe_seed); break;
                case 6: eq5_eq6(s, recorder, probe_seed); break;
                case 7: boosts(s, recorder); break;
            }
        } catch (const Error&) {
            recorder.holds("no-errors", false);
        }
    }
    return {std::string(kSuites[index]), std::move(recorder).take()};
}

void validate(const CheckConfig& c) {
    if (!is_known_suite(c.suite) && c.suite != "all") throw InvalidArgument("unknown suite '" + c.suite + "'");
    if (c.dim < 1) throw InvalidArgument("dimension must be >= 1");
    if (c.trials < 1) throw InvalidArgument("trials must be >= 1");
    if (!(c.rmax >= 0.0 && c.rmax < 1.0)) throw InvalidArgument("rmax must lie in [0, 1)");
    if (!(c.tol > 0.0) || !std::isfinite(c.tol)) throw InvalidArgument("tol must be positive");
}

}  // namespace

double inequality_slack(double tol) noexcept { return 1e-3 * tol; }

std::span<const std::string_view> suite_names() noexcept { return kSuites; }

bool is_known_suite(std::string_view name) noexcept {
    return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

std::vector<SuiteResult> run_suites(const CheckConfig& config) {
    validate(config);
    std::vector<SuiteResult> out;
    for (std::size_t i = 0; i < kSuites.size(); ++i)
        if (config.suite == "all" || config.suite == kSuites[i]) out.push_back(run_one(i, config));
    return out;
}

CheckReport summarize(const CheckConfig& config, std::span<const SuiteResult> results) {
    CheckReport report;
    report.suite = config.suite;
    report.trials = config.trials;
    report.dimension = config.dim;
    report.seed = config.seed;
    for (const auto& suite : results)
        for (const auto& p : suite.properties) {
            report.max_residual = std::max(report.max_residual, p.max_residual);
            report.violations += p.violations;
        }
    report.passed = report.max_residual <= config.tol && report.violations == 0;
    return report;
}

CheckReport run_check(const CheckConfig& config) {
    const auto results = run_suites(config);
    return summarize(config, results);
}

}  // namespace gyroball
