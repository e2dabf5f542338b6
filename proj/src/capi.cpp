#include "gyroball/gyroball.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "gyroball/boost.hpp"
#include "gyroball/check.hpp"
#include "gyroball/errors.hpp"
#include "gyroball/isometry.hpp"
#include "gyroball/metric.hpp"

struct gb_isometry {
    gyroball::Isometry iso;
};

namespace {

using namespace gyroball;

thread_local std::string g_last_error;

template <class Fn>
gb_status guarded(Fn&& fn) noexcept {
    try {
        g_last_error.clear();
        fn();
        return GB_OK;
    } catch (const NotOrthogonalError& e) {
        g_last_error = e.what();
        return GB_ERR_NOT_ORTHOGONAL;
    } catch (const NotIsometryError& e) {
        g_last_error = e.what();
        return GB_ERR_NOT_ISOMETRY;
    } catch (const DomainError& e) {
        g_last_error = e.what();
        return GB_ERR_DOMAIN;
    } catch (const DimensionError& e) {
        g_last_error = e.what();
        return GB_ERR_DIMENSION;
    } catch (const InvalidArgument& e) {
        g_last_error = e.what();
        return GB_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return GB_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GB_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return GB_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) throw InvalidArgument(std::string(what) + " is null");
}

Vector to_vector(gb_vec v) {
    if (v.len > 0) require(v.data, "vector data");
    Vector out(static_cast<Eigen::Index>(v.len));
    for (size_t i = 0; i < v.len; ++i) out(static_cast<Eigen::Index>(i)) = v.data[i];
    return out;
}

BallPoint to_point(gb_vec v) { return BallPoint(to_vector(v)); }

void write(const Vector& v, double* out) {
    require(out, "output buffer");
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v(i);
}

void write(const Matrix& m, double* out) {
    require(out, "output buffer");
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m(i, j);
}

void write(double x, double* out) {
    require(out, "output pointer");
    *out = x;
}

gb_isometry* wrap(Isometry f) { return new gb_isometry{std::move(f)}; }

void emit(Isometry f, gb_isometry** out) {
    require(out, "output handle");
    *out = wrap(std::move(f));
}

}  // namespace

extern "C" {

const char* gb_last_error(void) { return g_last_error.c_str(); }

const char* gb_status_name(gb_status status) {
    switch (status) {
        case GB_OK: return "ok";
        case GB_ERR_INVALID_ARGUMENT: return "invalid argument";
        case GB_ERR_DOMAIN: return "outside the unit ball";
        case GB_ERR_DIMENSION: return "dimension mismatch";
        case GB_ERR_NOT_ORTHOGONAL: return "not orthogonal";
        case GB_ERR_NOT_ISOMETRY: return "not an isometry";
        case GB_ERR_UNKNOWN_SUITE: return "unknown suite";
        case GB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

gb_status gb_gamma(gb_vec v, double* out) {
    return guarded([&] { write(gamma(to_point(v)), out); });
}

gb_status gb_add(gb_vec u, gb_vec v, double* out) {
    return guarded([&] { write(add(to_point(u), to_point(v)).vector(), out); });
}

gb_status gb_sub(gb_vec u, gb_vec v, double* out) {
    return guarded([&] { write(sub(to_point(u), to_point(v)).vector(), out); });
}

gb_status gb_gyr(gb_vec u, gb_vec v, gb_vec w, double* out) {
    return guarded([&] { write(gyr_apply(to_point(u), to_point(v), to_point(w)).vector(), out); });
}

gb_status gb_gyr_matrix(gb_vec u, gb_vec v, double* out) {
    return guarded([&] { write(gyr_matrix(to_point(u), to_point(v)).matrix(), out); });
}

gb_status gb_rapidity(gb_vec v, double* out) {
    return guarded([&] { write(rapidity(to_point(v)), out); });
}

gb_status gb_dist(gb_vec u, gb_vec v, double* out) {
    return guarded([&] { write(dist(to_point(u), to_point(v)), out); });
}

gb_status gb_gyrometric(gb_vec u, gb_vec v, double* out) {
    return guarded([&] { write(gyrometric(to_point(u), to_point(v)), out); });
}

gb_status gb_dist_oracle_cosh(gb_vec u, gb_vec v, double* out) {
    return guarded([&] { write(dist_oracle_cosh(to_point(u), to_point(v)), out); });
}

gb_status gb_dist_oracle_crossratio(gb_vec u, gb_vec v, double* out) {
    return guarded([&] { write(dist_oracle_crossratio(to_point(u), to_point(v)), out); });
}

gb_status gb_boost(gb_vec v, double* out) {
    return guarded([&] { write(boost(to_point(v)).m, out); });
}

gb_status gb_boost_compose_residual(gb_vec u, gb_vec v, double* out) {
    return guarded([&] { write(boost_compose_residual(to_point(u), to_point(v)), out); });
}

gb_status gb_thomas_rotation(gb_vec u, gb_vec v, double* out, double* angle, int* has_angle) {
    return guarded([&] {
        const ThomasRotation t = thomas_rotation(to_point(u), to_point(v));
        write(t.rotation.matrix(), out);
        if (has_angle) *has_angle = t.angle.has_value() ? 1 : 0;
        if (angle && t.angle) *angle = *t.angle;
    });
}

gb_status gb_isometry_create(gb_vec u, const double* tau, size_t rows, size_t cols, double tol,
                             gb_isometry** out) {
    return guarded([&] {
        require(tau, "tau");
        if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
        BallPoint p = to_point(u);
        if (rows != u.len || cols != u.len)
            throw DimensionError("tau is " + std::to_string(rows) + "x" + std::to_string(cols) +
                                 " but u has length " + std::to_string(u.len));
        Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = tau[i * cols + j];
        emit(Isometry(std::move(p), OrthoMatrix(std::move(m), Tolerance{0.0, tol})), out);
    });
}

gb_status gb_isometry_identity(size_t n, gb_isometry** out) {
    return guarded([&] {
        if (n == 0) throw DimensionError("dimension must be >= 1");
        emit(identity(static_cast<Eigen::Index>(n)), out);
    });
}

void gb_isometry_destroy(gb_isometry* f) { delete f; }

size_t gb_isometry_dim(const gb_isometry* f) { return f ? static_cast<size_t>(f->iso.dim()) : 0; }

gb_status gb_isometry_get(const gb_isometry* f, double* u_out, double* tau_out) {
    return guarded([&] {
        require(f, "isometry");
        if (u_out) write(f->iso.u.vector(), u_out);
        if (tau_out) write(f->iso.tau.matrix(), tau_out);
    });
}

gb_status gb_isometry_apply(const gb_isometry* f, gb_vec w, double* out) {
    return guarded([&] {
        require(f, "isometry");
        write(apply(f->iso, to_point(w)).vector(), out);
    });
}

gb_status gb_isometry_compose(const gb_isometry* f, const gb_isometry* g, gb_isometry** out) {
    return guarded([&] {
        require(f, "first isometry");
        require(g, "second isometry");
        emit(compose(f->iso, g->iso), out);
    });
}

gb_status gb_isometry_invert(const gb_isometry* f, gb_isometry** out) {
    return guarded([&] {
        require(f, "isometry");
        emit(invert(f->iso), out);
    });
}

gb_status gb_isometry_transport(gb_vec u, gb_vec v, gb_isometry** out) {
    return guarded([&] { emit(transport(to_point(u), to_point(v)), out); });
}

gb_status gb_isometry_reflection(gb_vec v, gb_isometry** out) {
    return guarded([&] { emit(point_reflection(to_point(v)), out); });
}

gb_status gb_isometry_decompose_probes(const double* inputs, const double* outputs, size_t count, size_t n,
                                       double tol, gb_isometry** out, double* max_residual) {
    return guarded([&] {
        require(inputs, "inputs");
        require(outputs, "outputs");
        if (n == 0) throw DimensionError("dimension must be >= 1");
        if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
        std::vector<std::pair<BallPoint, BallPoint>> probes;
        probes.reserve(count);
        for (size_t k = 0; k < count; ++k)
            probes.emplace_back(to_point({inputs + k * n, n}), to_point({outputs + k * n, n}));
        try {
            Decomposition d = decompose(probes, Tolerance{0.0, tol});
            if (max_residual) *max_residual = d.max_residual;
            emit(std::move(d.isometry), out);
        } catch (const NotIsometryError& e) {
            if (max_residual) *max_residual = e.residual();
            throw;
        }
    });
}

gb_status gb_isometry_decompose_map(gb_ball_map map, void* user, size_t n, double tol, uint64_t seed,
                                    gb_isometry** out, double* max_residual) {
    return guarded([&] {
        if (map == nullptr) throw InvalidArgument("map callback is null");
        if (n == 0) throw DimensionError("dimension must be >= 1");
        if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
        const BallMap psi = [&](const BallPoint& p) {
            std::vector<double> result(n);
            if (map(user, p.vector().data(), result.data(), n) != 0)
                throw InvalidArgument("map callback reported failure");
            return to_point({result.data(), n});
        };
        try {
            Decomposition d = decompose(psi, static_cast<Eigen::Index>(n), Tolerance{0.0, tol}, seed);
            if (max_residual) *max_residual = d.max_residual;
            emit(std::move(d.isometry), out);
        } catch (const NotIsometryError& e) {
            if (max_residual) *max_residual = e.residual();
            throw;
        }
    });
}

gb_status gb_check_run(const char* suite, size_t n, uint64_t trials, double rmax, uint64_t seed, double tol,
                       gb_check_report* out) {
    if (suite != nullptr && !is_known_suite(suite) && std::strcmp(suite, "all") != 0) {
        g_last_error = std::string("unknown suite '") + suite + "'";
        return GB_ERR_UNKNOWN_SUITE;
    }
    return guarded([&] {
        require(suite, "suite");
        require(out, "report");
        CheckConfig config;
        config.suite = suite;
        config.dim = static_cast<Eigen::Index>(n);
        config.trials = trials;
        config.rmax = rmax;
        config.seed = seed;
        config.tol = tol;
        const CheckReport r = run_check(config);
        std::memset(out, 0, sizeof(*out));
        std::strncpy(out->suite, r.suite.c_str(), sizeof(out->suite) - 1);
        out->trials = r.trials;
        out->dimension = static_cast<uint64_t>(r.dimension);
        out->max_residual = r.max_residual;
        out->violations = r.violations;
        out->passed = r.passed ? 1 : 0;
        out->seed = r.seed;
    });
}

}  // extern "C"
