// gyroball: command-line front end to libgyroball.
//
//   gyroball <command> [args] [--tol T] [--seed S] [--rmax R]
//
// Data arguments are JSON (a vector is an array of numbers, an isometry is
// {"u": [...], "tau": [[...], ...]}) given inline or as @path/to/file.json.
// Exactly one JSON document is written to stdout.
//
// Exit codes: 0 ok, 1 check failed, 2 malformed input or usage, 3 point
// outside the ball, 4 dimension mismatch, 5 tau not orthogonal, 6 not an
// isometry, 7 internal error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gyroball/gyroball.h"

namespace {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kMalformed = 2,
    kOutsideBall = 3,
    kDimension = 4,
    kNotOrthogonal = 5,
    kNotIsometry = 6,
    kInternal = 7,
};

struct CliError {
    int code;
    std::string message;
};

struct Globals {
    double tol = 1e-9;
    std::uint64_t seed = 0;
    double rmax = 0.95;
};

int exit_code(gb_status s) {
    switch (s) {
        case GB_OK: return kOk;
        case GB_ERR_INVALID_ARGUMENT: return kMalformed;
        case GB_ERR_UNKNOWN_SUITE: return kMalformed;
        case GB_ERR_DOMAIN: return kOutsideBall;
        case GB_ERR_DIMENSION: return kDimension;
        case GB_ERR_NOT_ORTHOGONAL: return kNotOrthogonal;
        case GB_ERR_NOT_ISOMETRY: return kNotIsometry;
        case GB_ERR_INTERNAL: return kInternal;
    }
    return kInternal;
}

void ok(gb_status s) {
    if (s != GB_OK) throw CliError{exit_code(s), std::string(gb_status_name(s)) + ": " + gb_last_error()};
}

[[noreturn]] void malformed(const std::string& what) { throw CliError{kMalformed, what}; }

Json load(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) malformed("cannot read " + arg.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        malformed(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<double> to_vector(const Json& j, const char* what) {
    if (!j.is_array() || j.empty()) malformed(std::string(what) + " must be a non-empty array of numbers");
    std::vector<double> v;
    v.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number()) malformed(std::string(what) + " must contain only numbers");
        const double d = x.get<double>();
        if (!std::isfinite(d)) malformed(std::string(what) + " has a non-finite entry");
        v.push_back(d);
    }
    return v;
}

std::vector<double> vector_arg(const std::string& arg, const char* what) { return to_vector(load(arg), what); }

gb_vec view(const std::vector<double>& v) { return {v.data(), v.size()}; }

// Clears negative zero so that e.g. -(0) prints as 0.0.
double tidy(double x) { return x + 0.0; }

Json vector_json(const std::vector<double>& v) {
    Json out = Json::array();
    for (double x : v) out.push_back(tidy(x));
    return out;
}

Json matrix_json(const std::vector<double>& m, std::size_t rows, std::size_t cols) {
    Json out = Json::array();
    for (std::size_t i = 0; i < rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < cols; ++j) row.push_back(tidy(m[i * cols + j]));
        out.push_back(std::move(row));
    }
    return out;
}

using IsometryPtr = std::unique_ptr<gb_isometry, decltype(&gb_isometry_destroy)>;

IsometryPtr own(gb_isometry* f) { return IsometryPtr(f, &gb_isometry_destroy); }

IsometryPtr isometry_arg(const std::string& arg, const Globals& g) {
    const Json j = load(arg);
    if (!j.is_object() || !j.contains("u") || !j.contains("tau"))
        malformed("isometry must be an object with keys \"u\" and \"tau\"");
    const std::vector<double> u = to_vector(j.at("u"), "u");
    const Json& tau = j.at("tau");
    if (!tau.is_array() || tau.empty()) malformed("tau must be a non-empty array of rows");
    const std::size_t rows = tau.size();
    std::size_t cols = 0;
    std::vector<double> flat;
    for (const auto& row : tau) {
        const std::vector<double> r = to_vector(row, "tau row");
        if (cols == 0) cols = r.size();
        if (r.size() != cols) malformed("tau rows have different lengths");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    gb_isometry* f = nullptr;
    ok(gb_isometry_create(view(u), flat.data(), rows, cols, g.tol, &f));
    return own(f);
}

Json isometry_json(const gb_isometry* f) {
    const std::size_t n = gb_isometry_dim(f);
    std::vector<double> u(n), tau(n * n);
    ok(gb_isometry_get(f, u.data(), tau.data()));
    Json out;
    out["u"] = vector_json(u);
    out["tau"] = matrix_json(tau, n, n);
    return out;
}

// Probe file: [[input, output], ...] or {"probes": [[input, output], ...]}.
Json decompose_probes(const std::string& arg, const Globals& g) {
    Json j = load(arg);
    if (j.is_object() && j.contains("probes")) j = j.at("probes");
    if (!j.is_array() || j.empty()) malformed("probe file must be a non-empty array of [input, output] pairs");
    std::vector<double> inputs, outputs;
    std::size_t n = 0;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) malformed("each probe must be an [input, output] pair");
        const std::vector<double> in = to_vector(pair[0], "probe input");
        const std::vector<double> out = to_vector(pair[1], "probe output");
        if (n == 0) n = in.size();
        if (in.size() != n || out.size() != n)
            throw CliError{kDimension, "dimension mismatch: probe vectors must all have length " + std::to_string(n)};
        inputs.insert(inputs.end(), in.begin(), in.end());
        outputs.insert(outputs.end(), out.begin(), out.end());
    }
    gb_isometry* f = nullptr;
    double residual = 0.0;
    const gb_status s =
        gb_isometry_decompose_probes(inputs.data(), outputs.data(), j.size(), n, g.tol, &f, &residual);
    if (s == GB_ERR_NOT_ISOMETRY) {
        std::ostringstream os;
        os << "not an isometry: max probe residual " << residual;
        throw CliError{kNotIsometry, os.str()};
    }
    ok(s);
    IsometryPtr owned = own(f);
    Json out = isometry_json(owned.get());
    out["max_residual"] = residual;
    return out;
}

using Binary = gb_status (*)(gb_vec, gb_vec, double*);
using Unary = gb_status (*)(gb_vec, double*);

Json point_binary(Binary fn, const std::vector<std::string>& a) {
    const auto u = vector_arg(a[0], "u"), v = vector_arg(a[1], "v");
    std::vector<double> out(u.size());
    ok(fn(view(u), view(v), out.data()));
    return vector_json(out);
}

Json scalar_binary(Binary fn, const std::vector<std::string>& a) {
    const auto u = vector_arg(a[0], "u"), v = vector_arg(a[1], "v");
    double out = 0.0;
    ok(fn(view(u), view(v), &out));
    return tidy(out);
}

Json scalar_unary(Unary fn, const std::vector<std::string>& a) {
    const auto v = vector_arg(a[0], "v");
    double out = 0.0;
    ok(fn(view(v), &out));
    return tidy(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Einstein gyrogroup and isometries of the Beltrami-Klein ball", "gyroball"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--tol", g.tol, "Residual tolerance for all approximate checks")->capture_default_str();
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--rmax", g.rmax, "Sampling radius for check suites")->capture_default_str();

    // One string per positional parameter. A vector<string> option would let
    // CLI11 split JSON arrays such as [0.5,0] on commas.
    std::vector<std::string> args(3);
    Json result;
    int status = kOk;

    auto command = [&](const char* name, const char* help, std::vector<const char*> params,
                       std::function<Json()> run) {
        CLI::App* sub = app.add_subcommand(name, help);
        for (std::size_t i = 0; i < params.size(); ++i)
            sub->add_option(params[i], args[i], "JSON value or @file")->required();
        sub->callback([&result, run] { result = run(); });
    };

    command("add", "Einstein sum u (+) v", {"u", "v"}, [&] { return point_binary(gb_add, args); });
    command("sub", "(-u) (+) v", {"u", "v"}, [&] { return point_binary(gb_sub, args); });
    command("gamma", "Lorentz factor of v", {"v"}, [&] { return scalar_unary(gb_gamma, args); });
    command("gyr", "gyr[u,v]w", {"u", "v", "w"}, [&] {
        const auto u = vector_arg(args[0], "u"), v = vector_arg(args[1], "v"), w = vector_arg(args[2], "w");
        std::vector<double> out(u.size());
        ok(gb_gyr(view(u), view(v), view(w), out.data()));
        return vector_json(out);
    });
    command("gyr-matrix", "Orthogonal matrix of gyr[u,v]", {"u", "v"}, [&] {
        const auto u = vector_arg(args[0], "u"), v = vector_arg(args[1], "v");
        std::vector<double> out(u.size() * u.size());
        ok(gb_gyr_matrix(view(u), view(v), out.data()));
        return matrix_json(out, u.size(), u.size());
    });
    command("rapidity", "artanh |v|", {"v"}, [&] { return scalar_unary(gb_rapidity, args); });
    command("dist", "Rapidity (Cayley-Klein) distance", {"u", "v"}, [&] { return scalar_binary(gb_dist, args); });
    command("gyrometric", "|(-u) (+) v|", {"u", "v"}, [&] { return scalar_binary(gb_gyrometric, args); });
    command("dist-cosh", "Distance by the arccosh formula (oracle)", {"u", "v"},
            [&] { return scalar_binary(gb_dist_oracle_cosh, args); });
    command("dist-crossratio", "Distance by the chord cross-ratio (oracle)", {"u", "v"},
            [&] { return scalar_binary(gb_dist_oracle_crossratio, args); });
    command("boost", "Lorentz boost matrix of v", {"v"}, [&] {
        const auto v = vector_arg(args[0], "v");
        const std::size_t m = v.size() + 1;
        std::vector<double> out(m * m);
        ok(gb_boost(view(v), out.data()));
        return matrix_json(out, m, m);
    });
    command("boost-residual", "max |L(u)L(v) - L(u (+) v) Gyr[u,v]|", {"u", "v"},
            [&] { return scalar_binary(gb_boost_compose_residual, args); });
    command("thomas", "Thomas rotation of the boost pair (u, v)", {"u", "v"}, [&] {
        const auto u = vector_arg(args[0], "u"), v = vector_arg(args[1], "v");
        std::vector<double> out(u.size() * u.size());
        double angle = 0.0;
        int has_angle = 0;
        ok(gb_thomas_rotation(view(u), view(v), out.data(), &angle, &has_angle));
        Json j;
        j["rotation"] = matrix_json(out, u.size(), u.size());
        if (has_angle) j["angle"] = tidy(angle);
        return j;
    });
    command("apply", "Apply isometry f to point w", {"f", "w"}, [&] {
        const IsometryPtr f = isometry_arg(args[0], g);
        const auto w = vector_arg(args[1], "w");
        std::vector<double> out(w.size());
        ok(gb_isometry_apply(f.get(), view(w), out.data()));
        return vector_json(out);
    });
    command("compose", "f o g in canonical form", {"f", "g"}, [&] {
        const IsometryPtr f = isometry_arg(args[0], g), h = isometry_arg(args[1], g);
        gb_isometry* out = nullptr;
        ok(gb_isometry_compose(f.get(), h.get(), &out));
        return isometry_json(own(out).get());
    });
    command("invert", "Inverse isometry", {"f"}, [&] {
        const IsometryPtr f = isometry_arg(args[0], g);
        gb_isometry* out = nullptr;
        ok(gb_isometry_invert(f.get(), &out));
        return isometry_json(own(out).get());
    });
    command("decompose", "Recover (u, tau) from [input, output] probe pairs", {"probes"},
            [&] { return decompose_probes(args[0], g); });
    command("reflect", "Point reflection about v", {"v"}, [&] {
        const auto v = vector_arg(args[0], "v");
        gb_isometry* out = nullptr;
        ok(gb_isometry_reflection(view(v), &out));
        return isometry_json(own(out).get());
    });
    command("transport", "Isometry L_v o L_{-u} taking u to v", {"u", "v"}, [&] {
        const auto u = vector_arg(args[0], "u"), v = vector_arg(args[1], "v");
        gb_isometry* out = nullptr;
        ok(gb_isometry_transport(view(u), view(v), &out));
        return isometry_json(own(out).get());
    });

    std::string suite;
    std::size_t dim = 3;
    std::uint64_t trials = 1000;
    CLI::App* check = app.add_subcommand("check", "Run a randomized identity suite");
    check->add_option("suite", suite,
                      "gyrogroup-axioms | theorem1 | theorem2 | metric-axioms | oracles | "
                      "isometry-group | eq5-eq6 | boosts | all")
        ->required();
    check->add_option("-n,--dim", dim, "Dimension (>= 2)")->capture_default_str();
    check->add_option("--trials", trials, "Random instances per suite (>= 1)")->capture_default_str();
    check->callback([&] {
        if (dim < 2) malformed("check: dimension must be >= 2");
        if (trials < 1) malformed("check: trials must be >= 1");
        gb_check_report r{};
        ok(gb_check_run(suite.c_str(), dim, trials, g.rmax, g.seed, g.tol, &r));
        result = Json::object();
        result["suite"] = r.suite;
        result["trials"] = r.trials;
        result["dimension"] = r.dimension;
        result["max_residual"] = r.max_residual;
        result["violations"] = r.violations;
        result["passed"] = r.passed != 0;
        result["seed"] = r.seed;
        status = r.passed ? kOk : kCheckFailed;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kMalformed;
    } catch (const CliError& e) {
        std::cerr << "gyroball: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "gyroball: " << e.what() << '\n';
        return kInternal;
    }

    std::cout << result.dump() << '\n';
    return status;
}
