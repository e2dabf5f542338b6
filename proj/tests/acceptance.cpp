// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gyroball/check.hpp"

using namespace gyroball;

namespace {

struct Outcome {
    bool ok = true;
    double worst = 0.0;
    std::uint64_t violations = 0;
    std::uint64_t evaluations = 0;
};

/// Runs suite in each dimension and checks the selected properties against
/// per-property budgets (default: config.tol). An empty selection means all.
Outcome run(const std::string& suite, std::vector<Eigen::Index> dims, std::uint64_t trials, double rmax,
            double tol, const std::vector<std::string>& only = {},
            const std::map<std::string, double>& budgets = {}) {
    Outcome o;
    for (Eigen::Index n : dims) {
        CheckConfig c;
        c.suite = suite;
        c.dim = n;
        c.trials = trials;
        c.rmax = rmax;
        c.seed = 20261017;
        c.tol = tol;
        for (const SuiteResult& s : run_suites(c)) {
            for (const PropertyResult& p : s.properties) {
                const bool selected =
                    only.empty() || std::find(only.begin(), only.end(), p.name) != only.end() ||
                    p.name == "no-errors";
                if (!selected) continue;
                const auto b = budgets.find(p.name);
                const double budget = b == budgets.end() ? tol : b->second;
                const bool fine = p.max_residual <= budget && p.violations == 0;
                if (!fine)
                    std::cerr << "  " << s.suite << "/" << p.name << " n=" << n
                              << " max_residual=" << p.max_residual << " violations=" << p.violations << "\n";
                o.ok = o.ok && fine;
                o.worst = std::max(o.worst, p.max_residual);
                o.violations += p.violations;
                o.evaluations += p.evaluations;
            }
        }
    }
    return o;
}

Outcome merge(Outcome a, const Outcome& b) {
    a.ok = a.ok && b.ok;
    a.worst = std::max(a.worst, b.worst);
    a.violations += b.violations;
    a.evaluations += b.evaluations;
    return a;
}

std::string shell(const std::string& cmd, int& code) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        code = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        std::cerr << "  exception: " << e.what() << "\n";
        o.ok = false;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << ": max_residual=" << o.worst
         << " violations=" << o.violations << " evaluations=" << o.evaluations << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
}

}  // namespace

int main() {
    const std::vector<Eigen::Index> dims{2, 3, 5};

    report(1, "gyrogroup axioms, n in {2,3,5}, 1e4 triples, rmax 0.95", [&] {
        return run("gyrogroup-axioms", dims, 10000, 0.95, 1e-9);
    });

    report(2, "rapidity and norm properties, 1e4 samples, subadditivity slack 1e-12", [&] {
        return run("theorem1", {3}, 10000, 0.95, 1e-9);
    });

    report(3, "cancellation, negation, three-point, even, inversive symmetry, 1e4 samples", [&] {
        return run("theorem2", {3}, 10000, 0.95, 1e-9);
    });

    report(4, "metric axioms for both distances, triangle slack 1e-12, oracles 1e-9 / 1e-8", [&] {
        return merge(run("metric-axioms", {3}, 10000, 0.95, 1e-9),
                     run("oracles", {3}, 10000, 0.95, 1e-9, {}, {{"crossratio-oracle", 1e-8}}));
    });

    report(5, "isometry group and composition laws, 1e3 isometries per dimension", [&] {
        return merge(run("isometry-group", dims, 1000, 0.95, 1e-9,
                         {"action-equivalence", "associativity", "identity-left", "identity-right",
                          "inverse-left", "inverse-right", "isometry-invariance", "translation-is-isometry",
                          "orthogonal-is-isometry", "gyration-is-isometry", "decompose-roundtrip",
                          "canonical-uniqueness"}),
                     run("eq5-eq6", dims, 1000, 0.95, 1e-9));
    });

    report(6, "transport endpoint, reflection involution, fixed centre and unique fixed point, 1e3 samples",
           [&] {
               return run("isometry-group", dims, 1000, 0.95, 1e-9,
                          {"transport-endpoint", "reflection-involution", "reflection-fixes-center",
                           "reflection-unique-fixed-point"});
           });

    report(7, "boost orthogonality and composition law, n in {2,3}, 1e3 pairs, collinear Thomas = I", [&] {
        return run("boosts", {2, 3}, 1000, 0.95, 1e-9);
    });

    report(8, "every suite at rmax 0.999 with tolerance 1e-6, n in {2,3,5}", [&] {
        return run("all", dims, 1000, 0.999, 1e-6);
    });

    report(9, "two CLI check runs with equal flags are byte-identical", [&] {
        const std::string cmd = std::string("'") + GYROBALL_CLI + "' --seed 7 check all -n 3 --trials 1000";
        int c1 = 0, c2 = 0;
        const std::string a = shell(cmd, c1);
        const std::string b = shell(cmd, c2);
        Outcome o;
        o.ok = c1 == 0 && c2 == 0 && !a.empty() && a == b;
        o.evaluations = 2;
        if (!o.ok) std::cerr << "  exit codes " << c1 << " " << c2 << "\n  " << a << "  " << b;
        return o;
    });

    std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << std::endl;
    return failures == 0 ? 0 : 1;
}
