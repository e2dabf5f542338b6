#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace gyroball {

/// Parameters of a randomized identity check.
struct CheckConfig {
    std::string suite = "all";
    Eigen::Index dim = 3;
    std::uint64_t trials = 1000;
    double rmax = 0.95;
    std::uint64_t seed = 0;
    /// Absolute residual budget for every identity.
    double tol = 1e-9;
};

/// Worst case of one identity or inequality over all trials.
///
/// Identities contribute |lhs - rhs| (max-norm) to max_residual. Inequalities
/// contribute their overshoot max(0, lhs - rhs) and also count a violation
/// when the overshoot exceeds inequality_slack(tol). Qualitative conditions
/// (e.g. "rapidity is positive off the origin") only count violations.
struct PropertyResult {
    std::string name;
    double max_residual = 0.0;
    std::uint64_t violations = 0;
    std::uint64_t evaluations = 0;
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;
};

struct CheckReport {
    std::string suite;
    std::uint64_t trials = 0;
    Eigen::Index dimension = 0;
    double max_residual = 0.0;
    std::uint64_t violations = 0;
    bool passed = false;
    std::uint64_t seed = 0;
};

/// Slack allowed on inequalities before they count as violated: 1e-3 * tol
/// (1e-12 at the default tol of 1e-9).
double inequality_slack(double tol) noexcept;

/// Individual suites in execution order; "all" is not listed.
std::span<const std::string_view> suite_names() noexcept;
bool is_known_suite(std::string_view name) noexcept;

/// Runs one suite (or every suite for "all"). Trial k of a suite draws from
/// a stream seeded by (seed, suite, k), so results do not depend on order.
/// Throws InvalidArgument for an unknown suite or bad parameters.
std::vector<SuiteResult> run_suites(const CheckConfig& config);

/// passed <=> every property's max_residual <= tol and no violations.
CheckReport summarize(const CheckConfig& config, std::span<const SuiteResult> results);

CheckReport run_check(const CheckConfig& config);

}  // namespace gyroball
