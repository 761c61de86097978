#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "kochnet/connectivity.hpp"
#include "kochnet/domain.hpp"
#include "kochnet/stats.hpp"

namespace kochnet {

struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepConfig {
    int family = 2;
    std::vector<double> thetas;
    std::vector<double> rhos;  // strictly ascending
    std::uint64_t trials = 100;
    std::uint64_t master_seed = 0x5EEDBA5Eu;
    double r0 = 1.0;
    int max_depth = kDefaultMaxDepth;
    double confidence = 0.95;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct SweepRow {
    int family = 2;
    double theta = 0.0;
    double rho = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    double mean_nodes = 0.0;
    double mean_isolated = 0.0;
    std::uint64_t depth_exhausted_trials = 0;
};

/// Monte Carlo estimate of the full-connection probability over the config
/// grid. Rows are emitted in config order (theta outer, rho inner) and are a
/// pure function of the config regardless of thread count.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

struct FitResult {
    double beta_hat = 0.0;
    double a_hat = 0.0;
    double beta_se = 0.0;
    double a_se = 0.0;
    std::size_t rows_used = 0;
    double rho_min = 0.0;
};

/// OLS of ln(-ln p_hat) against ln rho over rows with 0 < successes < trials
/// and rho >= rho_min. Throws InsufficientDataError with fewer than 3 usable
/// rows.
FitResult fit_stretched_exponential(std::span<const SweepRow> rows, double rho_min = 0.0);

struct ScalingPair {
    double rho = 0.0;       // the lower density of the pair
    double rho_scaled = 0.0;
    double lhs = 0.0;       // p_hat at rho_scaled
    double rhs = 0.0;       // p_hat(rho)^n
    Interval lhs_ci;
    Interval rhs_ci;
    bool ci_overlap = false;
};

/// Matches rows (rho, rho/r^2) within 1% and reports p_hat(rho/r^2) against
/// p_hat(rho)^n with propagated intervals. Throws InsufficientDataError when
/// no pair matches.
std::vector<ScalingPair> scaling_check(std::span<const SweepRow> rows,
                                       const FractalDomain& domain);

/// Coverage-to-gateway count ratio: scale_ratio^D.
double gateway_estimate(double scale_ratio, double D);

}  // namespace kochnet
