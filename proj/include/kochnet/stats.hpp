#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace kochnet {

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

/// Quantile of the standard normal distribution (Wichura's AS 241, PPND16).
double normal_quantile(double p);

/// Wilson score interval for a binomial proportion at the given two-sided
/// confidence level.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence = 0.95);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
    double intercept_se = 0.0;
    std::size_t count = 0;
};

/// Ordinary least squares y = intercept + slope * x with classical standard
/// errors (requires count >= 3 and non-degenerate x).
LinearFit ols_fit(std::span<const double> x, std::span<const double> y);

}  // namespace kochnet
