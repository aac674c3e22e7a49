#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace ssga::harness {

struct StatsSummary {
    double mean = 0.0;
    double std_dev = 0.0; ///< sample standard deviation (divisor N-1); 0 for N = 1
    std::uint64_t count = 0;
    std::optional<double> normalized_mean;
    std::optional<double> normalized_std;
    std::uint64_t capped_count = 0; ///< runs excluded from mean and std_dev

    /// False when capped runs were dropped, so the mean is biased low.
    bool comparable() const noexcept { return capped_count == 0 && count > 0; }
};

/// Two-pass mean and sample standard deviation of the given values.
/// An empty input yields NaN for both.
StatsSummary summarize(std::span<const double> values, std::uint64_t capped_count = 0);

/// normalized_mean = a.mean / b.mean, normalized_std = a.std_dev / b.mean.
StatsSummary normalize(const StatsSummary& a, const StatsSummary& b);

struct WelchResult {
    double t = 0.0;
    double df = 0.0;
    double p_less = 1.0;      ///< one-sided p-value for mean_a < mean_b
    double p_two_sided = 1.0;
};

/// Welch's unequal-variance t-test. Both samples need count >= 2.
WelchResult welch_t_test(const StatsSummary& a, const StatsSummary& b);

/// Upper tail Pr(X >= statistic) for X ~ chi^2(df).
double chi_squared_upper_tail(double statistic, double df);

} // namespace ssga::harness
