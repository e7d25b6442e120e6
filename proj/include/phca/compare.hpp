#pragma once

// Ranking comparison diagnostics: Spearman correlation, rank-shift
// statistics, and distribution summaries (mean / median / skewness).

#include <optional>
#include <vector>

#include "phca/model.hpp"

namespace phca {

// Spearman rho of two paired rank vectors: the Pearson correlation of the
// ranks (tie-safe; matches 1 - 6*sum(d^2)/(n(n^2-1)) on tie-free vectors).
double spearman_rho(const std::vector<double>& ranks_a, const std::vector<double>& ranks_b);

// Shift statistics between two rankings of the same units. avg_shift
// averages |delta rank| over every unit, shifters and non-shifters alike;
// pass shifters_only = true to denominate by shifting units instead.
ComparisonReport shift_stats(const std::vector<int>& ranks_a, const std::vector<int>& ranks_b,
                             const std::vector<double>& percentiles_a,
                             const std::vector<double>& percentiles_b,
                             bool shifters_only = false);

struct DistributionStats {
    double mean = 0.0;
    double median = 0.0;
    std::optional<double> skewness;  // absent when n < 3 or variance is 0
};

// Adjusted Fisher-Pearson skewness: sqrt(n(n-1))/(n-2) * m3 / m2^(3/2).
// Throws TooFewValuesError for n < 3 and DegenerateDistributionError when
// the variance is zero.
double skewness(const std::vector<double>& values);

// Mean and median for n >= 1; skewness is filled in when defined.
DistributionStats distribution_stats(const std::vector<double>& values);

// Spearman rho between competition ranks by staff size and by score.
double size_performance_correlation(const std::vector<int>& staff_counts,
                                    const std::vector<double>& scores);

}  // namespace phca
