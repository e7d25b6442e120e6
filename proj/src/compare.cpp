#include "phca/compare.hpp"

#include <algorithm>
#include <cmath>

#include "phca/ranking.hpp"

namespace phca {

double spearman_rho(const std::vector<double>& ranks_a, const std::vector<double>& ranks_b) {
    const std::size_t n = ranks_a.size();
    if (n != ranks_b.size())
        throw InvalidPairingError("rank vectors have different lengths");
    if (n < 2) throw InvalidPairingError("need at least 2 paired units");

    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_a += ranks_a[i];
        mean_b += ranks_b[i];
    }
    mean_a /= static_cast<double>(n);
    mean_b /= static_cast<double>(n);

    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = ranks_a[i] - mean_a;
        const double db = ranks_b[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0) {
        // A fully tied vector; correlation is undefined unless both sides agree.
        if (ranks_a == ranks_b) return 1.0;
        throw DegenerateDistributionError("rank vector has zero variance");
    }
    return cov / std::sqrt(var_a * var_b);
}

ComparisonReport shift_stats(const std::vector<int>& ranks_a, const std::vector<int>& ranks_b,
                             const std::vector<double>& percentiles_a,
                             const std::vector<double>& percentiles_b, bool shifters_only) {
    const std::size_t n = ranks_a.size();
    if (n != ranks_b.size() || n != percentiles_a.size() || n != percentiles_b.size())
        throw InvalidPairingError("comparison vectors have different lengths");
    if (n == 0) throw InvalidPairingError("no units to compare");

    int shifters = 0;
    long long rank_shift_sum = 0;
    int rank_shift_max = 0;
    double pct_shift_sum = 0.0;
    double pct_shift_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const int d = std::abs(ranks_a[i] - ranks_b[i]);
        if (d != 0) ++shifters;
        rank_shift_sum += d;
        rank_shift_max = std::max(rank_shift_max, d);
        const double dp = std::abs(percentiles_a[i] - percentiles_b[i]);
        pct_shift_sum += dp;
        pct_shift_max = std::max(pct_shift_max, dp);
    }

    const double denom = shifters_only ? std::max(shifters, 1) : static_cast<double>(n);
    ComparisonReport report;
    report.n_units = static_cast<int>(n);
    report.pct_shifting = 100.0 * static_cast<double>(shifters) / static_cast<double>(n);
    report.avg_shift = static_cast<double>(rank_shift_sum) / denom;
    report.max_shift = rank_shift_max;
    report.avg_percentile_shift = pct_shift_sum / denom;
    report.max_percentile_shift = pct_shift_max;
    return report;
}

double skewness(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 3) throw TooFewValuesError("skewness needs at least 3 values");

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);

    double m2 = 0.0, m3 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    if (m2 == 0.0)
        throw DegenerateDistributionError("skewness undefined for zero-variance values");

    const double nd = static_cast<double>(n);
    return std::sqrt(nd * (nd - 1.0)) / (nd - 2.0) * m3 / std::pow(m2, 1.5);
}

DistributionStats distribution_stats(const std::vector<double>& values) {
    if (values.empty()) throw TooFewValuesError("no values");

    DistributionStats stats;
    double sum = 0.0;
    for (double v : values) sum += v;
    stats.mean = sum / static_cast<double>(values.size());

    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    stats.median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);

    if (values.size() >= 3) {
        try {
            stats.skewness = skewness(values);
        } catch (const DegenerateDistributionError&) {
        }
    }
    return stats;
}

double size_performance_correlation(const std::vector<int>& staff_counts,
                                    const std::vector<double>& scores) {
    if (staff_counts.size() != scores.size())
        throw InvalidPairingError("staff and score vectors have different lengths");
    std::vector<double> staff_as_scores(staff_counts.begin(), staff_counts.end());
    const auto ranks_by_size = competition_rank(staff_as_scores);
    const auto ranks_by_score = competition_rank(scores);
    return spearman_rho(std::vector<double>(ranks_by_size.begin(), ranks_by_size.end()),
                        std::vector<double>(ranks_by_score.begin(), ranks_by_score.end()));
}

}  // namespace phca
