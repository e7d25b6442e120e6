#include "phca/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace phca {

std::vector<ScoredUnit> filter_eligible(const std::vector<ScoredUnit>& rows,
                                        UnitScope::Level level, const AssessmentConfig& config) {
    int minimum = 0;
    switch (level) {
        case UnitScope::Level::Sds: minimum = config.min_staff_sds; break;
        case UnitScope::Level::Uda: minimum = config.min_staff_uda; break;
        case UnitScope::Level::Overall: minimum = config.min_staff_overall; break;
    }
    std::vector<ScoredUnit> kept;
    for (const auto& row : rows)
        if (row.staff_count >= minimum) kept.push_back(row);
    return kept;
}

std::vector<int> competition_rank(const std::vector<double>& scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    std::vector<int> ranks(scores.size(), 0);
    int current = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || scores[order[i]] != scores[order[i - 1]])
            current = static_cast<int>(i) + 1;
        ranks[order[i]] = current;
    }
    return ranks;
}

int rank_percentile(int rank, int n) {
    if (n < 1 || rank < 1 || rank > n)
        throw InvalidRankError("rank " + std::to_string(rank) + " out of 1.." +
                               std::to_string(n));
    if (n == 1) return 100;
    double value = 100.0 * static_cast<double>(n - rank) / static_cast<double>(n - 1);
    return static_cast<int>(std::llround(value));  // half away from zero
}

std::vector<ScoreRow> build_league_table(const std::vector<ScoredUnit>& units,
                                         const AssessmentConfig& config, const UnitScope& scope) {
    auto eligible = filter_eligible(units, scope.level, config);
    std::sort(eligible.begin(), eligible.end(), [](const ScoredUnit& a, const ScoredUnit& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.university_id < b.university_id;
    });

    std::vector<double> scores;
    scores.reserve(eligible.size());
    for (const auto& u : eligible) scores.push_back(u.score);
    const auto ranks = competition_rank(scores);

    std::vector<ScoreRow> table;
    table.reserve(eligible.size());
    const int n = static_cast<int>(eligible.size());
    for (std::size_t i = 0; i < eligible.size(); ++i) {
        table.push_back(ScoreRow{eligible[i].university_id, scope, eligible[i].staff_count,
                                 eligible[i].cost_w, eligible[i].score, ranks[i],
                                 rank_percentile(ranks[i], n)});
    }
    return table;
}

}  // namespace phca
