#pragma once

// Eligibility filtering, standard competition ranking of scores, and the
// rank-percentile column of the profile tables.

#include <vector>

#include "phca/model.hpp"

namespace phca {

// Precursor of a league-table row: a scored unit before ranks are attached.
struct ScoredUnit {
    std::string university_id;
    int staff_count = 0;
    double cost_w = 0.0;
    double score = 0.0;
};

// Keeps units whose head-count meets the scope's configured minimum.
std::vector<ScoredUnit> filter_eligible(const std::vector<ScoredUnit>& rows,
                                        UnitScope::Level level, const AssessmentConfig& config);

// Standard competition ("1224") ranking by descending score: tied scores
// share the minimal rank; the next distinct score ranks 1 + the number of
// strictly greater scores. Output is aligned with the input order.
std::vector<int> competition_rank(const std::vector<double>& scores);

// 100 * (n - rank) / (n - 1), rounded half away from zero; 100 when n = 1.
int rank_percentile(int rank, int n);

// Eligible rows sorted by descending score then ascending university id,
// with competition ranks and rank percentiles attached.
std::vector<ScoreRow> build_league_table(const std::vector<ScoredUnit>& units,
                                         const AssessmentConfig& config, const UnitScope& scope);

}  // namespace phca
