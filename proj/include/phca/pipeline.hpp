#pragma once

// End-to-end assessment: corpus -> coverage filter -> HCA detection ->
// credit/cost -> SDS scores -> national averages -> UDA and overall tables.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "phca/hca.hpp"
#include "phca/ingest.hpp"
#include "phca/model.hpp"
#include "phca/ranking.hpp"

namespace phca {

struct AssessmentResult {
    AssessmentConfig config;
    std::set<std::string> assessed_sds;
    HcaSet hcas;
    std::map<std::string, std::vector<ScoreRow>> sds_tables;  // SDS -> league table
    std::map<std::string, std::vector<ScoreRow>> uda_tables;  // UDA -> league table
    std::vector<ScoreRow> overall_table;
    std::vector<ValidationIssue> warnings;
};

// Deterministic: identical inputs produce identical results regardless of
// input file row order.
AssessmentResult run_assessment(const Corpus& corpus, const AssessmentConfig& config,
                                const std::vector<ValidationIssue>& load_warnings = {});

AssessmentResult run_assessment(const CorpusPaths& paths, const AssessmentConfig& config);

// One profile line: the university's standing in one scope.
struct ProfileEntry {
    UnitScope scope;
    int staff_count = 0;
    double score = 0.0;
    int rank = 0;
    int of_n = 0;  // population of the scope's league table
    int rank_percentile = 0;
};

// Every SDS, UDA and overall standing of one university, in scope order.
std::vector<ProfileEntry> university_profile(const AssessmentResult& result,
                                             const std::string& university_id);

struct ScopeComparison {
    std::string scope_label;  // UDA code or "Total"
    ComparisonReport report;
};

// The with/without-salary experiment: reruns the assessment in YearsOnly
// mode and compares the per-UDA and overall rankings pairwise (only
// universities eligible under both modes are paired).
std::vector<ScopeComparison> compare_cost_modes(const Corpus& corpus,
                                                const AssessmentConfig& config,
                                                bool shifters_only = false);

}  // namespace phca
