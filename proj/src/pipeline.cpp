#include "phca/pipeline.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "phca/compare.hpp"
#include "phca/cost.hpp"
#include "phca/credit.hpp"
#include "phca/scoring.hpp"

namespace phca {

namespace {

struct UnitKey {
    std::string university;
    std::string sds;
    auto operator<=>(const UnitKey&) const = default;
};

}  // namespace

AssessmentResult run_assessment(const Corpus& corpus, const AssessmentConfig& config,
                                const std::vector<ValidationIssue>& load_warnings) {
    config.validate();
    AssessmentResult result;
    result.config = config;
    result.warnings = load_warnings;

    result.assessed_sds = filter_sds_coverage(corpus.roster, corpus.publications, config,
                                              &result.warnings);

    std::vector<CohortKey> singletons;
    result.hcas = detect_hcas(corpus.publications, config, &singletons);
    for (const auto& key : singletons)
        result.warnings.push_back(ValidationIssue{
            "singleton_cohort", std::to_string(key.year) + "/" + key.category});

    // Staff and cost per (university, assessed SDS).
    std::map<UnitKey, std::vector<Researcher>> staff_by_unit;
    for (const auto& r : corpus.roster)
        if (result.assessed_sds.count(r.sds_code))
            staff_by_unit[UnitKey{r.university_id, r.sds_code}].push_back(r);

    struct UnitData {
        int staff = 0;
        double cost = 0.0;
        double f_sum = 0.0;  // fractional HCA contribution
    };
    std::map<UnitKey, UnitData> units;
    for (auto& [key, staff] : staff_by_unit) {
        // Canonical summation order, so the result does not depend on the
        // order roster rows arrived in.
        std::sort(staff.begin(), staff.end(), [](const Researcher& a, const Researcher& b) {
            return a.researcher_id < b.researcher_id;
        });
        UnitData data;
        data.staff = staff_headcount(staff, config.window);
        if (data.staff == 0) continue;  // nobody active inside the window
        data.cost = unit_cost(staff, config.window, config.cost_mode, corpus.salaries);
        units.emplace(key, data);
    }

    // One pass over the HCAs accumulates every unit's fractional sum. The
    // weight vector depends on the target SDS's convention, so each byline
    // is expanded at most once per convention.
    std::unordered_map<std::string, const Researcher*> roster_index;
    for (const auto& r : corpus.roster) roster_index.emplace(r.researcher_id, &r);
    std::vector<const PublicationRecord*> hca_pubs;
    for (const auto& pub : corpus.publications)
        if (result.hcas.is_hca(pub.pub_id)) hca_pubs.push_back(&pub);
    std::sort(hca_pubs.begin(), hca_pubs.end(),
              [](const PublicationRecord* a, const PublicationRecord* b) {
                  return a->pub_id < b->pub_id;
              });
    for (const auto* pub_ptr : hca_pubs) {
        const auto& pub = *pub_ptr;
        const bool same_ends = byline_ends_same_university(pub);
        std::optional<WeightVector> alphabetical, positional;
        for (std::size_t i = 0; i < pub.byline.size(); ++i) {
            const auto& slot = pub.byline[i];
            if (!slot.researcher_id) continue;
            auto res = roster_index.find(*slot.researcher_id);
            if (res == roster_index.end()) continue;
            const Researcher& r = *res->second;
            auto unit = units.find(UnitKey{r.university_id, r.sds_code});
            if (unit == units.end()) continue;
            const auto convention = corpus.taxonomy.convention_of(r.sds_code);
            auto& weights =
                convention == BylineConvention::Alphabetical ? alphabetical : positional;
            if (!weights)
                weights = fractional_weights(pub.byline.size(), convention, same_ends);
            unit->second.f_sum += (*weights)[i];
        }
    }

    // SDS scores and national averages.
    std::map<UnitKey, double> sds_scores;
    std::map<std::string, std::vector<SdsUniversityRow>> national_rows;
    for (const auto& [key, data] : units) {
        const double score = config.multiplier * data.f_sum / data.cost;
        sds_scores.emplace(key, score);
        national_rows[key.sds].push_back(SdsUniversityRow{data.cost, score});
    }
    std::map<std::string, double> national_avgs;
    for (const auto& [sds, rows] : national_rows) {
        try {
            national_avgs.emplace(sds, national_sds_average(rows));
        } catch (const NoHcaInSdsError&) {
            result.warnings.push_back(ValidationIssue{"sds_without_national_hca", sds});
        }
    }

    // SDS league tables.
    std::map<std::string, std::vector<ScoredUnit>> per_sds;
    for (const auto& [key, data] : units)
        per_sds[key.sds].push_back(
            ScoredUnit{key.university, data.staff, data.cost, sds_scores.at(key)});
    for (const auto& [sds, rows] : per_sds)
        result.sds_tables[sds] =
            build_league_table(rows, config, UnitScope{UnitScope::Level::Sds, sds});

    // UDA and overall aggregates per university.
    struct Aggregate {
        int staff = 0;
        std::map<std::string, double> scores;
        std::map<std::string, double> costs;
    };
    std::map<std::pair<std::string, std::string>, Aggregate> per_uda;  // (univ, uda)
    std::map<std::string, Aggregate> per_university;
    for (const auto& [key, data] : units) {
        const std::string& uda = corpus.taxonomy.uda_of(key.sds);
        for (Aggregate* agg :
             {&per_uda[{key.university, uda}], &per_university[key.university]}) {
            agg->staff += data.staff;
            agg->scores.emplace(key.sds, sds_scores.at(key));
            agg->costs.emplace(key.sds, data.cost);
        }
    }

    std::map<std::string, std::vector<ScoredUnit>> uda_rows;
    for (const auto& [key, agg] : per_uda) {
        double cost = 0.0;
        for (const auto& [sds, w] : agg.costs) cost += w;
        uda_rows[key.second].push_back(ScoredUnit{
            key.first, agg.staff, cost, score_uda(agg.scores, agg.costs, national_avgs)});
    }
    for (const auto& [uda, rows] : uda_rows)
        result.uda_tables[uda] =
            build_league_table(rows, config, UnitScope{UnitScope::Level::Uda, uda});

    std::vector<ScoredUnit> overall_rows;
    for (const auto& [university, agg] : per_university) {
        double cost = 0.0;
        for (const auto& [sds, w] : agg.costs) cost += w;
        overall_rows.push_back(ScoredUnit{
            university, agg.staff, cost, score_overall(agg.scores, agg.costs, national_avgs)});
    }
    result.overall_table =
        build_league_table(overall_rows, config, UnitScope{UnitScope::Level::Overall, ""});

    return result;
}

AssessmentResult run_assessment(const CorpusPaths& paths, const AssessmentConfig& config) {
    auto loaded = load_corpus(paths, config);
    return run_assessment(loaded.corpus, config, loaded.warnings);
}

std::vector<ProfileEntry> university_profile(const AssessmentResult& result,
                                             const std::string& university_id) {
    std::vector<ProfileEntry> profile;
    auto scan = [&](const std::vector<ScoreRow>& table) {
        for (const auto& row : table)
            if (row.university_id == university_id)
                profile.push_back(ProfileEntry{row.scope, row.staff_count, row.score, row.rank,
                                               static_cast<int>(table.size()),
                                               row.rank_percentile});
    };
    for (const auto& [sds, table] : result.sds_tables) scan(table);
    for (const auto& [uda, table] : result.uda_tables) scan(table);
    scan(result.overall_table);
    return profile;
}

std::vector<ScopeComparison> compare_cost_modes(const Corpus& corpus,
                                                const AssessmentConfig& config,
                                                bool shifters_only) {
    AssessmentConfig with_salary = config;
    with_salary.cost_mode = CostMode::Salary;
    AssessmentConfig years_only = config;
    years_only.cost_mode = CostMode::YearsOnly;

    const auto base = run_assessment(corpus, with_salary);
    const auto alt = run_assessment(corpus, years_only);

    auto compare_tables = [&](const std::vector<ScoreRow>& a, const std::vector<ScoreRow>& b,
                              const std::string& label) -> std::optional<ScopeComparison> {
        std::map<std::string, const ScoreRow*> b_by_university;
        for (const auto& row : b) b_by_university.emplace(row.university_id, &row);

        std::vector<int> ranks_a, ranks_b;
        std::vector<double> pct_a, pct_b;
        for (const auto& row : a) {
            auto it = b_by_university.find(row.university_id);
            if (it == b_by_university.end()) continue;
            ranks_a.push_back(row.rank);
            ranks_b.push_back(it->second->rank);
            pct_a.push_back(row.rank_percentile);
            pct_b.push_back(it->second->rank_percentile);
        }
        if (ranks_a.size() < 2) return std::nullopt;

        ScopeComparison comparison;
        comparison.scope_label = label;
        comparison.report = shift_stats(ranks_a, ranks_b, pct_a, pct_b, shifters_only);
        comparison.report.spearman_rho =
            spearman_rho(std::vector<double>(ranks_a.begin(), ranks_a.end()),
                         std::vector<double>(ranks_b.begin(), ranks_b.end()));
        return comparison;
    };

    std::vector<ScopeComparison> comparisons;
    for (const auto& [uda, table] : base.uda_tables) {
        auto other = alt.uda_tables.find(uda);
        if (other == alt.uda_tables.end()) continue;
        if (auto c = compare_tables(table, other->second, uda)) comparisons.push_back(*c);
    }
    if (auto c = compare_tables(base.overall_table, alt.overall_table, "Total"))
        comparisons.push_back(*c);
    return comparisons;
}

}  // namespace phca
