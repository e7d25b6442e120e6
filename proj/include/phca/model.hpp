#pragma once

// Core domain types shared by every stage of the assessment pipeline.
// All types are immutable in practice: validate() is called on construction
// paths (ingest, factories) and instances are never mutated afterwards.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "phca/errors.hpp"

namespace phca {

enum class BylineConvention { Alphabetical, PositionWeighted };
enum class CostMode { Salary, YearsOnly };

std::string to_string(BylineConvention c);
std::string to_string(CostMode m);
BylineConvention byline_convention_from_string(const std::string& s);
CostMode cost_mode_from_string(const std::string& s);

// One slot of a publication byline. An absent researcher_id marks an
// external or unmatched author; their credit share belongs to no unit.
struct AuthorSlot {
    int position = 0;  // 1-based
    std::optional<std::string> university_id;
    std::optional<std::string> researcher_id;

    bool operator==(const AuthorSlot&) const = default;
};

struct PublicationRecord {
    std::string pub_id;
    int year = 0;
    std::string doc_type;
    long long citations = 0;
    std::vector<std::string> subject_categories;
    std::vector<AuthorSlot> byline;  // ordered, positions 1..n

    void validate() const;
    bool operator==(const PublicationRecord&) const = default;
};

struct Researcher {
    std::string researcher_id;
    std::string university_id;
    std::string sds_code;
    std::map<int, std::string> employment;  // year -> academic rank

    void validate() const;
    bool operator==(const Researcher&) const = default;
};

struct FieldTaxonomy {
    std::map<std::string, std::string> sds_to_uda;
    std::map<std::string, BylineConvention> byline_convention;

    const std::string& uda_of(const std::string& sds) const;
    BylineConvention convention_of(const std::string& sds) const;

    // Every SDS used by the roster must carry both a UDA and a convention.
    void validate_against(const std::vector<Researcher>& roster) const;
    bool operator==(const FieldTaxonomy&) const = default;
};

struct SalarySchedule {
    std::map<std::string, double> salary_by_rank;  // all > 0

    void validate() const;
    double salary_of(const std::string& rank) const;  // MissingSalaryError
    bool operator==(const SalarySchedule&) const = default;
};

struct YearWindow {
    int first = 0;
    int last = 0;  // inclusive

    bool contains(int year) const { return year >= first && year <= last; }
    int length() const { return last - first + 1; }
    bool operator==(const YearWindow&) const = default;
};

struct AssessmentConfig {
    YearWindow window{2008, 2012};
    double hca_top_fraction = 0.10;
    double multiplier = 100.0;
    CostMode cost_mode = CostMode::Salary;
    int min_staff_sds = 2;
    int min_staff_uda = 10;
    int min_staff_overall = 30;
    std::set<std::string> doc_type_whitelist;  // empty = admit all types
    double sds_coverage_min = 0.50;

    void validate() const;
    bool operator==(const AssessmentConfig&) const = default;
};

// Scope of a scored unit: one SDS, one UDA, or the whole institution.
struct UnitScope {
    enum class Level { Sds, Uda, Overall };
    Level level = Level::Sds;
    std::string code;  // empty for Overall

    bool operator==(const UnitScope&) const = default;
    auto operator<=>(const UnitScope&) const = default;
};

std::string to_string(UnitScope::Level level);

// One row of a league table (Tables 2, 4, 6 shape).
struct ScoreRow {
    std::string university_id;
    UnitScope scope;
    int staff_count = 0;
    double cost_w = 0.0;
    double score = 0.0;
    int rank = 0;
    int rank_percentile = 0;

    bool operator==(const ScoreRow&) const = default;
};

// Pairwise ranking comparison between two cost modes.
struct ComparisonReport {
    int n_units = 0;
    double spearman_rho = 0.0;
    double pct_shifting = 0.0;          // percent of units changing rank
    double avg_shift = 0.0;             // mean |delta rank| over all units
    int max_shift = 0;
    double avg_percentile_shift = 0.0;
    double max_percentile_shift = 0.0;

    void validate() const;
    bool operator==(const ComparisonReport&) const = default;
};

// JSON round-trip for every core type.
void to_json(nlohmann::json& j, const AuthorSlot& v);
void from_json(const nlohmann::json& j, AuthorSlot& v);
void to_json(nlohmann::json& j, const PublicationRecord& v);
void from_json(const nlohmann::json& j, PublicationRecord& v);
void to_json(nlohmann::json& j, const Researcher& v);
void from_json(const nlohmann::json& j, Researcher& v);
void to_json(nlohmann::json& j, const FieldTaxonomy& v);
void from_json(const nlohmann::json& j, FieldTaxonomy& v);
void to_json(nlohmann::json& j, const SalarySchedule& v);
void from_json(const nlohmann::json& j, SalarySchedule& v);
void to_json(nlohmann::json& j, const YearWindow& v);
void from_json(const nlohmann::json& j, YearWindow& v);
void to_json(nlohmann::json& j, const AssessmentConfig& v);
void from_json(const nlohmann::json& j, AssessmentConfig& v);
void to_json(nlohmann::json& j, const UnitScope& v);
void from_json(const nlohmann::json& j, UnitScope& v);
void to_json(nlohmann::json& j, const ScoreRow& v);
void from_json(const nlohmann::json& j, ScoreRow& v);
void to_json(nlohmann::json& j, const ComparisonReport& v);
void from_json(const nlohmann::json& j, ComparisonReport& v);

}  // namespace phca
