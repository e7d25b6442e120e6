#include "phca/model.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace phca {

std::string to_string(BylineConvention c) {
    return c == BylineConvention::Alphabetical ? "alphabetical" : "position_weighted";
}

std::string to_string(CostMode m) {
    return m == CostMode::Salary ? "salary" : "years_only";
}

BylineConvention byline_convention_from_string(const std::string& s) {
    if (s == "alphabetical") return BylineConvention::Alphabetical;
    if (s == "position_weighted") return BylineConvention::PositionWeighted;
    throw ValidationError("unknown byline convention: " + s);
}

CostMode cost_mode_from_string(const std::string& s) {
    if (s == "salary") return CostMode::Salary;
    if (s == "years_only") return CostMode::YearsOnly;
    throw ValidationError("unknown cost mode: " + s);
}

std::string to_string(UnitScope::Level level) {
    switch (level) {
        case UnitScope::Level::Sds: return "sds";
        case UnitScope::Level::Uda: return "uda";
        case UnitScope::Level::Overall: return "overall";
    }
    throw ValidationError("bad scope level");
}

static UnitScope::Level scope_level_from_string(const std::string& s) {
    if (s == "sds") return UnitScope::Level::Sds;
    if (s == "uda") return UnitScope::Level::Uda;
    if (s == "overall") return UnitScope::Level::Overall;
    throw ValidationError("unknown scope level: " + s);
}

void PublicationRecord::validate() const {
    if (pub_id.empty()) throw ValidationError("publication with empty pub_id");
    if (citations < 0)
        throw InvalidCitationsError("publication " + pub_id + ": negative citation count");
    if (subject_categories.empty())
        throw InvalidCategoryError("publication " + pub_id + ": no subject categories");
    std::set<std::string> cats(subject_categories.begin(), subject_categories.end());
    if (cats.size() != subject_categories.size())
        throw InvalidCategoryError("publication " + pub_id + ": duplicate subject category");
    if (byline.empty())
        throw InvalidBylineError("publication " + pub_id + ": empty byline");
    // Positions must be exactly 1..n in order.
    for (std::size_t i = 0; i < byline.size(); ++i) {
        if (byline[i].position != static_cast<int>(i) + 1)
            throw InvalidBylineError("publication " + pub_id + ": byline positions not 1.." +
                                     std::to_string(byline.size()));
        if (byline[i].researcher_id && !byline[i].university_id)
            throw ValidationError("publication " + pub_id + ": author " +
                                  *byline[i].researcher_id + " has no university");
    }
}

void Researcher::validate() const {
    if (researcher_id.empty()) throw ValidationError("researcher with empty id");
    if (university_id.empty())
        throw ValidationError("researcher " + researcher_id + ": empty university");
    if (sds_code.empty())
        throw ValidationError("researcher " + researcher_id + ": empty SDS");
    if (employment.empty())
        throw EmptyEmploymentError("researcher " + researcher_id + ": no employment years");
}

const std::string& FieldTaxonomy::uda_of(const std::string& sds) const {
    auto it = sds_to_uda.find(sds);
    if (it == sds_to_uda.end()) throw ReferentialError("SDS not in taxonomy: " + sds);
    return it->second;
}

BylineConvention FieldTaxonomy::convention_of(const std::string& sds) const {
    auto it = byline_convention.find(sds);
    if (it == byline_convention.end())
        throw ReferentialError("SDS has no byline convention: " + sds);
    return it->second;
}

void FieldTaxonomy::validate_against(const std::vector<Researcher>& roster) const {
    for (const auto& r : roster) {
        if (!sds_to_uda.count(r.sds_code))
            throw ReferentialError("researcher " + r.researcher_id + ": SDS " + r.sds_code +
                                   " missing from taxonomy");
        if (!byline_convention.count(r.sds_code))
            throw ReferentialError("SDS " + r.sds_code + " has no byline convention");
    }
}

void SalarySchedule::validate() const {
    for (const auto& [rank, salary] : salary_by_rank)
        if (salary <= 0.0)
            throw InvalidSalaryError("rank " + rank + ": non-positive salary");
}

double SalarySchedule::salary_of(const std::string& rank) const {
    auto it = salary_by_rank.find(rank);
    if (it == salary_by_rank.end()) throw MissingSalaryError("rank not priced: " + rank);
    return it->second;
}

void AssessmentConfig::validate() const {
    if (window.first > window.last) throw InvalidConfigError("empty assessment window");
    if (hca_top_fraction <= 0.0 || hca_top_fraction >= 1.0)
        throw InvalidConfigError("hca_top_fraction must lie in (0,1)");
    if (multiplier <= 0.0) throw InvalidConfigError("multiplier must be positive");
    if (min_staff_sds < 0 || min_staff_uda < 0 || min_staff_overall < 0)
        throw InvalidConfigError("negative staff minimum");
    if (sds_coverage_min < 0.0 || sds_coverage_min > 1.0)
        throw InvalidConfigError("sds_coverage_min must lie in [0,1]");
}

void ComparisonReport::validate() const {
    if (avg_shift > max_shift)
        throw ValidationError("avg_shift exceeds max_shift");
    if (avg_percentile_shift > max_percentile_shift)
        throw ValidationError("avg_percentile_shift exceeds max_percentile_shift");
}

// --- JSON ---

void to_json(nlohmann::json& j, const AuthorSlot& v) {
    j = nlohmann::json{{"position", v.position}};
    if (v.university_id) j["university_id"] = *v.university_id;
    if (v.researcher_id) j["researcher_id"] = *v.researcher_id;
}

void from_json(const nlohmann::json& j, AuthorSlot& v) {
    v = AuthorSlot{};
    j.at("position").get_to(v.position);
    if (j.contains("university_id")) v.university_id = j.at("university_id").get<std::string>();
    if (j.contains("researcher_id")) v.researcher_id = j.at("researcher_id").get<std::string>();
}

void to_json(nlohmann::json& j, const PublicationRecord& v) {
    j = nlohmann::json{{"pub_id", v.pub_id},
                       {"year", v.year},
                       {"doc_type", v.doc_type},
                       {"citations", v.citations},
                       {"subject_categories", v.subject_categories},
                       {"byline", v.byline}};
}

void from_json(const nlohmann::json& j, PublicationRecord& v) {
    j.at("pub_id").get_to(v.pub_id);
    j.at("year").get_to(v.year);
    j.at("doc_type").get_to(v.doc_type);
    j.at("citations").get_to(v.citations);
    j.at("subject_categories").get_to(v.subject_categories);
    j.at("byline").get_to(v.byline);
    v.validate();
}

void to_json(nlohmann::json& j, const Researcher& v) {
    nlohmann::json emp = nlohmann::json::object();
    for (const auto& [year, rank] : v.employment) emp[std::to_string(year)] = rank;
    j = nlohmann::json{{"researcher_id", v.researcher_id},
                       {"university_id", v.university_id},
                       {"sds_code", v.sds_code},
                       {"employment", emp}};
}

void from_json(const nlohmann::json& j, Researcher& v) {
    j.at("researcher_id").get_to(v.researcher_id);
    j.at("university_id").get_to(v.university_id);
    j.at("sds_code").get_to(v.sds_code);
    v.employment.clear();
    for (const auto& [year, rank] : j.at("employment").items())
        v.employment[std::stoi(year)] = rank.get<std::string>();
    v.validate();
}

void to_json(nlohmann::json& j, const FieldTaxonomy& v) {
    nlohmann::json conv = nlohmann::json::object();
    for (const auto& [sds, c] : v.byline_convention) conv[sds] = to_string(c);
    j = nlohmann::json{{"sds_to_uda", v.sds_to_uda}, {"byline_convention", conv}};
}

void from_json(const nlohmann::json& j, FieldTaxonomy& v) {
    j.at("sds_to_uda").get_to(v.sds_to_uda);
    v.byline_convention.clear();
    for (const auto& [sds, c] : j.at("byline_convention").items())
        v.byline_convention[sds] = byline_convention_from_string(c.get<std::string>());
}

void to_json(nlohmann::json& j, const SalarySchedule& v) {
    j = nlohmann::json{{"salary_by_rank", v.salary_by_rank}};
}

void from_json(const nlohmann::json& j, SalarySchedule& v) {
    j.at("salary_by_rank").get_to(v.salary_by_rank);
    v.validate();
}

void to_json(nlohmann::json& j, const YearWindow& v) {
    j = nlohmann::json{{"first", v.first}, {"last", v.last}};
}

void from_json(const nlohmann::json& j, YearWindow& v) {
    j.at("first").get_to(v.first);
    j.at("last").get_to(v.last);
}

void to_json(nlohmann::json& j, const AssessmentConfig& v) {
    j = nlohmann::json{{"window", v.window},
                       {"hca_top_fraction", v.hca_top_fraction},
                       {"multiplier", v.multiplier},
                       {"cost_mode", to_string(v.cost_mode)},
                       {"min_staff_sds", v.min_staff_sds},
                       {"min_staff_uda", v.min_staff_uda},
                       {"min_staff_overall", v.min_staff_overall},
                       {"doc_type_whitelist", v.doc_type_whitelist},
                       {"sds_coverage_min", v.sds_coverage_min}};
}

void from_json(const nlohmann::json& j, AssessmentConfig& v) {
    j.at("window").get_to(v.window);
    j.at("hca_top_fraction").get_to(v.hca_top_fraction);
    j.at("multiplier").get_to(v.multiplier);
    v.cost_mode = cost_mode_from_string(j.at("cost_mode").get<std::string>());
    j.at("min_staff_sds").get_to(v.min_staff_sds);
    j.at("min_staff_uda").get_to(v.min_staff_uda);
    j.at("min_staff_overall").get_to(v.min_staff_overall);
    j.at("doc_type_whitelist").get_to(v.doc_type_whitelist);
    j.at("sds_coverage_min").get_to(v.sds_coverage_min);
    v.validate();
}

void to_json(nlohmann::json& j, const UnitScope& v) {
    j = nlohmann::json{{"level", to_string(v.level)}, {"code", v.code}};
}

void from_json(const nlohmann::json& j, UnitScope& v) {
    v.level = scope_level_from_string(j.at("level").get<std::string>());
    j.at("code").get_to(v.code);
}

void to_json(nlohmann::json& j, const ScoreRow& v) {
    j = nlohmann::json{{"university_id", v.university_id},
                       {"scope", v.scope},
                       {"staff_count", v.staff_count},
                       {"cost_w", v.cost_w},
                       {"score", v.score},
                       {"rank", v.rank},
                       {"rank_percentile", v.rank_percentile}};
}

void from_json(const nlohmann::json& j, ScoreRow& v) {
    j.at("university_id").get_to(v.university_id);
    j.at("scope").get_to(v.scope);
    j.at("staff_count").get_to(v.staff_count);
    j.at("cost_w").get_to(v.cost_w);
    j.at("score").get_to(v.score);
    j.at("rank").get_to(v.rank);
    j.at("rank_percentile").get_to(v.rank_percentile);
}

void to_json(nlohmann::json& j, const ComparisonReport& v) {
    j = nlohmann::json{{"n_units", v.n_units},
                       {"spearman_rho", v.spearman_rho},
                       {"pct_shifting", v.pct_shifting},
                       {"avg_shift", v.avg_shift},
                       {"max_shift", v.max_shift},
                       {"avg_percentile_shift", v.avg_percentile_shift},
                       {"max_percentile_shift", v.max_percentile_shift}};
}

void from_json(const nlohmann::json& j, ComparisonReport& v) {
    j.at("n_units").get_to(v.n_units);
    j.at("spearman_rho").get_to(v.spearman_rho);
    j.at("pct_shifting").get_to(v.pct_shifting);
    j.at("avg_shift").get_to(v.avg_shift);
    j.at("max_shift").get_to(v.max_shift);
    j.at("avg_percentile_shift").get_to(v.avg_percentile_shift);
    j.at("max_percentile_shift").get_to(v.max_percentile_shift);
    v.validate();
}

}  // namespace phca
