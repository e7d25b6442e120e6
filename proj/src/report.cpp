#include "phca/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "phca/csv.hpp"

namespace phca {

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "csv") return ReportFormat::Csv;
    if (s == "json") return ReportFormat::Json;
    throw ValidationError("unknown report format: " + s);
}

std::string format_real(double value) {
    char buffer[64];
    // %.12g round-trips every value this pipeline produces and never
    // prints platform-dependent noise digits.
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

static std::string scope_label(const UnitScope& scope) {
    return scope.level == UnitScope::Level::Overall ? "Total" : scope.code;
}

void emit_league_table(std::ostream& out, const std::vector<ScoreRow>& table,
                       ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "unit,research_staff,p_hca,rank\n";
        for (const auto& row : table)
            out << csv::encode_row({row.university_id, std::to_string(row.staff_count),
                                    format_real(row.score), std::to_string(row.rank)});
        return;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table)
        rows.push_back({{"unit", row.university_id},
                        {"research_staff", row.staff_count},
                        {"p_hca", row.score},
                        {"rank", row.rank}});
    out << rows.dump(2) << "\n";
}

void emit_hca_set(std::ostream& out, const HcaSet& hcas, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "pub_id,avg_percentile,is_hca\n";
        for (const auto& [id, entry] : hcas.entries)
            out << csv::encode_row(
                {id, format_real(entry.percentile), entry.is_hca ? "true" : "false"});
        return;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [id, entry] : hcas.entries)
        rows.push_back({{"pub_id", id},
                        {"avg_percentile", entry.percentile},
                        {"is_hca", entry.is_hca}});
    out << rows.dump(2) << "\n";
}

void emit_profile(std::ostream& out, const std::vector<ProfileEntry>& profile,
                  ReportFormat format) {
    auto rank_of = [](const ProfileEntry& e) {
        return std::to_string(e.rank) + " of " + std::to_string(e.of_n);
    };
    if (format == ReportFormat::Csv) {
        out << "scope,research_staff,p_hca,rank,percentile\n";
        for (const auto& e : profile)
            out << csv::encode_row({scope_label(e.scope), std::to_string(e.staff_count),
                                    format_real(e.score), rank_of(e),
                                    std::to_string(e.rank_percentile)});
        return;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : profile)
        rows.push_back({{"scope", scope_label(e.scope)},
                        {"research_staff", e.staff_count},
                        {"p_hca", e.score},
                        {"rank", rank_of(e)},
                        {"percentile", e.rank_percentile}});
    out << rows.dump(2) << "\n";
}

void emit_comparison(std::ostream& out, const std::vector<ScopeComparison>& comparisons,
                     ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << "scope,universities,spearman_rho,shifting_in_rank,average_shift,max_shift,"
               "average_percentile_shift,max_percentile_shift\n";
        for (const auto& c : comparisons)
            out << csv::encode_row({c.scope_label, std::to_string(c.report.n_units),
                                    format_real(c.report.spearman_rho),
                                    format_real(c.report.pct_shifting),
                                    format_real(c.report.avg_shift),
                                    std::to_string(c.report.max_shift),
                                    format_real(c.report.avg_percentile_shift),
                                    format_real(c.report.max_percentile_shift)});
        return;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : comparisons)
        rows.push_back({{"scope", c.scope_label},
                        {"universities", c.report.n_units},
                        {"spearman_rho", c.report.spearman_rho},
                        {"shifting_in_rank", c.report.pct_shifting},
                        {"average_shift", c.report.avg_shift},
                        {"max_shift", c.report.max_shift},
                        {"average_percentile_shift", c.report.avg_percentile_shift},
                        {"max_percentile_shift", c.report.max_percentile_shift}});
    out << rows.dump(2) << "\n";
}

void emit_warnings(std::ostream& out, const std::vector<ValidationIssue>& warnings) {
    for (const auto& w : warnings) out << "warning: " << w.code << ": " << w.detail << "\n";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace phca
