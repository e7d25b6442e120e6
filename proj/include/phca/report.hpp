#pragma once

// Report emission: league tables, HCA lists, university profiles and
// cost-mode comparisons, as CSV or JSON with identical values.

#include <iosfwd>
#include <string>
#include <vector>

#include "phca/pipeline.hpp"

namespace phca {

enum class ReportFormat { Csv, Json };

ReportFormat report_format_from_string(const std::string& s);

// Deterministic shortest-round-trip style real formatting shared by the
// CSV and JSON emitters.
std::string format_real(double value);

void emit_league_table(std::ostream& out, const std::vector<ScoreRow>& table,
                       ReportFormat format);
void emit_hca_set(std::ostream& out, const HcaSet& hcas, ReportFormat format);
void emit_profile(std::ostream& out, const std::vector<ProfileEntry>& profile,
                  ReportFormat format);
void emit_comparison(std::ostream& out, const std::vector<ScopeComparison>& comparisons,
                     ReportFormat format);
void emit_warnings(std::ostream& out, const std::vector<ValidationIssue>& warnings);

// Writes `text` to `path`; IoError when the path is unwritable.
void write_file(const std::string& path, const std::string& text);

}  // namespace phca
