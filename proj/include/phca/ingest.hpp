#pragma once

// Flat-file ingestion: CSV corpus loading with validation, the SDS
// coverage filter, and the key-value assessment config format.

#include <set>
#include <string>
#include <vector>

#include "phca/model.hpp"

namespace phca {

struct CorpusPaths {
    std::string publications;  // pub_id,year,doc_type,citations,categories(;-separated)
    std::string authorship;    // pub_id,position,university_id,researcher_id (last two optional)
    std::string researchers;   // researcher_id,university_id,sds,year,rank (one row per year)
    std::string taxonomy;      // sds,uda,convention
    std::string salaries;      // rank,avg_salary

    // The five fixed file names under one directory.
    static CorpusPaths in_directory(const std::string& dir);
};

struct ValidationIssue {
    std::string code;    // stable reason code, e.g. "doc_type_excluded"
    std::string detail;

    bool operator==(const ValidationIssue&) const = default;
};

struct Corpus {
    std::vector<PublicationRecord> publications;
    std::vector<Researcher> roster;
    FieldTaxonomy taxonomy;
    SalarySchedule salaries;
};

struct LoadResult {
    Corpus corpus;
    std::vector<ValidationIssue> warnings;
};

// Loads and validates the corpus. Publications outside the window or
// failing the doc-type whitelist are dropped with a warning; an empty
// whitelist admits every document type. A byline researcher_id missing
// from the roster, or disagreeing with it on affiliation, is a
// ReferentialError.
LoadResult load_corpus(const CorpusPaths& paths, const AssessmentConfig& config);

// SDSs where at least `sds_coverage_min` of the window-active national
// researchers authored at least one ingested publication.
std::set<std::string> filter_sds_coverage(const std::vector<Researcher>& roster,
                                          const std::vector<PublicationRecord>& publications,
                                          const AssessmentConfig& config,
                                          std::vector<ValidationIssue>* warnings = nullptr);

// `key = value` config file mirroring AssessmentConfig; '#' starts a
// comment. Unknown keys are a ParseError.
AssessmentConfig parse_config_file(const std::string& path);
AssessmentConfig parse_config_text(const std::string& text, const std::string& file_name);

}  // namespace phca
