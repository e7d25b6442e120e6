#pragma once

// Highly-cited article detection: citation percentiles within
// (year, subject category) cohorts, averaged across a journal's categories.

#include <map>
#include <string>
#include <vector>

#include "phca/model.hpp"

namespace phca {

struct HcaEntry {
    double percentile = 0.0;  // averaged over the publication's categories
    bool is_hca = false;

    bool operator==(const HcaEntry&) const = default;
};

struct HcaSet {
    std::map<std::string, HcaEntry> entries;  // pub_id -> entry
    double threshold_percentile = 90.0;       // 100 * (1 - top_fraction)

    bool is_hca(const std::string& pub_id) const {
        auto it = entries.find(pub_id);
        return it != entries.end() && it->second.is_hca;
    }
};

// Percentile rank of pub within one (year, category) cohort: the share of
// cohort members with strictly fewer citations, on a 0..100 scale. Tied
// citation counts share the lower percentile.
double citation_percentile(const PublicationRecord& pub,
                           const std::vector<PublicationRecord>& cohort);

// Unweighted mean of citation_percentile over the publication's own
// subject categories; `cohorts` must supply a cohort for each of them.
double averaged_percentile(const PublicationRecord& pub,
                           const std::map<std::string, std::vector<PublicationRecord>>& cohorts);

struct CohortKey {
    int year = 0;
    std::string category;
    auto operator<=>(const CohortKey&) const = default;
};

// Flags every publication whose averaged percentile reaches
// 100 * (1 - hca_top_fraction). Cohorts are built over the full input
// corpus; the result is independent of input order. When `singletons`
// is given it receives the keys of size-1 cohorts (data-quality signal).
HcaSet detect_hcas(const std::vector<PublicationRecord>& pubs, const AssessmentConfig& config,
                   std::vector<CohortKey>* singletons = nullptr);

}  // namespace phca
