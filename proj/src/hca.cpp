#include "phca/hca.hpp"

#include <algorithm>

namespace phca {

double citation_percentile(const PublicationRecord& pub,
                           const std::vector<PublicationRecord>& cohort) {
    if (cohort.empty()) throw EmptyCohortError("empty cohort for " + pub.pub_id);
    bool member = false;
    std::size_t below = 0;
    for (const auto& q : cohort) {
        if (q.pub_id == pub.pub_id) member = true;
        if (q.citations < pub.citations) ++below;
    }
    if (!member)
        throw MembershipError("publication " + pub.pub_id + " not a member of its cohort");
    return 100.0 * static_cast<double>(below) / static_cast<double>(cohort.size());
}

double averaged_percentile(const PublicationRecord& pub,
                           const std::map<std::string, std::vector<PublicationRecord>>& cohorts) {
    double sum = 0.0;
    for (const auto& cat : pub.subject_categories) {
        auto it = cohorts.find(cat);
        if (it == cohorts.end())
            throw MissingCohortError("publication " + pub.pub_id + ": no cohort for category " +
                                     cat);
        sum += citation_percentile(pub, it->second);
    }
    return sum / static_cast<double>(pub.subject_categories.size());
}

HcaSet detect_hcas(const std::vector<PublicationRecord>& pubs, const AssessmentConfig& config,
                   std::vector<CohortKey>* singletons) {
    // Sorted citation counts per (year, category); percentile lookup is then
    // a binary search instead of a cohort scan.
    std::map<CohortKey, std::vector<long long>> cohorts;
    for (const auto& p : pubs)
        for (const auto& cat : p.subject_categories)
            cohorts[CohortKey{p.year, cat}].push_back(p.citations);
    for (auto& [key, counts] : cohorts) {
        std::sort(counts.begin(), counts.end());
        if (singletons && counts.size() == 1) singletons->push_back(key);
    }

    HcaSet result;
    result.threshold_percentile = 100.0 * (1.0 - config.hca_top_fraction);
    for (const auto& p : pubs) {
        double sum = 0.0;
        for (const auto& cat : p.subject_categories) {
            const auto& counts = cohorts.at(CohortKey{p.year, cat});
            auto below = std::lower_bound(counts.begin(), counts.end(), p.citations) -
                         counts.begin();
            sum += 100.0 * static_cast<double>(below) / static_cast<double>(counts.size());
        }
        double avg = sum / static_cast<double>(p.subject_categories.size());
        result.entries[p.pub_id] = HcaEntry{avg, avg >= result.threshold_percentile};
    }
    return result;
}

}  // namespace phca
