#pragma once

// P_HCA scoring: highly-cited output per unit labor cost at SDS level,
// national weighted averages, and the normalized UDA / overall aggregate.

#include <map>
#include <string>
#include <vector>

#include "phca/credit.hpp"
#include "phca/hca.hpp"
#include "phca/model.hpp"

namespace phca {

// SDS-level score: (multiplier / cost_w) * sum of the unit's fractional
// contributions over flagged HCAs. cost_w must be positive; a zero-cost
// unit is ineligible, not infinitely efficient.
double score_sds(const std::string& university_id, const std::string& sds_code,
                 const HcaSet& hcas, const std::vector<PublicationRecord>& pubs,
                 const RosterIndex& roster, const FieldTaxonomy& taxonomy, double cost_w,
                 double multiplier);

struct SdsUniversityRow {
    double cost_w = 0.0;
    double score = 0.0;
};

// Cost-weighted national mean score of one SDS, over universities that
// produced at least one HCA there (score > 0). Throws NoHcaInSdsError when
// nobody did: that SDS has no defined national reference.
double national_sds_average(const std::vector<SdsUniversityRow>& rows);

// UDA-level aggregate: sum over the university's SDSs in the UDA of
// (score / national average) * (cost share). SDSs without a national
// average (key absent from `national_avgs`) add nothing to the numerator
// but their cost stays in the denominator w_U.
double score_uda(const std::map<std::string, double>& sds_scores,
                 const std::map<std::string, double>& sds_costs,
                 const std::map<std::string, double>& national_avgs);

// Whole-institution score: the same summation extended to every assessed
// SDS of the university.
double score_overall(const std::map<std::string, double>& sds_scores,
                     const std::map<std::string, double>& sds_costs,
                     const std::map<std::string, double>& national_avgs);

}  // namespace phca
