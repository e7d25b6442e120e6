#include "phca/scoring.hpp"

namespace phca {

double score_sds(const std::string& university_id, const std::string& sds_code,
                 const HcaSet& hcas, const std::vector<PublicationRecord>& pubs,
                 const RosterIndex& roster, const FieldTaxonomy& taxonomy, double cost_w,
                 double multiplier) {
    if (cost_w <= 0.0)
        throw ZeroCostError("unit " + university_id + "/" + sds_code + " has no labor cost");
    double f_sum = 0.0;
    for (const auto& p : pubs) {
        if (!hcas.is_hca(p.pub_id)) continue;
        f_sum += unit_fraction(p, university_id, sds_code, roster, taxonomy);
    }
    return multiplier * f_sum / cost_w;
}

double national_sds_average(const std::vector<SdsUniversityRow>& rows) {
    double weighted = 0.0;
    double weight = 0.0;
    for (const auto& row : rows) {
        if (row.score <= 0.0) continue;  // only universities producing HCAs
        weighted += row.cost_w * row.score;
        weight += row.cost_w;
    }
    if (weight <= 0.0)
        throw NoHcaInSdsError("no university produced an HCA in this SDS");
    return weighted / weight;
}

double score_uda(const std::map<std::string, double>& sds_scores,
                 const std::map<std::string, double>& sds_costs,
                 const std::map<std::string, double>& national_avgs) {
    double w_total = 0.0;
    for (const auto& [sds, w] : sds_costs) w_total += w;
    if (w_total <= 0.0) throw ZeroCostError("unit has no labor cost across its SDSs");

    double sum = 0.0;
    for (const auto& [sds, score] : sds_scores) {
        auto avg = national_avgs.find(sds);
        if (avg == national_avgs.end()) continue;  // no national HCA in this SDS
        sum += (score / avg->second) * (sds_costs.at(sds) / w_total);
    }
    return sum;
}

double score_overall(const std::map<std::string, double>& sds_scores,
                     const std::map<std::string, double>& sds_costs,
                     const std::map<std::string, double>& national_avgs) {
    return score_uda(sds_scores, sds_costs, national_avgs);
}

}  // namespace phca
