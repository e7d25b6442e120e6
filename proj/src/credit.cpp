#include "phca/credit.hpp"

namespace phca {

WeightVector fractional_weights(std::size_t n, BylineConvention convention,
                                bool ends_same_university) {
    if (n < 1) throw InvalidBylineError("byline must have at least one author");

    if (convention == BylineConvention::Alphabetical)
        return WeightVector(n, 1.0 / static_cast<double>(n));

    switch (n) {
        case 1: return {1.0};
        case 2: return {0.5, 0.5};
        case 3:
            if (ends_same_university) return {0.40, 0.20, 0.40};
            // Second and penultimate coincide; renormalize 0.30/0.30/0.30.
            return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
        default: break;
    }

    WeightVector w(n);
    if (ends_same_university) {
        double middle = 0.20 / static_cast<double>(n - 2);
        for (auto& x : w) x = middle;
        w.front() = 0.40;
        w.back() = 0.40;
    } else {
        if (n == 4) {
            // No positions remain for the middle 10% share; renormalize
            // 0.30/0.15/0.15/0.30 so the vector still sums to 1.
            return {1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0};
        }
        double middle = 0.10 / static_cast<double>(n - 4);
        for (auto& x : w) x = middle;
        w.front() = 0.30;
        w.back() = 0.30;
        w[1] = 0.15;
        w[n - 2] = 0.15;
    }
    return w;
}

RosterIndex::RosterIndex(const std::vector<Researcher>& roster) {
    by_id_.reserve(roster.size());
    for (const auto& r : roster) by_id_.emplace(r.researcher_id, &r);
}

const Researcher* RosterIndex::find(const std::string& researcher_id) const {
    auto it = by_id_.find(researcher_id);
    return it == by_id_.end() ? nullptr : it->second;
}

bool byline_ends_same_university(const PublicationRecord& pub) {
    const auto& first = pub.byline.front();
    const auto& last = pub.byline.back();
    return first.university_id && last.university_id &&
           *first.university_id == *last.university_id;
}

double unit_fraction(const PublicationRecord& pub, const std::string& university_id,
                     const std::string& sds_code, const RosterIndex& roster,
                     const FieldTaxonomy& taxonomy) {
    const auto weights = fractional_weights(pub.byline.size(), taxonomy.convention_of(sds_code),
                                            byline_ends_same_university(pub));
    double f = 0.0;
    for (std::size_t i = 0; i < pub.byline.size(); ++i) {
        const auto& slot = pub.byline[i];
        if (!slot.researcher_id) continue;
        const Researcher* r = roster.find(*slot.researcher_id);
        if (r && r->university_id == university_id && r->sds_code == sds_code)
            f += weights[i];
    }
    return f;
}

}  // namespace phca
