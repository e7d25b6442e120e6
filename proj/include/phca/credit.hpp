#pragma once

// Fractional author credit: per-position byline weights and the share of a
// publication attributable to one (university, SDS) unit.

#include <string>
#include <unordered_map>
#include <vector>

#include "phca/model.hpp"

namespace phca {

// Entries are >= 0 and sum to 1 within 1e-12; index = byline position - 1.
using WeightVector = std::vector<double>;

// Alphabetical: every author gets 1/n.
// PositionWeighted (life-sciences byline practice), n >= 4:
//   first/last at the same university -> 0.40 each, remaining 0.20 split
//   equally among the middle authors; otherwise 0.30 first and last, 0.15
//   second and penultimate, remaining 0.10 split among the rest.
// Shorter bylines collapse deterministically: n=1 -> [1], n=2 -> [0.5,0.5],
// n=3 -> [0.4,0.2,0.4] (same ends) or [1/3,1/3,1/3] (different ends).
WeightVector fractional_weights(std::size_t n, BylineConvention convention,
                                bool ends_same_university);

// Lookup table from researcher ids to roster entries.
class RosterIndex {
public:
    RosterIndex() = default;
    explicit RosterIndex(const std::vector<Researcher>& roster);

    const Researcher* find(const std::string& researcher_id) const;

private:
    std::unordered_map<std::string, const Researcher*> by_id_;
};

// Whether the first and last byline slots carry the same, present
// university id (the PositionWeighted 40/40/20 trigger).
bool byline_ends_same_university(const PublicationRecord& pub);

// f_i of one publication for one unit: the sum of byline weights at
// positions whose author resolves to a roster researcher in the target
// (university, SDS). The weighting convention is the target SDS's.
// Unmatched or external authors contribute nothing.
double unit_fraction(const PublicationRecord& pub, const std::string& university_id,
                     const std::string& sds_code, const RosterIndex& roster,
                     const FieldTaxonomy& taxonomy);

}  // namespace phca
