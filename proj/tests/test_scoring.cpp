#include <doctest.h>

#include "fixtures.hpp"
#include "phca/hca.hpp"
#include "phca/scoring.hpp"

using namespace phca;

namespace {

struct ScoringFixture {
    std::vector<Researcher> roster;
    FieldTaxonomy tax;
    RosterIndex index;
    HcaSet hcas;
    std::vector<PublicationRecord> pubs;

    ScoringFixture()
        : roster{fixtures::researcher("R1", "UA", "S1", 2008, 2012),
                 fixtures::researcher("R2", "UA", "S1", 2008, 2012)},
          tax(fixtures::taxonomy({{"S1", "UDA1", BylineConvention::Alphabetical}})),
          index(roster) {
        // Two HCAs with unit fractions 1.0 and 0.5 for UA/S1, one non-HCA.
        pubs.push_back(fixtures::pub("H1", 2010, 90, {"C"},
                                     {fixtures::slot(1, "UA", "R1"),
                                      fixtures::slot(2, "UA", "R2")}));
        pubs.push_back(fixtures::pub("H2", 2010, 80, {"C"},
                                     {fixtures::slot(1, "UA", "R1"), fixtures::slot(2, "UX")}));
        pubs.push_back(fixtures::pub("N1", 2010, 1, {"C"}, {fixtures::slot(1, "UA", "R1")}));
        hcas.entries["H1"] = HcaEntry{95.0, true};
        hcas.entries["H2"] = HcaEntry{92.0, true};
        hcas.entries["N1"] = HcaEntry{10.0, false};
    }
};

}  // namespace

TEST_CASE("score_sds evaluates multiplier * sum(f) / w") {
    ScoringFixture f;
    // Sum f = 1.0 + 0.5 = 1.5, w = 500, multiplier 100 -> 0.30.
    CHECK(score_sds("UA", "S1", f.hcas, f.pubs, f.index, f.tax, 500.0, 100.0) ==
          doctest::Approx(0.30));
    // 1/w linearity.
    CHECK(score_sds("UA", "S1", f.hcas, f.pubs, f.index, f.tax, 1000.0, 100.0) ==
          doctest::Approx(0.15));
    // Units without HCA contributions score zero.
    CHECK(score_sds("UB", "S1", f.hcas, f.pubs, f.index, f.tax, 500.0, 100.0) ==
          doctest::Approx(0.0));
    CHECK_THROWS_AS(score_sds("UA", "S1", f.hcas, f.pubs, f.index, f.tax, 0.0, 100.0),
                    ZeroCostError);
}

TEST_CASE("national average weights by cost and skips nil producers") {
    CHECK(national_sds_average({{100.0, 2.0}}) == doctest::Approx(2.0));
    CHECK(national_sds_average({{100.0, 2.0}, {300.0, 1.0}}) == doctest::Approx(1.25));
    CHECK(national_sds_average({{100.0, 2.0}, {50.0, 0.0}}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(national_sds_average({{100.0, 0.0}, {50.0, 0.0}}), NoHcaInSdsError);
}

TEST_CASE("score_uda normalizes by national averages and cost shares") {
    SUBCASE("single SDS at the national average scores 1") {
        CHECK(score_uda({{"S1", 2.0}}, {{"S1", 150.0}}, {{"S1", 2.0}}) == doctest::Approx(1.0));
    }
    SUBCASE("hand evaluation with two SDSs") {
        // Ratios 2.0 and 0.5, costs 100 and 300 -> 2*0.25 + 0.5*0.75.
        CHECK(score_uda({{"S1", 2.0}, {"S2", 1.0}}, {{"S1", 100.0}, {"S2", 300.0}},
                        {{"S1", 1.0}, {"S2", 2.0}}) == doctest::Approx(0.875));
    }
    SUBCASE("all scores zero") {
        CHECK(score_uda({{"S1", 0.0}, {"S2", 0.0}}, {{"S1", 100.0}, {"S2", 300.0}},
                        {{"S1", 1.0}, {"S2", 2.0}}) == doctest::Approx(0.0));
    }
    SUBCASE("an SDS without a national average keeps its cost in the denominator") {
        const double with_avg = score_uda({{"S1", 2.0}}, {{"S1", 100.0}}, {{"S1", 1.0}});
        const double diluted = score_uda({{"S1", 2.0}, {"S2", 0.0}},
                                         {{"S1", 100.0}, {"S2", 100.0}}, {{"S1", 1.0}});
        CHECK(with_avg == doctest::Approx(2.0));
        CHECK(diluted == doctest::Approx(1.0));
    }
    SUBCASE("zero total cost") {
        CHECK_THROWS_AS(score_uda({}, {}, {}), ZeroCostError);
    }
    SUBCASE("weight closure") {
        std::map<std::string, double> costs = {{"S1", 12.5}, {"S2", 77.0}, {"S3", 3.25}};
        double total = 0.0;
        for (const auto& [sds, w] : costs) total += w;
        double closure = 0.0;
        for (const auto& [sds, w] : costs) closure += w / total;
        CHECK(closure == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("score_overall is the same summation over all SDSs") {
    std::map<std::string, double> scores = {{"S1", 2.0}, {"S2", 1.0}};
    std::map<std::string, double> costs = {{"S1", 100.0}, {"S2", 300.0}};
    std::map<std::string, double> avgs = {{"S1", 1.0}, {"S2", 2.0}};
    CHECK(score_overall(scores, costs, avgs) == doctest::Approx(score_uda(scores, costs, avgs)));

    // Two UDAs both scoring 1.0 combine to 1.0 under any cost split.
    std::map<std::string, double> fixed_point_scores = {{"S1", 3.0}, {"S2", 0.5}};
    std::map<std::string, double> fixed_point_avgs = {{"S1", 3.0}, {"S2", 0.5}};
    CHECK(score_overall(fixed_point_scores, costs, fixed_point_avgs) == doctest::Approx(1.0));
}

TEST_CASE("monotone dilution: zero-output staff lowers a positive SDS score") {
    ScoringFixture f;
    const double before = score_sds("UA", "S1", f.hcas, f.pubs, f.index, f.tax, 500.0, 100.0);
    const double after = score_sds("UA", "S1", f.hcas, f.pubs, f.index, f.tax, 750.0, 100.0);
    CHECK(after < before);
}

TEST_CASE("salary-scale invariance of normalized scores") {
    // score/avg ratios and UDA scores are unchanged when every salary is
    // scaled: both numerator and the national average scale by 1/lambda.
    for (double lambda : {0.5, 3.0, 10.0}) {
        const double base_score = 100.0 * 1.5 / 500.0;
        const double scaled_score = 100.0 * 1.5 / (500.0 * lambda);
        CHECK(scaled_score == doctest::Approx(base_score / lambda));

        const double base_avg = national_sds_average({{500.0, base_score}, {250.0, 2.0}});
        const double scaled_avg = national_sds_average(
            {{500.0 * lambda, scaled_score}, {250.0 * lambda, 2.0 / lambda}});
        CHECK(scaled_score / scaled_avg == doctest::Approx(base_score / base_avg));
    }
}
