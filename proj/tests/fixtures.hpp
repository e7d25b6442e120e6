#pragma once

// Shared test fixtures: hand-built corpora, CSV serialization of a corpus,
// and a seeded random corpus generator for property and oracle suites.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "phca/csv.hpp"
#include "phca/ingest.hpp"
#include "phca/model.hpp"
#include "phca/report.hpp"

namespace fixtures {

inline phca::AuthorSlot slot(int position, const std::string& university = "",
                             const std::string& researcher = "") {
    phca::AuthorSlot s;
    s.position = position;
    if (!university.empty()) s.university_id = university;
    if (!researcher.empty()) s.researcher_id = researcher;
    return s;
}

inline phca::PublicationRecord pub(const std::string& id, int year, long long citations,
                                   std::vector<std::string> categories,
                                   std::vector<phca::AuthorSlot> byline) {
    phca::PublicationRecord p;
    p.pub_id = id;
    p.year = year;
    p.doc_type = "article";
    p.citations = citations;
    p.subject_categories = std::move(categories);
    p.byline = std::move(byline);
    return p;
}

inline phca::Researcher researcher(const std::string& id, const std::string& university,
                                   const std::string& sds, int first_year, int last_year,
                                   const std::string& rank = "full") {
    phca::Researcher r;
    r.researcher_id = id;
    r.university_id = university;
    r.sds_code = sds;
    for (int y = first_year; y <= last_year; ++y) r.employment[y] = rank;
    return r;
}

inline phca::FieldTaxonomy taxonomy(
    const std::vector<std::tuple<std::string, std::string, phca::BylineConvention>>& rows) {
    phca::FieldTaxonomy t;
    for (const auto& [sds, uda, conv] : rows) {
        t.sds_to_uda[sds] = uda;
        t.byline_convention[sds] = conv;
    }
    return t;
}

inline phca::SalarySchedule salaries(
    const std::vector<std::pair<std::string, double>>& rows) {
    phca::SalarySchedule s;
    for (const auto& [rank, salary] : rows) s.salary_by_rank[rank] = salary;
    return s;
}

// Serializes a corpus into the five CSV input files under `dir`.
inline void write_corpus_csv(const std::filesystem::path& dir, const phca::Corpus& corpus) {
    namespace csv = phca::csv;
    std::filesystem::create_directories(dir);

    std::string pubs = "pub_id,year,doc_type,citations,categories\n";
    std::string authorship = "pub_id,position,university_id,researcher_id\n";
    for (const auto& p : corpus.publications) {
        std::string cats;
        for (std::size_t i = 0; i < p.subject_categories.size(); ++i)
            cats += (i ? ";" : "") + p.subject_categories[i];
        pubs += csv::encode_row({p.pub_id, std::to_string(p.year), p.doc_type,
                                 std::to_string(p.citations), cats});
        for (const auto& s : p.byline)
            authorship += csv::encode_row({p.pub_id, std::to_string(s.position),
                                           s.university_id.value_or(""),
                                           s.researcher_id.value_or("")});
    }
    phca::write_file((dir / "publications.csv").string(), pubs);
    phca::write_file((dir / "authorship.csv").string(), authorship);

    std::string researchers = "researcher_id,university_id,sds,year,rank\n";
    for (const auto& r : corpus.roster)
        for (const auto& [year, rank] : r.employment)
            researchers += csv::encode_row(
                {r.researcher_id, r.university_id, r.sds_code, std::to_string(year), rank});
    phca::write_file((dir / "researchers.csv").string(), researchers);

    std::string taxonomy = "sds,uda,convention\n";
    for (const auto& [sds, uda] : corpus.taxonomy.sds_to_uda)
        taxonomy += csv::encode_row(
            {sds, uda, phca::to_string(corpus.taxonomy.byline_convention.at(sds))});
    phca::write_file((dir / "taxonomy.csv").string(), taxonomy);

    std::string salaries = "rank,avg_salary\n";
    for (const auto& [rank, salary] : corpus.salaries.salary_by_rank)
        salaries += csv::encode_row({rank, phca::format_real(salary)});
    phca::write_file((dir / "salaries.csv").string(), salaries);
}

// Desk-scale random corpus: a handful of universities and SDSs, bylines
// mixing matched and external authors. Deterministic for a given seed.
inline phca::Corpus random_corpus(std::mt19937& rng, int max_universities = 4, int max_sds = 3,
                                  int max_pubs = 20) {
    phca::Corpus corpus;
    std::uniform_int_distribution<int> n_univ(2, max_universities);
    std::uniform_int_distribution<int> n_sds(1, max_sds);
    std::uniform_int_distribution<int> coin(0, 1);

    const int universities = n_univ(rng);
    const int sds_count = n_sds(rng);

    for (int s = 0; s < sds_count; ++s) {
        const std::string sds = "SDS" + std::to_string(s);
        corpus.taxonomy.sds_to_uda[sds] = "UDA" + std::to_string(s % 2);
        corpus.taxonomy.byline_convention[sds] = coin(rng) == 0
                                                     ? phca::BylineConvention::Alphabetical
                                                     : phca::BylineConvention::PositionWeighted;
    }
    corpus.salaries.salary_by_rank = {{"assistant", 40000.0 + 1000.0 * coin(rng)},
                                      {"associate", 60000.0},
                                      {"full", 90000.0}};

    const std::vector<std::string> ranks = {"assistant", "associate", "full"};
    std::uniform_int_distribution<int> rank_pick(0, 2);
    std::uniform_int_distribution<int> staff_per_unit(1, 3);
    std::uniform_int_distribution<int> year_pick(2008, 2012);
    int researcher_seq = 0;
    for (int u = 0; u < universities; ++u) {
        for (int s = 0; s < sds_count; ++s) {
            const int staff = staff_per_unit(rng);
            for (int k = 0; k < staff; ++k) {
                const int first = year_pick(rng);
                corpus.roster.push_back(researcher(
                    "R" + std::to_string(researcher_seq++), "U" + std::to_string(u),
                    "SDS" + std::to_string(s), first, std::min(2012, first + coin(rng) * 3),
                    ranks[static_cast<std::size_t>(rank_pick(rng))]));
            }
        }
    }

    std::uniform_int_distribution<int> n_pubs(max_pubs / 2, max_pubs);
    std::uniform_int_distribution<int> cites(0, 50);
    std::uniform_int_distribution<int> byline_len(1, 6);
    std::uniform_int_distribution<int> cat_pick(0, 2);
    std::uniform_int_distribution<std::size_t> roster_pick(0, corpus.roster.size() - 1);
    const int pubs_total = n_pubs(rng);
    for (int i = 0; i < pubs_total; ++i) {
        const int n = byline_len(rng);
        std::vector<phca::AuthorSlot> byline;
        for (int pos = 1; pos <= n; ++pos) {
            if (coin(rng) == 0) {
                byline.push_back(slot(pos, "EXTERNAL" + std::to_string(cat_pick(rng))));
            } else {
                const auto& r = corpus.roster[roster_pick(rng)];
                byline.push_back(slot(pos, r.university_id, r.researcher_id));
            }
        }
        std::vector<std::string> cats = {"CAT" + std::to_string(cat_pick(rng))};
        if (coin(rng) == 0) {
            std::string extra = "CAT" + std::to_string(cat_pick(rng));
            if (extra != cats[0]) cats.push_back(extra);
        }
        corpus.publications.push_back(
            pub("P" + std::to_string(i), year_pick(rng), cites(rng), cats, byline));
    }
    return corpus;
}

inline std::filesystem::path temp_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("phca_tests_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace fixtures
