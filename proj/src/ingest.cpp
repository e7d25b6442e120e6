#include "phca/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "phca/csv.hpp"

namespace phca {

namespace {

long long parse_int(const std::string& s, const std::string& file, std::size_t line,
                    const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(file, line, std::string("bad ") + what + ": '" + s + "'");
    return value;
}

double parse_real(const std::string& s, const std::string& file, std::size_t line,
                  const char* what) {
    try {
        std::size_t pos = 0;
        double value = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return value;
    } catch (const std::exception&) {
        throw ParseError(file, line, std::string("bad ") + what + ": '" + s + "'");
    }
}

void expect_header(const std::vector<csv::Row>& rows, const std::string& file,
                   const std::vector<std::string>& header) {
    if (rows.empty()) throw ParseError(file, 1, "missing header row");
    if (rows.front().fields != header) {
        std::string expected;
        for (std::size_t i = 0; i < header.size(); ++i)
            expected += (i ? "," : "") + header[i];
        throw ParseError(file, rows.front().line, "expected header '" + expected + "'");
    }
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep))
        if (!part.empty()) parts.push_back(part);
    return parts;
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

CorpusPaths CorpusPaths::in_directory(const std::string& dir) {
    const std::string base = dir.empty() || dir.back() == '/' ? dir : dir + "/";
    return CorpusPaths{base + "publications.csv", base + "authorship.csv",
                       base + "researchers.csv", base + "taxonomy.csv", base + "salaries.csv"};
}

LoadResult load_corpus(const CorpusPaths& paths, const AssessmentConfig& config) {
    config.validate();
    LoadResult result;
    auto warn = [&](const std::string& code, const std::string& detail) {
        result.warnings.push_back(ValidationIssue{code, detail});
    };

    // salaries.csv
    {
        const auto rows = csv::parse_file(paths.salaries);
        expect_header(rows, paths.salaries, {"rank", "avg_salary"});
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& r = rows[i];
            if (r.fields.size() != 2)
                throw ParseError(paths.salaries, r.line, "expected 2 fields");
            const double salary = parse_real(r.fields[1], paths.salaries, r.line, "salary");
            if (!result.corpus.salaries.salary_by_rank.emplace(r.fields[0], salary).second)
                throw ParseError(paths.salaries, r.line, "duplicate rank " + r.fields[0]);
        }
        result.corpus.salaries.validate();
    }

    // taxonomy.csv
    {
        const auto rows = csv::parse_file(paths.taxonomy);
        expect_header(rows, paths.taxonomy, {"sds", "uda", "convention"});
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& r = rows[i];
            if (r.fields.size() != 3)
                throw ParseError(paths.taxonomy, r.line, "expected 3 fields");
            if (!result.corpus.taxonomy.sds_to_uda.emplace(r.fields[0], r.fields[1]).second)
                throw ParseError(paths.taxonomy, r.line, "duplicate SDS " + r.fields[0]);
            try {
                result.corpus.taxonomy.byline_convention[r.fields[0]] =
                    byline_convention_from_string(r.fields[2]);
            } catch (const ValidationError& e) {
                throw ParseError(paths.taxonomy, r.line, e.what());
            }
        }
    }

    // researchers.csv — one row per employment year.
    {
        const auto rows = csv::parse_file(paths.researchers);
        expect_header(rows, paths.researchers,
                      {"researcher_id", "university_id", "sds", "year", "rank"});
        std::map<std::string, Researcher> by_id;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& r = rows[i];
            if (r.fields.size() != 5)
                throw ParseError(paths.researchers, r.line, "expected 5 fields");
            const int year =
                static_cast<int>(parse_int(r.fields[3], paths.researchers, r.line, "year"));
            auto [it, inserted] = by_id.try_emplace(
                r.fields[0], Researcher{r.fields[0], r.fields[1], r.fields[2], {}});
            if (!inserted && (it->second.university_id != r.fields[1] ||
                              it->second.sds_code != r.fields[2]))
                throw ReferentialError("researcher " + r.fields[0] +
                                       ": conflicting university or SDS across rows");
            if (!it->second.employment.emplace(year, r.fields[4]).second)
                throw ParseError(paths.researchers, r.line,
                                 "duplicate employment year for " + r.fields[0]);
        }
        result.corpus.roster.reserve(by_id.size());
        for (auto& [id, researcher] : by_id) {
            researcher.validate();
            result.corpus.roster.push_back(std::move(researcher));
        }
        result.corpus.taxonomy.validate_against(result.corpus.roster);
    }

    std::unordered_map<std::string, const Researcher*> roster_index;
    for (const auto& r : result.corpus.roster) roster_index.emplace(r.researcher_id, &r);

    // publications.csv
    std::map<std::string, PublicationRecord> kept;
    std::unordered_set<std::string> dropped;
    {
        const auto rows = csv::parse_file(paths.publications);
        expect_header(rows, paths.publications,
                      {"pub_id", "year", "doc_type", "citations", "categories"});
        if (rows.size() == 1) warn("empty_publications", paths.publications);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& r = rows[i];
            if (r.fields.size() != 5)
                throw ParseError(paths.publications, r.line, "expected 5 fields");
            PublicationRecord pub;
            pub.pub_id = r.fields[0];
            pub.year =
                static_cast<int>(parse_int(r.fields[1], paths.publications, r.line, "year"));
            pub.doc_type = r.fields[2];
            pub.citations = parse_int(r.fields[3], paths.publications, r.line, "citations");
            pub.subject_categories = split_list(r.fields[4], ';');
            if (kept.count(pub.pub_id) || dropped.count(pub.pub_id))
                throw ParseError(paths.publications, r.line, "duplicate pub_id " + pub.pub_id);
            if (!config.window.contains(pub.year)) {
                warn("outside_window", pub.pub_id);
                dropped.insert(pub.pub_id);
                continue;
            }
            if (!config.doc_type_whitelist.empty() &&
                !config.doc_type_whitelist.count(pub.doc_type)) {
                warn("doc_type_excluded", pub.pub_id + " (" + pub.doc_type + ")");
                dropped.insert(pub.pub_id);
                continue;
            }
            kept.emplace(pub.pub_id, std::move(pub));
        }
    }

    // authorship.csv — attach bylines to kept publications.
    {
        const auto rows = csv::parse_file(paths.authorship);
        expect_header(rows, paths.authorship,
                      {"pub_id", "position", "university_id", "researcher_id"});
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& r = rows[i];
            if (r.fields.size() != 4)
                throw ParseError(paths.authorship, r.line, "expected 4 fields");
            auto it = kept.find(r.fields[0]);
            if (it == kept.end()) {
                if (!dropped.count(r.fields[0]))
                    warn("authorship_unknown_pub", r.fields[0]);
                continue;
            }
            AuthorSlot slot;
            slot.position =
                static_cast<int>(parse_int(r.fields[1], paths.authorship, r.line, "position"));
            if (!r.fields[2].empty()) slot.university_id = r.fields[2];
            if (!r.fields[3].empty()) slot.researcher_id = r.fields[3];
            if (slot.researcher_id) {
                auto res = roster_index.find(*slot.researcher_id);
                if (res == roster_index.end())
                    throw ReferentialError("publication " + r.fields[0] +
                                           ": unknown researcher " + *slot.researcher_id);
                if (!slot.university_id)
                    throw ReferentialError("publication " + r.fields[0] + ": researcher " +
                                           *slot.researcher_id + " listed without university");
                if (*slot.university_id != res->second->university_id)
                    throw ReferentialError("publication " + r.fields[0] + ": researcher " +
                                           *slot.researcher_id +
                                           " affiliation disagrees with roster");
            }
            it->second.byline.push_back(slot);
        }
    }

    for (auto it = kept.begin(); it != kept.end();) {
        auto& pub = it->second;
        std::sort(pub.byline.begin(), pub.byline.end(),
                  [](const AuthorSlot& a, const AuthorSlot& b) { return a.position < b.position; });
        if (pub.byline.empty()) {
            warn("missing_byline", pub.pub_id);
            it = kept.erase(it);
            continue;
        }
        pub.validate();  // positions 1..n, categories, citations
        ++it;
    }

    result.corpus.publications.reserve(kept.size());
    for (auto& [id, pub] : kept) result.corpus.publications.push_back(std::move(pub));
    return result;
}

std::set<std::string> filter_sds_coverage(const std::vector<Researcher>& roster,
                                          const std::vector<PublicationRecord>& publications,
                                          const AssessmentConfig& config,
                                          std::vector<ValidationIssue>* warnings) {
    std::unordered_set<std::string> publishing;
    for (const auto& p : publications)
        for (const auto& slot : p.byline)
            if (slot.researcher_id) publishing.insert(*slot.researcher_id);

    std::map<std::string, std::pair<int, int>> per_sds;  // sds -> (active, with pubs)
    for (const auto& r : roster) {
        bool active = false;
        for (const auto& [year, rank] : r.employment)
            if (config.window.contains(year)) {
                active = true;
                break;
            }
        if (!active) continue;
        auto& [total, with_pubs] = per_sds[r.sds_code];
        ++total;
        if (publishing.count(r.researcher_id)) ++with_pubs;
    }

    std::set<std::string> assessed;
    for (const auto& [sds, counts] : per_sds) {
        if (counts.first == 0) continue;
        const double coverage =
            static_cast<double>(counts.second) / static_cast<double>(counts.first);
        if (coverage >= config.sds_coverage_min)
            assessed.insert(sds);
        else if (warnings)
            warnings->push_back(ValidationIssue{"sds_low_coverage", sds});
    }
    if (warnings)
        for (const auto& r : roster)
            if (!per_sds.count(r.sds_code))
                warnings->push_back(ValidationIssue{"sds_no_active_staff", r.sds_code});
    return assessed;
}

AssessmentConfig parse_config_text(const std::string& text, const std::string& file_name) {
    AssessmentConfig config;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        raw = trim(raw);
        if (raw.empty()) continue;
        auto eq = raw.find('=');
        if (eq == std::string::npos)
            throw ParseError(file_name, line, "expected 'key = value'");
        const std::string key = trim(raw.substr(0, eq));
        const std::string value = trim(raw.substr(eq + 1));

        try {
            if (key == "window_first")
                config.window.first = static_cast<int>(parse_int(value, file_name, line, key.c_str()));
            else if (key == "window_last")
                config.window.last = static_cast<int>(parse_int(value, file_name, line, key.c_str()));
            else if (key == "hca_top_fraction")
                config.hca_top_fraction = parse_real(value, file_name, line, key.c_str());
            else if (key == "multiplier")
                config.multiplier = parse_real(value, file_name, line, key.c_str());
            else if (key == "cost_mode")
                config.cost_mode = cost_mode_from_string(value);
            else if (key == "min_staff_sds")
                config.min_staff_sds = static_cast<int>(parse_int(value, file_name, line, key.c_str()));
            else if (key == "min_staff_uda")
                config.min_staff_uda = static_cast<int>(parse_int(value, file_name, line, key.c_str()));
            else if (key == "min_staff_overall")
                config.min_staff_overall =
                    static_cast<int>(parse_int(value, file_name, line, key.c_str()));
            else if (key == "doc_types") {
                config.doc_type_whitelist.clear();
                for (const auto& t : split_list(value, ';'))
                    config.doc_type_whitelist.insert(trim(t));
            } else if (key == "sds_coverage_min")
                config.sds_coverage_min = parse_real(value, file_name, line, key.c_str());
            else
                throw ParseError(file_name, line, "unknown config key '" + key + "'");
        } catch (const ValidationError& e) {
            throw ParseError(file_name, line, e.what());
        }
    }
    config.validate();
    return config;
}

AssessmentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

}  // namespace phca
