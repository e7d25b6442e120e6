// phca — highly-cited-article efficiency rankings for research institutions.
//
// Subcommands map one-to-one onto the report families:
//   detect-hca          averaged citation percentiles and HCA flags
//   rank-sds <sds>      field-level league table
//   rank-uda <uda>      discipline-level league table
//   rank-overall        whole-institution league table
//   profile <univ>      one university's standing in every scope
//   compare-cost-modes  salary vs years-only ranking comparison

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "phca/pipeline.hpp"
#include "phca/report.hpp"

namespace {

struct GlobalOptions {
    std::string data_dir = ".";
    std::string config_path;
    std::string format = "csv";
    std::string cost_mode;
    double top_fraction = -1.0;  // unset
    std::string out_path;
};

phca::AssessmentConfig load_config(const GlobalOptions& opts) {
    phca::AssessmentConfig config;
    if (!opts.config_path.empty()) config = phca::parse_config_file(opts.config_path);
    if (!opts.cost_mode.empty()) config.cost_mode = phca::cost_mode_from_string(opts.cost_mode);
    if (opts.top_fraction > 0.0) config.hca_top_fraction = opts.top_fraction;
    config.validate();
    return config;
}

void deliver(const GlobalOptions& opts, const std::string& text) {
    if (opts.out_path.empty())
        std::cout << text;
    else
        phca::write_file(opts.out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Highly-cited-article efficiency rankings"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--data", opts.data_dir,
                   "Directory holding publications.csv, authorship.csv, researchers.csv, "
                   "taxonomy.csv, salaries.csv");
    app.add_option("--config", opts.config_path, "Assessment config file (key = value)");
    app.add_option("--format", opts.format, "Report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--cost-mode", opts.cost_mode, "Override cost mode: salary or years_only")
        ->check(CLI::IsMember({"salary", "years_only"}));
    app.add_option("--top-fraction", opts.top_fraction, "Override the HCA top fraction");
    app.add_option("--out", opts.out_path, "Write the report to a file instead of stdout");

    auto* detect = app.add_subcommand("detect-hca", "List averaged percentiles and HCA flags");
    std::string sds_code;
    auto* rank_sds = app.add_subcommand("rank-sds", "League table for one SDS");
    rank_sds->add_option("sds", sds_code, "SDS code")->required();
    std::string uda_code;
    auto* rank_uda = app.add_subcommand("rank-uda", "League table for one UDA");
    rank_uda->add_option("uda", uda_code, "UDA code")->required();
    auto* rank_overall = app.add_subcommand("rank-overall", "Whole-institution league table");
    std::string university;
    auto* profile = app.add_subcommand("profile", "Per-scope standings of one university");
    profile->add_option("university", university, "University id")->required();
    auto* compare = app.add_subcommand("compare-cost-modes",
                                       "Salary vs years-only ranking comparison");
    bool shifters_only = false;
    compare->add_flag("--shifters-only", shifters_only,
                      "Average shifts over shifting units instead of all units");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto config = load_config(opts);
        const auto paths = phca::CorpusPaths::in_directory(opts.data_dir);
        const auto format = phca::report_format_from_string(opts.format);
        std::ostringstream report;

        if (compare->parsed()) {
            auto loaded = phca::load_corpus(paths, config);
            phca::emit_warnings(std::cerr, loaded.warnings);
            phca::emit_comparison(report,
                                  phca::compare_cost_modes(loaded.corpus, config, shifters_only),
                                  format);
        } else {
            const auto result = phca::run_assessment(paths, config);
            phca::emit_warnings(std::cerr, result.warnings);
            if (detect->parsed()) {
                phca::emit_hca_set(report, result.hcas, format);
            } else if (rank_sds->parsed()) {
                auto it = result.sds_tables.find(sds_code);
                if (it == result.sds_tables.end())
                    throw phca::ValidationError("SDS not assessed: " + sds_code);
                phca::emit_league_table(report, it->second, format);
            } else if (rank_uda->parsed()) {
                auto it = result.uda_tables.find(uda_code);
                if (it == result.uda_tables.end())
                    throw phca::ValidationError("UDA not assessed: " + uda_code);
                phca::emit_league_table(report, it->second, format);
            } else if (rank_overall->parsed()) {
                phca::emit_league_table(report, result.overall_table, format);
            } else if (profile->parsed()) {
                phca::emit_profile(report, phca::university_profile(result, university), format);
            }
        }
        deliver(opts, report.str());
        return 0;
    } catch (const phca::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const phca::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const phca::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
