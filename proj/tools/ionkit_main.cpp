#include "ionkit/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

struct CliState {
    ionkit::RunConfig cfg;
    std::string variant_name = "symmetrized";
    std::string out_dir = ".";
};

void add_common_options(CLI::App* cmd, CliState& st, bool table_inputs = true) {
    cmd->add_option("inputs", st.cfg.inputs,
                    table_inputs ? "Table files or directories"
                                 : "Partition CSV files")
        ->required();
    cmd->add_option("-o,--out", st.out_dir, "Output directory")
        ->capture_default_str();
    cmd->add_option("--format", st.cfg.format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_flag("--strict-registry", st.cfg.strict_registry,
                  "Reject sector codes outside the 44-sector catalog");
    cmd->add_option("--tol", st.cfg.tol, "Power-iteration L1 tolerance")
        ->capture_default_str();
    cmd->add_option("--max-iter", st.cfg.max_iter, "Power-iteration cap")
        ->capture_default_str();
}

void add_pagerank_options(CLI::App* cmd, CliState& st) {
    cmd->add_option("--gamma", st.cfg.gammas,
                    "Damping factor(s); repeat for a sensitivity sweep")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--aux", st.cfg.aux_source,
                    "Auxiliary importance: uniform, value_added, aux:<name> or file:<path>")
        ->capture_default_str();
    cmd->add_option("-k,--top-k", st.cfg.top_k, "Rank table length")
        ->capture_default_str();
}

void add_variant_option(CLI::App* cmd, CliState& st) {
    cmd->add_option("--variant", st.variant_name, "Modularity null model")
        ->check(CLI::IsMember({"directed", "symmetrized"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Input-output network analysis: strengths, assortativity with "
                 "jackknife errors, extended PageRank, hubs/authorities, "
                 "community detection and AMI comparison"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read defaults from an INI/TOML file");

    CliState st;

    auto* validate = app.add_subcommand("validate", "Check row/column balance");
    add_common_options(validate, st);
    validate->add_option("--tol-balance", st.cfg.tol_balance,
                         "Relative balance tolerance")
        ->capture_default_str();

    auto* strengths = app.add_subcommand("strengths",
                                         "Node strengths and edge list export");
    add_common_options(strengths, st);

    auto* assort = app.add_subcommand("assort",
                                      "Weighted directed assortativity profile");
    add_common_options(assort, st);
    assort->add_flag("--jackknife", st.cfg.with_jackknife,
                     "Add delete-one standard errors");

    auto* pagerank = app.add_subcommand("pagerank",
                                        "Extended PageRank rank tables");
    add_common_options(pagerank, st);
    add_pagerank_options(pagerank, st);

    auto* hits = app.add_subcommand("hits", "Weighted hub/authority scores");
    add_common_options(hits, st);
    hits->add_option("-k,--top-k", st.cfg.top_k, "Rank table length")
        ->capture_default_str();

    auto* communities = app.add_subcommand("communities",
                                           "Greedy modularity communities");
    add_common_options(communities, st);
    add_variant_option(communities, st);

    auto* ami = app.add_subcommand("ami", "AMI matrix of stored partitions");
    add_common_options(ami, st, /*table_inputs=*/false);

    auto* compare = app.add_subcommand("compare",
                                       "Two-series community similarity matrix");
    add_common_options(compare, st);
    add_variant_option(compare, st);
    compare->add_option("--series-a", st.cfg.series_a, "First series id")->required();
    compare->add_option("--series-b", st.cfg.series_b, "Second series id")->required();

    auto* analyze = app.add_subcommand("analyze", "Batch every requested measure");
    add_common_options(analyze, st);
    analyze->add_option("--measure", st.cfg.measures,
                        "strengths, assort, pagerank, hits, communities "
                        "(repeatable; default all)");
    analyze->add_flag("--jackknife", st.cfg.with_jackknife,
                      "Add delete-one standard errors to assortativity");
    add_pagerank_options(analyze, st);
    add_variant_option(analyze, st);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ionkit::kExitUsage;
    }

    st.cfg.command = app.get_subcommands().front()->get_name();
    st.cfg.variant = ionkit::modularity_variant_from_string(st.variant_name);
    st.cfg.out_dir = st.out_dir;
    return ionkit::run(st.cfg, std::cerr);
}
