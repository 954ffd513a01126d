#ifndef IONKIT_PIPELINE_HPP
#define IONKIT_PIPELINE_HPP

#include "ionkit/centrality.hpp"
#include "ionkit/community.hpp"
#include "ionkit/iotable.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace ionkit {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1; // analysis / validation failure
inline constexpr int kExitUsage = 2;   // usage or input error

/// Everything a run needs, validated before any computation starts.
/// Flag precedence (command line over config file over these defaults) is
/// resolved by the CLI layer; the pipeline sees the final values.
struct RunConfig {
    std::string command;
    std::vector<std::string> inputs; // table files, directories, or partition files (ami)

    std::vector<double> gammas = {0.85};
    std::string aux_source = "uniform"; // uniform | value_added | aux:<name> | file:<path>
    bool with_jackknife = false;
    ModularityVariant variant = ModularityVariant::symmetrized;
    int top_k = 5;
    double tol = 1e-12;
    int max_iter = 100000;
    double tol_balance = 1e-6;

    std::string format = "csv"; // csv | json
    std::filesystem::path out_dir = ".";
    bool strict_registry = false;

    std::vector<std::string> measures;  // analyze only; empty = all measures
    std::string series_a, series_b;     // compare only
};

/// One (series, year) member of a year series, recovered from the
/// "<series>_<year>.<ext>" file naming convention.
struct SeriesEntry {
    std::string series;
    int year;
    std::filesystem::path path;
};

/// Scan input files for series members; unmatched files are skipped.
std::vector<SeriesEntry> discover_series(const std::vector<std::filesystem::path>& files);

/// Expand files/directories into a sorted list of table files.
/// Throws ParseError for missing paths.
std::vector<std::filesystem::path> expand_inputs(const std::vector<std::string>& inputs);

/// Dispatch cfg.command; diagnostics go to `diag`, reports to cfg.out_dir.
/// Returns an exit code per the contract above. Never throws for per-table
/// analysis problems: those are collected and reported.
int run(const RunConfig& cfg, std::ostream& diag);

/// Resolve the auxiliary source string against one table/network.
AuxiliaryVector resolve_aux(const std::string& source, const IOTable& table,
                            const IONetwork& g);

} // namespace ionkit

#endif
