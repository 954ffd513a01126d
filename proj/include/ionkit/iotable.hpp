#ifndef IONKIT_IOTABLE_HPP
#define IONKIT_IOTABLE_HPP

#include "ionkit/network.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace ionkit {

/// One national input-output table: intermediate flows W (n x n, entries
/// >= 0, million currency units), final use F, value added X, total output
/// Y, plus optional named auxiliary columns (for example "export").
/// F and X may be negative (net exports, subsidies); W may not.
struct IOTable {
    std::vector<std::string> sectors;
    std::vector<std::vector<double>> intermediate; // W, row i = flows out of sector i
    std::vector<double> final_use;                 // F
    std::vector<double> value_added;               // X
    std::vector<double> total_output;              // Y
    std::map<std::string, std::vector<double>> aux;

    int size() const { return static_cast<int>(sectors.size()); }
};

enum class TableFormat { csv, json };

/// Deduce the format from a file extension (".csv" / ".json").
TableFormat format_from_path(const std::filesystem::path& path);

struct ParseOptions {
    /// Reject sector codes that are not in the STAN catalog.
    bool strict_registry = false;
};

IOTable parse_iot(const std::filesystem::path& path, TableFormat format,
                  const ParseOptions& options = {});
IOTable parse_iot_text(const std::string& text, TableFormat format,
                       const ParseOptions& options = {});

std::string serialize_iot(const IOTable& table, TableFormat format);
void write_iot(const IOTable& table, const std::filesystem::path& path,
               TableFormat format);

/// One violated accounting identity. `axis` is "row" (output = intermediate
/// use + final use) or "col" (output = intermediate input + value added);
/// `residual` is relative: |imbalance| / max(1, |Y|).
struct BalanceIssue {
    std::string sector;
    std::string axis;
    double residual;
};

struct BalanceReport {
    double max_row_residual = 0.0; // relative, as above
    double max_col_residual = 0.0;
    std::vector<BalanceIssue> failing_sectors;
    bool passed = false;
};

/// Check both balance identities at relative tolerance tol_balance.
/// Never throws for imbalance: violations are reported, not raised.
BalanceReport validate_balance(const IOTable& table, double tol_balance = 1e-6);

/// Build the weighted directed network of a table: one node per sector,
/// an edge i->j for every W_ij > 0 (self-loops kept), auxiliary columns
/// carried through as node attributes. All-zero W is an error.
IONetwork to_network(const IOTable& table);

} // namespace ionkit

#endif
