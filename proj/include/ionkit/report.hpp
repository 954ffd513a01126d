#ifndef IONKIT_REPORT_HPP
#define IONKIT_REPORT_HPP

#include "ionkit/assortativity.hpp"
#include "ionkit/centrality.hpp"
#include "ionkit/community.hpp"
#include "ionkit/iotable.hpp"
#include "ionkit/network.hpp"

#include <filesystem>
#include <string>

namespace ionkit {

// Every writer returns the complete file content; numbers use the shortest
// round-trip representation so identical inputs always produce identical
// bytes.

std::string edge_list_csv(const IONetwork& g);

std::string strength_summary_csv(const StrengthSummary& s);
std::string strength_summary_json(const StrengthSummary& s);

std::string balance_report_csv(const BalanceReport& r);
std::string balance_report_json(const BalanceReport& r);

std::string assort_profile_csv(const std::vector<AssortativityProfileEntry>& entries);
std::string assort_profile_json(const std::vector<AssortativityProfileEntry>& entries);
/// Long-form leave-one-out values (for error-bar plots): type,removed_node,value.
std::string assort_leave_one_out_csv(const std::vector<AssortativityProfileEntry>& entries);

/// node,score,rank rows of a rank table.
std::string rank_table_csv(const RankTable& t);
/// Convergence metadata: kind, gamma (if any), iterations, residual, lambda source.
std::string score_metadata_json(const ScoreVector& s, const std::string& lambda_source);
/// Rank table and metadata combined.
std::string rank_table_json(const ScoreVector& s, const RankTable& t,
                            const std::string& lambda_source);

std::string partition_csv(const Partition& p);
std::string partition_json(const Partition& p, ModularityVariant variant);
/// Reads a node,community CSV (labels are renumbered canonically).
Partition parse_partition_csv(const std::filesystem::path& path);

std::string ami_matrix_csv(const AmiMatrix& m);
std::string ami_matrix_json(const AmiMatrix& m);

/// Auxiliary vector file: node,value rows matched against g's node set.
AuxiliaryVector parse_aux_csv(const std::filesystem::path& path, const IONetwork& g);

void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace ionkit

#endif
