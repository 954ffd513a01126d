#ifndef IONKIT_COMMUNITY_HPP
#define IONKIT_COMMUNITY_HPP

#include "ionkit/network.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ionkit {

/// A node -> community labeling. Labels always form the contiguous range
/// 0..k-1, numbered in order of first appearance along the node list.
struct Partition {
    std::vector<std::string> nodes;
    std::vector<int> labels; // aligned with nodes
    int k = 0;
    std::optional<double> modularity;

    /// Canonicalize arbitrary integer labels (renumber by first appearance).
    static Partition from_labels(std::vector<std::string> nodes, const std::vector<int>& raw);
    /// All nodes in one community.
    static Partition all_in_one(std::vector<std::string> nodes);
    /// Every node its own community.
    static Partition singletons(std::vector<std::string> nodes);

    int label_of(const std::string& node) const; // throws LookupError
};

/// directed    : null model s_i_out * s_j_in / W_n on the directed flows.
/// symmetrized : classic weighted undirected form on w'_ij = w_ij + w_ji
///               (the substrate the greedy merge algorithm works on).
/// Both give Q = 0 for the all-in-one partition.
enum class ModularityVariant { directed, symmetrized };

std::string to_string(ModularityVariant v);
ModularityVariant modularity_variant_from_string(const std::string& name);

double modularity(const IONetwork& g, const Partition& p, ModularityVariant variant);

/// Agglomerative merge procedure: start from singletons, repeatedly merge
/// the community pair with the largest modularity gain (ties broken by the
/// smallest label pair), and return the partition with maximum Q seen along
/// the full merge sequence. Deterministic for a given node order.
Partition greedy_communities(const IONetwork& g, ModularityVariant variant);

/// Adjusted mutual information with the hypergeometric expected-MI
/// correction and the max(H_p, H_q) normalizer. Returns exactly 1 for
/// partitions identical up to relabeling; when both partitions are
/// single-cluster or both are all-singletons the ratio degenerates and the
/// identical/non-identical rule decides (1 or 0).
double ami(const Partition& p, const Partition& q);

struct AmiMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<double>> values;
};

/// All pairwise AMI values of a labeled collection (symmetric, unit diagonal).
AmiMatrix ami_matrix(const std::vector<std::pair<std::string, Partition>>& partitions);

/// Two aligned series in one square matrix: entries above the diagonal
/// compare series A with itself, entries below compare series B with
/// itself, and the diagonal holds the cross-series comparison per step.
AmiMatrix two_series_ami(const std::vector<std::pair<std::string, Partition>>& series_a,
                         const std::vector<std::pair<std::string, Partition>>& series_b);

} // namespace ionkit

#endif
