#ifndef IONKIT_ASSORTATIVITY_HPP
#define IONKIT_ASSORTATIVITY_HPP

#include "ionkit/network.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ionkit {

/// The five strength-assortativity variants: source strength type x target
/// strength type for the directed four, plus the total-strength coefficient.
enum class AssortType { in_in, in_out, out_in, out_out, total };

constexpr std::array<AssortType, 5> kAssortTypes = {
    AssortType::in_in, AssortType::in_out, AssortType::out_in,
    AssortType::out_out, AssortType::total};

std::string to_string(AssortType t);
AssortType assort_type_from_string(const std::string& name);

/// A side's edge-weighted variance counts as zero when it is at most this
/// fraction of the raw second moment: such a "variance" is pure rounding
/// residue of the mean subtraction and the feature is constant in every
/// meaningful sense (so the coefficient is undefined at any weight scale).
inline constexpr double kDegenerateVariance = 1e-24;

/// Edge-weighted correlation between the source-side and target-side
/// strength features across all edges. Result is in [-1, 1].
///
/// Throws DomainError when fewer than 2 edges are present or when either
/// side has zero edge-weighted variance ("undefined assortativity").
double compute_assortativity(const IONetwork& g, AssortType t);

struct AssortativityEstimate {
    AssortType type;
    double value = 0.0;
    std::optional<double> jackknife_se;
    // (removed node, recomputed coefficient), in node order; filled
    // exactly when jackknife_se is set.
    std::vector<std::pair<std::string, double>> leave_one_out;
    int n_nodes = 0;
};

/// Delete-one jackknife: recompute the coefficient with each node (and its
/// incident edges) removed, then SE = sqrt((n-1)/n * sum (r_i - mean)^2).
/// Any degenerate leave-one-out replicate is a hard error naming the node;
/// silently dropping replicates would bias the estimate.
AssortativityEstimate jackknife(const IONetwork& g, AssortType t);

/// One profile row per AssortType; a degenerate type is reported in place
/// (error text set, estimate empty) without aborting the other types.
struct AssortativityProfileEntry {
    AssortType type;
    std::optional<AssortativityEstimate> estimate;
    std::string error;
};

std::vector<AssortativityProfileEntry> assortativity_profile(const IONetwork& g,
                                                             bool with_jackknife);

} // namespace ionkit

#endif
