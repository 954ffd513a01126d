#ifndef IONKIT_CENTRALITY_HPP
#define IONKIT_CENTRALITY_HPP

#include "ionkit/network.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ionkit {

/// Nonnegative per-node importance weights; only the proportions
/// lambda_i / sum(lambda) ever enter a score.
struct AuxiliaryVector {
    std::vector<double> values;

    static AuxiliaryVector uniform(int n);
    /// Length n, all entries >= 0 and finite, positive sum; else DomainError.
    void validate(int n) const;
};

enum class ScoreKind { pagerank, hub, authority };

std::string to_string(ScoreKind k);

/// A normalized importance vector (sums to 1) with convergence metadata.
struct ScoreVector {
    ScoreKind kind = ScoreKind::pagerank;
    std::vector<std::string> nodes;
    std::vector<double> scores;
    std::optional<double> gamma; // pagerank only
    int iterations = 0;
    double residual = 0.0; // last L1 change between iterates
};

struct PowerIterOptions {
    double tol = 1e-12; // L1 stopping threshold
    int max_iter = 100000;
};

/// Power iteration for the blended fixed point
///   P_i = gamma * sum_j (w_ji / s_j_out) P_j + (1 - gamma) lambda_i / sum(lambda).
/// A node with zero out-strength hands its whole mass to the normalized
/// auxiliary distribution each step, which keeps sum(P) = 1 and makes the
/// gamma -> 0 limit exact. Starts from P = lambda / sum(lambda).
ScoreVector extended_pagerank(const IONetwork& g, double gamma,
                              const AuxiliaryVector& lambda,
                              const PowerIterOptions& opt = {});

/// extended_pagerank with uniform auxiliary weights (bit-identical to
/// calling it directly).
ScoreVector weighted_pagerank(const IONetwork& g, double gamma,
                              const PowerIterOptions& opt = {});

/// Classic formulation: binary adjacency in place of weights, out-degree in
/// place of out-strength, uniform teleportation.
ScoreVector standard_pagerank(const IONetwork& g, double gamma,
                              const PowerIterOptions& opt = {});

/// Alternating authority/hub updates a <- W^T h, h <- W a with L1
/// normalization after each half-step; the limits are the L1-normalized
/// principal eigenvectors of W W^T (hub) and W^T W (authority).
/// Requires at least one edge; a half-step collapsing to the zero vector
/// is reported as "degenerate HITS".
std::pair<ScoreVector, ScoreVector> weighted_hits(const IONetwork& g,
                                                  const PowerIterOptions& opt = {});

struct RankRow {
    int rank; // 1-based
    std::string node;
    double score;
};

/// Top-k nodes by score, ties broken by ascending node code.
struct RankTable {
    int k = 0;
    std::vector<RankRow> rows;
};

RankTable top_k(const ScoreVector& scores, int k);

} // namespace ionkit

#endif
