#ifndef IONKIT_NETWORK_HPP
#define IONKIT_NETWORK_HPP

#include <map>
#include <string>
#include <vector>

namespace ionkit {

struct Edge {
    int source;
    int target;
    double weight; // strictly positive and finite
};

/// A weighted directed network over named nodes. Immutable after
/// construction: derived networks (remove_node) are new values, so
/// concurrent reads never race and cached strengths never go stale.
///
/// Edges are stored sorted by (source, target) and each ordered pair
/// appears at most once; every sum below runs in that fixed order so
/// floating-point results are reproducible.
class IONetwork {
public:
    IONetwork(std::vector<std::string> nodes, std::vector<Edge> edges,
              std::map<std::string, std::vector<double>> node_attrs = {});

    int node_count() const { return static_cast<int>(nodes_.size()); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::string& node(int i) const;
    /// Index of a node id; throws LookupError if absent.
    int index_of(const std::string& id) const;
    bool has_node(const std::string& id) const;

    const std::vector<Edge>& edges() const { return edges_; }
    double total_weight() const { return total_weight_; }

    // A self-loop counts once toward in-strength and once toward
    // out-strength, so total strength includes it twice.
    double in_strength(int i) const;
    double out_strength(int i) const;
    double total_strength(int i) const;
    double in_strength(const std::string& id) const { return in_strength(index_of(id)); }
    double out_strength(const std::string& id) const { return out_strength(index_of(id)); }
    double total_strength(const std::string& id) const { return total_strength(index_of(id)); }

    const std::vector<double>& in_strengths() const { return s_in_; }
    const std::vector<double>& out_strengths() const { return s_out_; }

    /// New network without node i and its incident edges.
    /// Removing the last remaining node is an error ("empty network").
    IONetwork remove_node(int i) const;
    IONetwork remove_node(const std::string& id) const { return remove_node(index_of(id)); }

    const std::map<std::string, std::vector<double>>& node_attrs() const { return node_attrs_; }

private:
    std::vector<std::string> nodes_;
    std::vector<Edge> edges_;
    std::map<std::string, std::vector<double>> node_attrs_;
    std::map<std::string, int> index_;
    std::vector<double> s_in_, s_out_;
    double total_weight_ = 0.0;
};

/// Log-scale summary of one strength type, computed over the nodes with
/// strictly positive strength; zero-strength nodes are counted apart.
/// Quartiles use linear interpolation between order statistics.
struct LogStats {
    int positive_count = 0;
    int zero_count = 0;
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0; // log10 scale
};

struct StrengthSummary {
    std::vector<std::string> nodes;
    std::vector<double> s_in, s_out, s_total;
    LogStats in_stats, out_stats, total_stats;
};

StrengthSummary strength_summary(const IONetwork& g);

} // namespace ionkit

#endif
