#include "ionkit/network.hpp"
#include "ionkit/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ionkit {

IONetwork::IONetwork(std::vector<std::string> nodes, std::vector<Edge> edges,
                     std::map<std::string, std::vector<double>> node_attrs)
    : nodes_(std::move(nodes)), edges_(std::move(edges)),
      node_attrs_(std::move(node_attrs)) {
    const int n = node_count();
    for (int i = 0; i < n; ++i) {
        if (!index_.emplace(nodes_[static_cast<size_t>(i)], i).second)
            throw DomainError("duplicate node id: " + nodes_[static_cast<size_t>(i)]);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
    s_in_.assign(static_cast<size_t>(n), 0.0);
    s_out_.assign(static_cast<size_t>(n), 0.0);
    const Edge* prev = nullptr;
    for (const Edge& e : edges_) {
        if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n)
            throw DomainError("edge endpoint out of range");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw DomainError("edge weight must be positive and finite");
        if (prev && prev->source == e.source && prev->target == e.target)
            throw DomainError("duplicate edge " + nodes_[static_cast<size_t>(e.source)] +
                              "->" + nodes_[static_cast<size_t>(e.target)]);
        prev = &e;
        s_out_[static_cast<size_t>(e.source)] += e.weight;
        s_in_[static_cast<size_t>(e.target)] += e.weight;
        total_weight_ += e.weight;
    }
    for (const auto& [name, values] : node_attrs_) {
        if (static_cast<int>(values.size()) != n)
            throw DomainError("node attribute '" + name + "' has wrong length");
    }
}

const std::string& IONetwork::node(int i) const {
    if (i < 0 || i >= node_count())
        throw LookupError("node index out of range: " + std::to_string(i));
    return nodes_[static_cast<size_t>(i)];
}

int IONetwork::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw LookupError("unknown node: " + id);
    return it->second;
}

bool IONetwork::has_node(const std::string& id) const {
    return index_.count(id) != 0;
}

double IONetwork::in_strength(int i) const {
    node(i); // bounds check
    return s_in_[static_cast<size_t>(i)];
}

double IONetwork::out_strength(int i) const {
    node(i);
    return s_out_[static_cast<size_t>(i)];
}

double IONetwork::total_strength(int i) const {
    node(i);
    return s_in_[static_cast<size_t>(i)] + s_out_[static_cast<size_t>(i)];
}

IONetwork IONetwork::remove_node(int i) const {
    node(i);
    if (node_count() == 1)
        throw DomainError("empty network: cannot remove the last node");
    std::vector<std::string> nodes;
    nodes.reserve(nodes_.size() - 1);
    for (int j = 0; j < node_count(); ++j)
        if (j != i) nodes.push_back(nodes_[static_cast<size_t>(j)]);
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const Edge& e : edges_) {
        if (e.source == i || e.target == i) continue;
        edges.push_back({e.source - (e.source > i ? 1 : 0),
                         e.target - (e.target > i ? 1 : 0), e.weight});
    }
    std::map<std::string, std::vector<double>> attrs;
    for (const auto& [name, values] : node_attrs_) {
        std::vector<double> kept;
        kept.reserve(values.size() - 1);
        for (int j = 0; j < node_count(); ++j)
            if (j != i) kept.push_back(values[static_cast<size_t>(j)]);
        attrs.emplace(name, std::move(kept));
    }
    return IONetwork(std::move(nodes), std::move(edges), std::move(attrs));
}

namespace {

double interp_quantile(const std::vector<double>& sorted, double p) {
    // Linear interpolation between closest ranks (the common "type 7" rule).
    const size_t n = sorted.size();
    if (n == 1) return sorted[0];
    double h = p * static_cast<double>(n - 1);
    size_t lo = static_cast<size_t>(h);
    if (lo >= n - 1) return sorted[n - 1];
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

LogStats log_stats(const std::vector<double>& strengths) {
    LogStats st;
    std::vector<double> logs;
    logs.reserve(strengths.size());
    for (double s : strengths) {
        if (s > 0.0)
            logs.push_back(std::log10(s));
        else
            ++st.zero_count;
    }
    st.positive_count = static_cast<int>(logs.size());
    if (logs.empty()) return st;
    std::sort(logs.begin(), logs.end());
    st.min = logs.front();
    st.max = logs.back();
    st.q1 = interp_quantile(logs, 0.25);
    st.median = interp_quantile(logs, 0.5);
    st.q3 = interp_quantile(logs, 0.75);
    return st;
}

} // namespace

StrengthSummary strength_summary(const IONetwork& g) {
    StrengthSummary out;
    out.nodes = g.nodes();
    const int n = g.node_count();
    out.s_in.reserve(static_cast<size_t>(n));
    out.s_out.reserve(static_cast<size_t>(n));
    out.s_total.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.s_in.push_back(g.in_strength(i));
        out.s_out.push_back(g.out_strength(i));
        out.s_total.push_back(g.total_strength(i));
    }
    out.in_stats = log_stats(out.s_in);
    out.out_stats = log_stats(out.s_out);
    out.total_stats = log_stats(out.s_total);
    return out;
}

} // namespace ionkit
