#include "ionkit/community.hpp"
#include "ionkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace ionkit {

Partition Partition::from_labels(std::vector<std::string> nodes,
                                 const std::vector<int>& raw) {
    if (nodes.size() != raw.size())
        throw DomainError("partition labels do not match node count");
    Partition p;
    p.nodes = std::move(nodes);
    p.labels.reserve(raw.size());
    std::map<int, int> renumber;
    for (int label : raw) {
        auto [it, inserted] = renumber.emplace(label, static_cast<int>(renumber.size()));
        p.labels.push_back(it->second);
    }
    p.k = static_cast<int>(renumber.size());
    return p;
}

Partition Partition::all_in_one(std::vector<std::string> nodes) {
    std::vector<int> raw(nodes.size(), 0);
    return from_labels(std::move(nodes), raw);
}

Partition Partition::singletons(std::vector<std::string> nodes) {
    std::vector<int> raw(nodes.size());
    for (size_t i = 0; i < raw.size(); ++i) raw[i] = static_cast<int>(i);
    return from_labels(std::move(nodes), raw);
}

int Partition::label_of(const std::string& node) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == node) return labels[i];
    throw LookupError("node not in partition: " + node);
}

std::string to_string(ModularityVariant v) {
    return v == ModularityVariant::directed ? "directed" : "symmetrized";
}

ModularityVariant modularity_variant_from_string(const std::string& name) {
    if (name == "directed") return ModularityVariant::directed;
    if (name == "symmetrized") return ModularityVariant::symmetrized;
    throw DomainError("unknown modularity variant: " + name +
                      " (expected directed or symmetrized)");
}

namespace {

/// Labels aligned with g's node order; errors if the partition does not
/// cover exactly g's nodes.
std::vector<int> aligned_labels(const IONetwork& g, const Partition& p) {
    if (p.nodes.size() != p.labels.size())
        throw DomainError("partition labels do not match node count");
    if (p.nodes.size() != static_cast<size_t>(g.node_count()))
        throw DomainError("partition covers " + std::to_string(p.nodes.size()) +
                          " nodes, network has " + std::to_string(g.node_count()));
    std::map<std::string, int> by_node;
    for (size_t i = 0; i < p.nodes.size(); ++i) {
        if (p.labels[i] < 0 || p.labels[i] >= p.k)
            throw DomainError("partition label " + std::to_string(p.labels[i]) +
                              " outside 0.." + std::to_string(p.k - 1));
        if (!by_node.emplace(p.nodes[i], p.labels[i]).second)
            throw DomainError("partition labels node twice: " + p.nodes[i]);
    }
    std::vector<int> out;
    out.reserve(p.nodes.size());
    for (const auto& id : g.nodes()) {
        auto it = by_node.find(id);
        if (it == by_node.end())
            throw DomainError("partition is missing node: " + id);
        out.push_back(it->second);
    }
    return out;
}

double modularity_from_labels(const IONetwork& g, const std::vector<int>& labels,
                              int k, ModularityVariant variant) {
    const double wn = g.total_weight();
    if (!(wn > 0.0))
        throw DomainError("modularity of a network with zero total weight");

    // Within-community directed edge weight. For the symmetrized variant the
    // within weight of w' = w + w^T is exactly twice this value.
    double within = 0.0;
    for (const Edge& e : g.edges())
        if (labels[static_cast<size_t>(e.source)] == labels[static_cast<size_t>(e.target)])
            within += e.weight;

    if (variant == ModularityVariant::directed) {
        std::vector<double> sum_out(static_cast<size_t>(k), 0.0);
        std::vector<double> sum_in(static_cast<size_t>(k), 0.0);
        for (int i = 0; i < g.node_count(); ++i) {
            sum_out[static_cast<size_t>(labels[static_cast<size_t>(i)])] += g.out_strength(i);
            sum_in[static_cast<size_t>(labels[static_cast<size_t>(i)])] += g.in_strength(i);
        }
        double null_term = 0.0;
        for (int c = 0; c < k; ++c)
            null_term += sum_out[static_cast<size_t>(c)] * sum_in[static_cast<size_t>(c)];
        return within / wn - null_term / (wn * wn);
    }

    const double two_m = 2.0 * wn; // total weight of w' = w + w^T
    std::vector<double> sum_tot(static_cast<size_t>(k), 0.0);
    for (int i = 0; i < g.node_count(); ++i)
        sum_tot[static_cast<size_t>(labels[static_cast<size_t>(i)])] += g.total_strength(i);
    double null_term = 0.0;
    for (int c = 0; c < k; ++c)
        null_term += sum_tot[static_cast<size_t>(c)] * sum_tot[static_cast<size_t>(c)];
    return 2.0 * within / two_m - null_term / (two_m * two_m);
}

} // namespace

double modularity(const IONetwork& g, const Partition& p, ModularityVariant variant) {
    const auto labels = aligned_labels(g, p);
    return modularity_from_labels(g, labels, p.k, variant);
}

namespace {

struct MergeState {
    // Per active community: index sets are implicit, only aggregates and
    // directed cross weights are tracked. Keys are community labels.
    std::map<int, double> sum_out, sum_in, sum_tot;
    std::map<int, std::map<int, double>> cross; // cross[a][b] = sum of w_ij, i in a, j in b
    std::set<int> active;

    double cross_weight(int a, int b) const {
        auto it = cross.find(a);
        if (it == cross.end()) return 0.0;
        auto jt = it->second.find(b);
        return jt == it->second.end() ? 0.0 : jt->second;
    }
};

} // namespace

Partition greedy_communities(const IONetwork& g, ModularityVariant variant) {
    const int n = g.node_count();
    if (n == 0)
        throw DomainError("cannot detect communities in an empty network");
    const double wn = g.total_weight();
    if (!(wn > 0.0))
        throw DomainError("cannot detect communities: network has zero total weight");

    MergeState st;
    std::vector<int> membership(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        membership[static_cast<size_t>(i)] = i;
        st.active.insert(i);
        st.sum_out[i] = g.out_strength(i);
        st.sum_in[i] = g.in_strength(i);
        st.sum_tot[i] = g.total_strength(i);
    }
    for (const Edge& e : g.edges())
        st.cross[e.source][e.target] += e.weight;

    auto delta_q = [&](int a, int b) {
        const double between = st.cross_weight(a, b) + st.cross_weight(b, a);
        if (variant == ModularityVariant::directed)
            return between / wn - (st.sum_out.at(a) * st.sum_in.at(b) +
                                   st.sum_out.at(b) * st.sum_in.at(a)) / (wn * wn);
        const double two_m = 2.0 * wn;
        // w'(a,b) = between; merging adds 2 w'(a,b) within and the null term.
        return 2.0 * between / two_m -
               2.0 * st.sum_tot.at(a) * st.sum_tot.at(b) / (two_m * two_m);
    };

    // Record the label vector after every merge, then evaluate Q directly on
    // each recorded partition so the selected maximum agrees exactly with
    // modularity().
    std::vector<std::vector<int>> sequence;
    sequence.push_back(membership);
    while (st.active.size() > 1) {
        bool found = false;
        double best = 0.0;
        int best_a = -1, best_b = -1;
        for (auto a_it = st.active.begin(); a_it != st.active.end(); ++a_it) {
            for (auto b_it = std::next(a_it); b_it != st.active.end(); ++b_it) {
                const double dq = delta_q(*a_it, *b_it);
                if (!found || dq > best) {
                    found = true;
                    best = dq;
                    best_a = *a_it;
                    best_b = *b_it;
                }
                // Equal gains fall through: the first (smallest label pair)
                // candidate wins because the scan order is ascending.
            }
        }
        // Merge b into a (a < b by construction).
        const int a = best_a, b = best_b;
        st.sum_out[a] += st.sum_out[b];
        st.sum_in[a] += st.sum_in[b];
        st.sum_tot[a] += st.sum_tot[b];
        st.sum_out.erase(b);
        st.sum_in.erase(b);
        st.sum_tot.erase(b);
        auto b_row = st.cross.find(b);
        if (b_row != st.cross.end()) {
            for (const auto& [target, w] : b_row->second)
                st.cross[a][target == b ? a : target] += w;
            st.cross.erase(b_row);
        }
        for (auto& [source, row] : st.cross) {
            auto jt = row.find(b);
            if (jt != row.end()) {
                row[a] += jt->second;
                row.erase(jt);
            }
        }
        st.active.erase(b);
        for (int& m : membership)
            if (m == b) m = a;
        sequence.push_back(membership);
    }

    double best_q = 0.0;
    const std::vector<int>* best_labels = nullptr;
    for (const auto& labels : sequence) {
        std::set<int> distinct(labels.begin(), labels.end());
        // Compact labels for the aggregate arrays.
        std::map<int, int> compact;
        for (int l : distinct) compact.emplace(l, static_cast<int>(compact.size()));
        std::vector<int> compacted;
        compacted.reserve(labels.size());
        for (int l : labels) compacted.push_back(compact.at(l));
        const double q = modularity_from_labels(g, compacted,
                                                static_cast<int>(distinct.size()), variant);
        if (!best_labels || q > best_q) {
            best_q = q;
            best_labels = &labels;
        }
    }

    Partition result = Partition::from_labels(g.nodes(), *best_labels);
    result.modularity = best_q;
    return result;
}

namespace {

struct Contingency {
    std::vector<std::vector<long>> counts; // k_p x k_q
    std::vector<long> row_sums, col_sums;
    long total = 0;
};

void check_partition(const Partition& p) {
    if (p.nodes.size() != p.labels.size())
        throw DomainError("partition labels do not match node count");
    for (int label : p.labels)
        if (label < 0 || label >= p.k)
            throw DomainError("partition label " + std::to_string(label) +
                              " outside 0.." + std::to_string(p.k - 1));
}

Contingency contingency_table(const Partition& p, const Partition& q) {
    check_partition(p);
    check_partition(q);
    if (p.nodes.size() != q.nodes.size())
        throw DomainError("partitions cover different node counts (" +
                          std::to_string(p.nodes.size()) + " vs " +
                          std::to_string(q.nodes.size()) + ")");
    std::map<std::string, int> q_label;
    for (size_t i = 0; i < q.nodes.size(); ++i)
        q_label.emplace(q.nodes[i], q.labels[i]);

    Contingency c;
    c.counts.assign(static_cast<size_t>(p.k), std::vector<long>(static_cast<size_t>(q.k), 0));
    for (size_t i = 0; i < p.nodes.size(); ++i) {
        auto it = q_label.find(p.nodes[i]);
        if (it == q_label.end())
            throw DomainError("partitions cover different node sets: '" +
                              p.nodes[i] + "' missing from the second");
        ++c.counts[static_cast<size_t>(p.labels[i])][static_cast<size_t>(it->second)];
    }
    c.row_sums.assign(static_cast<size_t>(p.k), 0);
    c.col_sums.assign(static_cast<size_t>(q.k), 0);
    for (int u = 0; u < p.k; ++u)
        for (int v = 0; v < q.k; ++v) {
            const long cnt = c.counts[static_cast<size_t>(u)][static_cast<size_t>(v)];
            c.row_sums[static_cast<size_t>(u)] += cnt;
            c.col_sums[static_cast<size_t>(v)] += cnt;
            c.total += cnt;
        }
    return c;
}

double entropy(const std::vector<long>& sizes, double n) {
    double h = 0.0;
    for (long s : sizes)
        if (s > 0) h -= (static_cast<double>(s) / n) * std::log(static_cast<double>(s) / n);
    return h;
}

/// Expected mutual information under the permutation model: the direct sum
/// over all (row, column, overlap) triples with hypergeometric weights.
double expected_mutual_information(const Contingency& c) {
    const double n = static_cast<double>(c.total);
    const long N = c.total;
    auto lfact = [](long x) { return std::lgamma(static_cast<double>(x) + 1.0); };
    double emi = 0.0;
    for (long a : c.row_sums) {
        for (long b : c.col_sums) {
            const long lo = std::max<long>(1, a + b - N);
            const long hi = std::min(a, b);
            for (long nij = lo; nij <= hi; ++nij) {
                const double term = (static_cast<double>(nij) / n) *
                                    std::log(n * static_cast<double>(nij) /
                                             (static_cast<double>(a) * static_cast<double>(b)));
                const double log_prob = lfact(a) + lfact(b) + lfact(N - a) + lfact(N - b) -
                                        lfact(N) - lfact(nij) - lfact(a - nij) -
                                        lfact(b - nij) - lfact(N - a - b + nij);
                emi += term * std::exp(log_prob);
            }
        }
    }
    return emi;
}

bool identical_partitions(const Contingency& c) {
    // Identical up to relabeling <=> every nonzero cell spans its whole row
    // and column.
    for (size_t u = 0; u < c.counts.size(); ++u)
        for (size_t v = 0; v < c.counts[u].size(); ++v) {
            const long cnt = c.counts[u][v];
            if (cnt != 0 && (cnt != c.row_sums[u] || cnt != c.col_sums[v]))
                return false;
        }
    return true;
}

} // namespace

double ami(const Partition& p, const Partition& q) {
    const Contingency c = contingency_table(p, q);
    const long N = c.total;
    if (identical_partitions(c))
        return 1.0;

    // Both single-cluster or both all-singletons: numerator and denominator
    // collapse together; identical was handled above, so this is the 0 case.
    if ((p.k == 1 && q.k == 1) ||
        (static_cast<long>(p.k) == N && static_cast<long>(q.k) == N))
        return 0.0;

    const double n = static_cast<double>(N);
    double mi = 0.0;
    for (int u = 0; u < p.k; ++u)
        for (int v = 0; v < q.k; ++v) {
            const long cnt = c.counts[static_cast<size_t>(u)][static_cast<size_t>(v)];
            if (cnt > 0)
                mi += (static_cast<double>(cnt) / n) *
                      std::log(n * static_cast<double>(cnt) /
                               (static_cast<double>(c.row_sums[static_cast<size_t>(u)]) *
                                static_cast<double>(c.col_sums[static_cast<size_t>(v)])));
        }
    const double h_max = std::max(entropy(c.row_sums, n), entropy(c.col_sums, n));
    const double emi = expected_mutual_information(c);
    return (mi - emi) / (h_max - emi);
}

AmiMatrix ami_matrix(const std::vector<std::pair<std::string, Partition>>& partitions) {
    const size_t m = partitions.size();
    AmiMatrix out;
    out.values.assign(m, std::vector<double>(m, 0.0));
    for (const auto& [id, _] : partitions) {
        out.row_labels.push_back(id);
        out.col_labels.push_back(id);
    }
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i; j < m; ++j) {
            double value;
            try {
                value = ami(partitions[i].second, partitions[j].second);
            } catch (const DomainError& e) {
                throw DomainError("AMI(" + partitions[i].first + ", " +
                                  partitions[j].first + "): " + e.what());
            }
            out.values[i][j] = value;
            out.values[j][i] = value; // AMI is symmetric in its arguments
        }
    }
    return out;
}

AmiMatrix two_series_ami(const std::vector<std::pair<std::string, Partition>>& series_a,
                         const std::vector<std::pair<std::string, Partition>>& series_b) {
    if (series_a.size() != series_b.size())
        throw DomainError("two-series AMI needs equally long series (" +
                          std::to_string(series_a.size()) + " vs " +
                          std::to_string(series_b.size()) + ")");
    const size_t m = series_a.size();
    AmiMatrix out;
    out.values.assign(m, std::vector<double>(m, 0.0));
    for (size_t i = 0; i < m; ++i) {
        out.row_labels.push_back(series_a[i].first);
        out.col_labels.push_back(series_b[i].first);
    }
    auto guarded_ami = [](const std::pair<std::string, Partition>& x,
                          const std::pair<std::string, Partition>& y) {
        try {
            return ami(x.second, y.second);
        } catch (const DomainError& e) {
            throw DomainError("AMI(" + x.first + ", " + y.first + "): " + e.what());
        }
    };
    for (size_t i = 0; i < m; ++i) {
        out.values[i][i] = guarded_ami(series_a[i], series_b[i]);
        for (size_t j = i + 1; j < m; ++j) {
            out.values[i][j] = guarded_ami(series_a[i], series_a[j]); // upper: series A
            out.values[j][i] = guarded_ami(series_b[i], series_b[j]); // lower: series B
        }
    }
    return out;
}

} // namespace ionkit
