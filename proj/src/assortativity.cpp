#include "ionkit/assortativity.hpp"
#include "ionkit/errors.hpp"

#include <cmath>

namespace ionkit {

std::string to_string(AssortType t) {
    switch (t) {
        case AssortType::in_in: return "in-in";
        case AssortType::in_out: return "in-out";
        case AssortType::out_in: return "out-in";
        case AssortType::out_out: return "out-out";
        case AssortType::total: return "total";
    }
    throw DomainError("invalid AssortType");
}

AssortType assort_type_from_string(const std::string& name) {
    for (AssortType t : kAssortTypes)
        if (to_string(t) == name) return t;
    throw DomainError("unknown assortativity type: " + name +
                      " (expected in-in, in-out, out-in, out-out or total)");
}

namespace {

const std::vector<double>& source_feature(const IONetwork& g, AssortType t,
                                          std::vector<double>& totals) {
    switch (t) {
        case AssortType::in_in:
        case AssortType::in_out:
            return g.in_strengths();
        case AssortType::out_in:
        case AssortType::out_out:
            return g.out_strengths();
        case AssortType::total:
            return totals;
    }
    throw DomainError("invalid AssortType");
}

const std::vector<double>& target_feature(const IONetwork& g, AssortType t,
                                          std::vector<double>& totals) {
    switch (t) {
        case AssortType::in_in:
        case AssortType::out_in:
            return g.in_strengths();
        case AssortType::in_out:
        case AssortType::out_out:
            return g.out_strengths();
        case AssortType::total:
            return totals;
    }
    throw DomainError("invalid AssortType");
}

} // namespace

double compute_assortativity(const IONetwork& g, AssortType t) {
    const auto& edges = g.edges();
    if (edges.size() < 2)
        throw DomainError("assortativity needs at least 2 edges, network has " +
                          std::to_string(edges.size()));

    std::vector<double> totals;
    if (t == AssortType::total) {
        totals.reserve(static_cast<size_t>(g.node_count()));
        for (int i = 0; i < g.node_count(); ++i)
            totals.push_back(g.total_strength(i));
    }
    const auto& fs = source_feature(g, t, totals);
    const auto& ft = target_feature(g, t, totals);

    const double wn = g.total_weight();
    double mean_sou = 0.0, mean_tar = 0.0, moment_sou = 0.0, moment_tar = 0.0;
    for (const Edge& e : edges) {
        const double x = fs[static_cast<size_t>(e.source)];
        const double y = ft[static_cast<size_t>(e.target)];
        mean_sou += e.weight * x;
        mean_tar += e.weight * y;
        moment_sou += e.weight * x * x;
        moment_tar += e.weight * y * y;
    }
    mean_sou /= wn;
    mean_tar /= wn;

    double cov = 0.0, var_sou = 0.0, var_tar = 0.0;
    for (const Edge& e : edges) {
        const double dx = fs[static_cast<size_t>(e.source)] - mean_sou;
        const double dy = ft[static_cast<size_t>(e.target)] - mean_tar;
        cov += e.weight * dx * dy;
        var_sou += e.weight * dx * dx;
        var_tar += e.weight * dy * dy;
    }
    // A variance below kDegenerateVariance times the raw second moment is
    // indistinguishable from the rounding noise of the mean subtraction, so
    // the endpoint feature is constant across edges for every purpose.
    if (var_sou <= kDegenerateVariance * moment_sou ||
        var_tar <= kDegenerateVariance * moment_tar)
        throw DomainError("undefined assortativity: zero variance on the " +
                          std::string(var_sou <= kDegenerateVariance * moment_sou
                                          ? "source"
                                          : "target") +
                          " side");
    return cov / (std::sqrt(var_sou) * std::sqrt(var_tar));
}

AssortativityEstimate jackknife(const IONetwork& g, AssortType t) {
    const int n = g.node_count();
    if (n < 3)
        throw DomainError("jackknife needs at least 3 nodes, network has " +
                          std::to_string(n));

    AssortativityEstimate est;
    est.type = t;
    est.n_nodes = n;
    est.value = compute_assortativity(g, t);
    est.leave_one_out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        try {
            est.leave_one_out.emplace_back(g.node(i),
                                           compute_assortativity(g.remove_node(i), t));
        } catch (const DomainError& e) {
            throw DomainError("jackknife replicate without node " + g.node(i) +
                              " is degenerate: " + e.what());
        }
    }
    double mean = 0.0;
    for (const auto& [_, r] : est.leave_one_out) mean += r;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (const auto& [_, r] : est.leave_one_out) ss += (r - mean) * (r - mean);
    est.jackknife_se = std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n) * ss);
    return est;
}

std::vector<AssortativityProfileEntry> assortativity_profile(const IONetwork& g,
                                                             bool with_jackknife) {
    std::vector<AssortativityProfileEntry> out;
    out.reserve(kAssortTypes.size());
    for (AssortType t : kAssortTypes) {
        AssortativityProfileEntry entry;
        entry.type = t;
        try {
            if (with_jackknife) {
                entry.estimate = jackknife(g, t);
            } else {
                AssortativityEstimate est;
                est.type = t;
                est.n_nodes = g.node_count();
                est.value = compute_assortativity(g, t);
                entry.estimate = est;
            }
        } catch (const DomainError& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace ionkit
