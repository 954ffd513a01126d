#include "ionkit/centrality.hpp"
#include "ionkit/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ionkit {

AuxiliaryVector AuxiliaryVector::uniform(int n) {
    return AuxiliaryVector{std::vector<double>(static_cast<size_t>(n), 1.0)};
}

void AuxiliaryVector::validate(int n) const {
    if (static_cast<int>(values.size()) != n)
        throw DomainError("auxiliary vector has " + std::to_string(values.size()) +
                          " entries, network has " + std::to_string(n) + " nodes");
    double sum = 0.0;
    for (double v : values) {
        if (!std::isfinite(v))
            throw DomainError("auxiliary values must be finite");
        if (v < 0.0)
            throw DomainError("auxiliary values must be nonnegative");
        sum += v;
    }
    if (!(sum > 0.0))
        throw DomainError("auxiliary values must not all be zero");
}

std::string to_string(ScoreKind k) {
    switch (k) {
        case ScoreKind::pagerank: return "pagerank";
        case ScoreKind::hub: return "hub";
        case ScoreKind::authority: return "authority";
    }
    throw DomainError("invalid ScoreKind");
}

namespace {

double l1_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

void check_options(const PowerIterOptions& opt) {
    if (!(opt.tol > 0.0))
        throw DomainError("tolerance must be positive");
    if (opt.max_iter < 1)
        throw DomainError("max_iter must be at least 1");
}

ScoreVector pagerank_power_iteration(const IONetwork& g, double gamma,
                                     const AuxiliaryVector& lambda,
                                     const PowerIterOptions& opt) {
    check_options(opt);
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw DomainError("gamma must be in [0, 1]");
    const int n = g.node_count();
    lambda.validate(n);

    double lambda_sum = 0.0;
    for (double v : lambda.values) lambda_sum += v;
    std::vector<double> teleport(static_cast<size_t>(n));
    for (size_t i = 0; i < teleport.size(); ++i)
        teleport[i] = lambda.values[i] / lambda_sum;

    const auto& s_out = g.out_strengths();

    ScoreVector result;
    result.kind = ScoreKind::pagerank;
    result.nodes = g.nodes();
    result.gamma = gamma;

    std::vector<double> p = teleport;
    std::vector<double> next(static_cast<size_t>(n));
    for (int iter = 1; iter <= opt.max_iter; ++iter) {
        double dangling = 0.0;
        for (size_t j = 0; j < p.size(); ++j)
            if (s_out[j] == 0.0) dangling += p[j];
        for (size_t i = 0; i < next.size(); ++i)
            next[i] = (1.0 - gamma) * teleport[i] + gamma * dangling * teleport[i];
        for (const Edge& e : g.edges())
            next[static_cast<size_t>(e.target)] +=
                gamma * (e.weight / s_out[static_cast<size_t>(e.source)]) *
                p[static_cast<size_t>(e.source)];
        result.residual = l1_diff(next, p);
        result.iterations = iter;
        p.swap(next);
        if (result.residual <= opt.tol) {
            result.scores = std::move(p);
            return result;
        }
    }
    throw ConvergenceError("pagerank did not converge after " +
                               std::to_string(opt.max_iter) +
                               " iterations (last L1 change " +
                               std::to_string(result.residual) + ")",
                           result.residual);
}

} // namespace

ScoreVector extended_pagerank(const IONetwork& g, double gamma,
                              const AuxiliaryVector& lambda,
                              const PowerIterOptions& opt) {
    return pagerank_power_iteration(g, gamma, lambda, opt);
}

ScoreVector weighted_pagerank(const IONetwork& g, double gamma,
                              const PowerIterOptions& opt) {
    return extended_pagerank(g, gamma, AuxiliaryVector::uniform(g.node_count()), opt);
}

ScoreVector standard_pagerank(const IONetwork& g, double gamma,
                              const PowerIterOptions& opt) {
    // Same fixed point on the unit-weight copy: w_ji becomes a_ji and
    // out-strength becomes out-degree.
    std::vector<Edge> unit_edges;
    unit_edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) unit_edges.push_back({e.source, e.target, 1.0});
    IONetwork binary(g.nodes(), std::move(unit_edges));
    return weighted_pagerank(binary, gamma, opt);
}

std::pair<ScoreVector, ScoreVector> weighted_hits(const IONetwork& g,
                                                  const PowerIterOptions& opt) {
    check_options(opt);
    const int n = g.node_count();
    if (g.edges().empty())
        throw DomainError("HITS needs at least one edge");

    std::vector<double> hub(static_cast<size_t>(n), 1.0 / static_cast<double>(n));
    std::vector<double> auth = hub;
    std::vector<double> new_hub(static_cast<size_t>(n));
    std::vector<double> new_auth(static_cast<size_t>(n));

    auto normalize = [](std::vector<double>& v, const char* side) {
        double sum = 0.0;
        for (double x : v) sum += x;
        if (!(sum > 0.0))
            throw DomainError(std::string("degenerate HITS: ") + side +
                              " scores collapsed to zero");
        for (double& x : v) x /= sum;
    };

    int iterations = 0;
    double residual = 0.0;
    for (int iter = 1; iter <= opt.max_iter; ++iter) {
        std::fill(new_auth.begin(), new_auth.end(), 0.0);
        for (const Edge& e : g.edges())
            new_auth[static_cast<size_t>(e.target)] +=
                e.weight * hub[static_cast<size_t>(e.source)];
        normalize(new_auth, "authority");

        std::fill(new_hub.begin(), new_hub.end(), 0.0);
        for (const Edge& e : g.edges())
            new_hub[static_cast<size_t>(e.source)] +=
                e.weight * new_auth[static_cast<size_t>(e.target)];
        normalize(new_hub, "hub");

        residual = std::max(l1_diff(new_auth, auth), l1_diff(new_hub, hub));
        iterations = iter;
        auth.swap(new_auth);
        hub.swap(new_hub);
        if (residual <= opt.tol) break;
        if (iter == opt.max_iter)
            throw ConvergenceError("HITS did not converge after " +
                                       std::to_string(opt.max_iter) + " iterations",
                                   residual);
    }

    ScoreVector h;
    h.kind = ScoreKind::hub;
    h.nodes = g.nodes();
    h.scores = std::move(hub);
    h.iterations = iterations;
    h.residual = residual;
    ScoreVector a;
    a.kind = ScoreKind::authority;
    a.nodes = g.nodes();
    a.scores = std::move(auth);
    a.iterations = iterations;
    a.residual = residual;
    return {std::move(h), std::move(a)};
}

RankTable top_k(const ScoreVector& scores, int k) {
    const int n = static_cast<int>(scores.scores.size());
    if (k < 1 || k > n)
        throw DomainError("k must be in [1, " + std::to_string(n) + "], got " +
                          std::to_string(k));
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double sa = scores.scores[static_cast<size_t>(a)];
        const double sb = scores.scores[static_cast<size_t>(b)];
        if (sa != sb) return sa > sb;
        return scores.nodes[static_cast<size_t>(a)] < scores.nodes[static_cast<size_t>(b)];
    });
    RankTable table;
    table.k = k;
    table.rows.reserve(static_cast<size_t>(k));
    for (int r = 0; r < k; ++r) {
        const int i = order[static_cast<size_t>(r)];
        table.rows.push_back({r + 1, scores.nodes[static_cast<size_t>(i)],
                              scores.scores[static_cast<size_t>(i)]});
    }
    return table;
}

} // namespace ionkit
