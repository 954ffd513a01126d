#include "ionkit/community.hpp"
#include "ionkit/errors.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace ionkit;
using namespace ionkit::testsupport;

namespace {

/// Literal evaluation of the displayed modularity formulas over the dense
/// matrix; no shared code with the library implementation.
double modularity_direct(const IONetwork& g, const std::vector<int>& labels,
                         ModularityVariant variant) {
    const int n = g.node_count();
    std::vector<std::vector<double>> w(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (const Edge& e : g.edges())
        w[static_cast<size_t>(e.source)][static_cast<size_t>(e.target)] = e.weight;
    if (variant == ModularityVariant::directed) {
        const double wn = g.total_weight();
        double q = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (labels[static_cast<size_t>(i)] == labels[static_cast<size_t>(j)])
                    q += w[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                         g.out_strength(i) * g.in_strength(j) / wn;
        return q / wn;
    }
    std::vector<std::vector<double>> sym(static_cast<size_t>(n),
                                         std::vector<double>(static_cast<size_t>(n), 0.0));
    double two_m = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            sym[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                w[static_cast<size_t>(j)][static_cast<size_t>(i)];
            two_m += sym[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    std::vector<double> stot(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            stot[static_cast<size_t>(i)] += sym[static_cast<size_t>(i)][static_cast<size_t>(j)];
    double q = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (labels[static_cast<size_t>(i)] == labels[static_cast<size_t>(j)])
                q += sym[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                     stot[static_cast<size_t>(i)] * stot[static_cast<size_t>(j)] / two_m;
    return q / two_m;
}

/// Two dense 4-node blocks joined by one weak edge.
IONetwork planted_blocks() {
    std::vector<Edge> edges;
    for (int base : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) edges.push_back({base + i, base + j, 1.0});
    edges.push_back({3, 4, 0.01});
    return make_network(8, std::move(edges));
}

IONetwork two_cliques() {
    std::vector<Edge> edges;
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) edges.push_back({base + i, base + j, 1.0});
    return make_network(6, std::move(edges));
}

Partition partition_of(const IONetwork& g, std::vector<int> labels) {
    return Partition::from_labels(g.nodes(), labels);
}

} // namespace

TEST_SUITE("community") {

TEST_CASE("all-in-one modularity is zero for both variants") {
    Rng rng(61);
    for (int trial = 0; trial < 8; ++trial) {
        const IONetwork g = random_network(rng, 4 + rng.below(5), 0.5, true);
        const Partition p = Partition::all_in_one(g.nodes());
        CHECK(std::abs(modularity(g, p, ModularityVariant::directed)) < 1e-12);
        CHECK(std::abs(modularity(g, p, ModularityVariant::symmetrized)) < 1e-12);
    }
}

TEST_CASE("singleton partition of a loop-free network, directed variant") {
    const IONetwork g = make_network(4, {{0, 1, 2.0}, {1, 2, 1.0}, {2, 0, 3.0},
                                         {2, 3, 1.5}, {3, 1, 0.5}});
    const double wn = g.total_weight();
    double expected = 0.0;
    for (int i = 0; i < g.node_count(); ++i)
        expected -= g.out_strength(i) * g.in_strength(i) / (wn * wn);
    const Partition p = Partition::singletons(g.nodes());
    CHECK(modularity(g, p, ModularityVariant::directed) ==
          doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("two cliques with the planted partition match the frozen value") {
    const IONetwork g = two_cliques();
    const Partition planted = partition_of(g, {0, 0, 0, 1, 1, 1});
    CHECK(modularity(g, planted, ModularityVariant::symmetrized) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(modularity(g, planted, ModularityVariant::directed) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("modularity equals the literal formula on random fixtures") {
    Rng rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + rng.below(5);
        const IONetwork g = random_network(rng, n, 0.5, true);
        std::vector<int> labels;
        for (int i = 0; i < n; ++i) labels.push_back(rng.below(3));
        const Partition p = partition_of(g, labels);
        // from_labels renumbers; evaluate the direct formula on the
        // canonical labels to keep the indicator identical.
        CHECK(modularity(g, p, ModularityVariant::directed) ==
              doctest::Approx(modularity_direct(g, p.labels, ModularityVariant::directed))
                  .epsilon(1e-12));
        CHECK(modularity(g, p, ModularityVariant::symmetrized) ==
              doctest::Approx(modularity_direct(g, p.labels, ModularityVariant::symmetrized))
                  .epsilon(1e-12));
    }
}

TEST_CASE("self-loops enter the diagonal terms") {
    const IONetwork g = make_network(2, {{0, 0, 2.0}, {0, 1, 1.0}});
    const Partition singles = Partition::singletons(g.nodes());
    CHECK(modularity(g, singles, ModularityVariant::directed) ==
          doctest::Approx(modularity_direct(g, singles.labels, ModularityVariant::directed))
              .epsilon(1e-13));
    CHECK(modularity(g, singles, ModularityVariant::symmetrized) ==
          doctest::Approx(modularity_direct(g, singles.labels,
                                            ModularityVariant::symmetrized))
              .epsilon(1e-13));
}

TEST_CASE("modularity is invariant under weight scaling") {
    Rng rng(71);
    const IONetwork g = random_network(rng, 6, 0.5, true);
    std::vector<Edge> scaled;
    for (const Edge& e : g.edges()) scaled.push_back({e.source, e.target, 1e3 * e.weight});
    const IONetwork g2 = make_network(6, std::move(scaled));
    std::vector<int> labels = {0, 1, 0, 2, 1, 2};
    const Partition p = partition_of(g, labels);
    for (auto v : {ModularityVariant::directed, ModularityVariant::symmetrized})
        CHECK(modularity(g2, p, v) == doctest::Approx(modularity(g, p, v)).epsilon(1e-12));
}

TEST_CASE("partition and network must agree") {
    const IONetwork g = make_network(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    const Partition wrong = Partition::from_labels({"01", "02"}, {0, 1});
    CHECK_THROWS_AS(modularity(g, wrong, ModularityVariant::directed), DomainError);
    const Partition other = Partition::from_labels({"01", "02", "99"}, {0, 1, 1});
    CHECK_THROWS_AS(modularity(g, other, ModularityVariant::directed), DomainError);
}

TEST_CASE("greedy recovers two planted blocks") {
    const IONetwork g = planted_blocks();
    for (auto variant : {ModularityVariant::symmetrized, ModularityVariant::directed}) {
        const Partition got = greedy_communities(g, variant);
        const Partition planted = partition_of(g, {0, 0, 0, 0, 1, 1, 1, 1});
        CHECK(got.k == 2);
        CHECK(ami(got, planted) == doctest::Approx(1.0));
        REQUIRE(got.modularity.has_value());
        CHECK(*got.modularity == doctest::Approx(modularity(g, got, variant)));
        // The planted split really is the global optimum over all 4140
        // set partitions.
        CHECK(modularity(g, planted, variant) ==
              doctest::Approx(exhaustive_max_modularity(g, variant)).epsilon(1e-12));
    }
}

TEST_CASE("single edge: greedy beats both trivial partitions") {
    const IONetwork g = make_network(2, {{0, 1, 1.0}, {1, 0, 0.5}});
    for (auto variant : {ModularityVariant::symmetrized, ModularityVariant::directed}) {
        const Partition got = greedy_communities(g, variant);
        const double q = *got.modularity;
        CHECK(q >= modularity(g, Partition::singletons(g.nodes()), variant) - 1e-12);
        CHECK(q >= modularity(g, Partition::all_in_one(g.nodes()), variant) - 1e-12);
    }
}

TEST_CASE("greedy output is stable under node relabeling") {
    const IONetwork g = planted_blocks();
    // Interleave the two blocks in the node order.
    std::vector<std::string> nodes(8);
    std::vector<int> perm = {0, 2, 4, 6, 1, 3, 5, 7};
    for (size_t i = 0; i < 8; ++i) nodes[static_cast<size_t>(perm[i])] = g.node(static_cast<int>(i));
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        edges.push_back({perm[static_cast<size_t>(e.source)],
                         perm[static_cast<size_t>(e.target)], e.weight});
    const IONetwork shuffled(std::move(nodes), std::move(edges));
    const Partition a = greedy_communities(g, ModularityVariant::symmetrized);
    const Partition b = greedy_communities(shuffled, ModularityVariant::symmetrized);
    CHECK(ami(a, b) == doctest::Approx(1.0));
}

TEST_CASE("greedy never exceeds the exhaustive maximum on small fixtures") {
    Rng rng(73);
    for (int trial = 0; trial < 4; ++trial) {
        const int n = 4 + rng.below(3); // up to 6 nodes here; 8 in acceptance
        const IONetwork g = random_network(rng, n, 0.6, true);
        for (auto variant : {ModularityVariant::symmetrized, ModularityVariant::directed}) {
            const Partition got = greedy_communities(g, variant);
            CHECK(*got.modularity <= exhaustive_max_modularity(g, variant) + 1e-12);
        }
    }
}

TEST_CASE("greedy labels are canonical") {
    const Partition p = greedy_communities(planted_blocks(), ModularityVariant::symmetrized);
    CHECK(p.labels.front() == 0);
    int max_seen = -1;
    for (int l : p.labels) {
        CHECK(l <= max_seen + 1); // first appearance order
        max_seen = std::max(max_seen, l);
    }
    CHECK(max_seen == p.k - 1);
}

TEST_CASE("ami of a partition with itself is exactly one") {
    const Partition p = Partition::from_labels(codes(6), {0, 1, 0, 2, 1, 2});
    CHECK(ami(p, p) == 1.0);
}

TEST_CASE("all-in-one against all-singletons scores zero") {
    const Partition one = Partition::all_in_one(codes(5));
    const Partition single = Partition::singletons(codes(5));
    CHECK(ami(one, single) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("degenerate pairs follow the identical rule") {
    CHECK(ami(Partition::all_in_one(codes(4)), Partition::all_in_one(codes(4))) == 1.0);
    CHECK(ami(Partition::singletons(codes(4)), Partition::singletons(codes(4))) == 1.0);
    // Same node, trivially identical.
    CHECK(ami(Partition::all_in_one({"01"}), Partition::singletons({"01"})) == 1.0);
}

TEST_CASE("fixed eight-node pairs match the frozen direct-summation values") {
    const Partition p1 = Partition::from_labels(codes(8), {0, 0, 0, 1, 1, 2, 2, 2});
    const Partition q1 = Partition::from_labels(codes(8), {0, 0, 1, 1, 2, 2, 2, 2});
    CHECK(std::abs(ami(p1, q1) - 0.35862144587027645) < 1e-10);

    const Partition p2 = Partition::from_labels(codes(8), {0, 1, 0, 1, 2, 2, 3, 3});
    const Partition q2 = Partition::from_labels(codes(8), {1, 1, 0, 0, 2, 3, 2, 3});
    CHECK(std::abs(ami(p2, q2) - (-0.16666666666666877)) < 1e-10);
}

TEST_CASE("ami matches the Pascal-triangle oracle on random partitions") {
    Rng rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 5 + rng.below(4);
        std::vector<int> la, lb;
        for (int i = 0; i < n; ++i) {
            la.push_back(rng.below(3));
            lb.push_back(rng.below(3));
        }
        const Partition p = Partition::from_labels(codes(n), la);
        const Partition q = Partition::from_labels(codes(n), lb);
        if (p.k == 1 && q.k == 1) continue;
        CHECK(std::abs(ami(p, q) - ami_direct_oracle(p, q)) < 1e-10);
        CHECK(ami(p, q) <= 1.0 + 1e-12);
    }
}

TEST_CASE("ami is invariant under label permutation of either argument") {
    const Partition p = Partition::from_labels(codes(7), {0, 1, 2, 0, 1, 2, 0});
    const Partition q = Partition::from_labels(codes(7), {1, 1, 0, 0, 2, 2, 1});
    // Swap label names in q: 0 <-> 2.
    const Partition q_swapped = Partition::from_labels(codes(7), {1, 1, 2, 2, 0, 0, 1});
    CHECK(ami(p, q_swapped) == doctest::Approx(ami(p, q)).epsilon(1e-14));
    // Node order permutation with matching labels.
    const Partition p_reordered = Partition::from_labels(
        {"07", "01", "02", "03", "04", "05", "06"}, {0, 0, 1, 2, 0, 1, 2});
    CHECK(ami(p_reordered, q) == doctest::Approx(ami(p, q)).epsilon(1e-14));
}

TEST_CASE("ami requires identical node sets") {
    const Partition p = Partition::from_labels(codes(3), {0, 1, 1});
    const Partition q = Partition::from_labels({"01", "02", "99"}, {0, 1, 1});
    CHECK_THROWS_WITH_AS(ami(p, q), doctest::Contains("different node sets"), DomainError);
}

TEST_CASE("ami_matrix basics") {
    const Partition p = Partition::from_labels(codes(5), {0, 0, 1, 1, 2});
    const Partition q = Partition::from_labels(codes(5), {0, 1, 1, 0, 2});

    const AmiMatrix single = ami_matrix({{"a", p}});
    CHECK(single.values == std::vector<std::vector<double>>{{1.0}});

    const AmiMatrix repeated = ami_matrix({{"a", p}, {"b", p}, {"c", p}});
    for (const auto& row : repeated.values)
        for (double v : row) CHECK(v == 1.0);

    const AmiMatrix m = ami_matrix({{"a", p}, {"b", q}});
    CHECK(m.values[0][1] == m.values[1][0]); // mirrored, exactly
    CHECK(m.values[0][0] == 1.0);
    CHECK(m.values[1][1] == 1.0);
}

TEST_CASE("ami_matrix names the offending pair on mismatch") {
    const Partition p = Partition::from_labels(codes(3), {0, 1, 1});
    const Partition q = Partition::from_labels({"01", "02", "99"}, {0, 1, 1});
    CHECK_THROWS_WITH_AS(ami_matrix({{"a", p}, {"b", q}}),
                         doctest::Contains("AMI(a, b)"), DomainError);
}

TEST_CASE("two-series matrix follows the triangle convention") {
    const Partition a1 = Partition::from_labels(codes(6), {0, 0, 0, 1, 1, 1});
    const Partition a2 = Partition::from_labels(codes(6), {0, 0, 1, 1, 2, 2});
    const Partition b1 = Partition::from_labels(codes(6), {0, 1, 0, 1, 0, 1});
    const Partition b2 = Partition::from_labels(codes(6), {0, 0, 0, 1, 1, 1});
    const AmiMatrix m = two_series_ami({{"1995", a1}, {"1996", a2}},
                                       {{"1995", b1}, {"1996", b2}});
    CHECK(m.values[0][0] == doctest::Approx(ami(a1, b1)));
    CHECK(m.values[1][1] == doctest::Approx(ami(a2, b2)));
    CHECK(m.values[0][1] == doctest::Approx(ami(a1, a2))); // upper: series A
    CHECK(m.values[1][0] == doctest::Approx(ami(b1, b2))); // lower: series B
    CHECK_THROWS_AS(two_series_ami({{"1995", a1}}, {}), DomainError);
}

} // TEST_SUITE
