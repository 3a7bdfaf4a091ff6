#include <gtest/gtest.h>

#include <random>

#include "slc/canonical.hpp"
#include "slc/oracle.hpp"
#include "support.hpp"

using namespace slc;
using namespace slc::testing;

namespace {

std::string vec(const CoeffVector& c) { return c.to_string(); }

// Reference spanning-tree count: number of (n-1)-edge subsets that are acyclic.
long long trees_by_subsets(const Graph& g) {
    const auto& es = g.edges();
    long long count = 0;
    for (std::uint32_t mask = 0; mask < (1u << es.size()); ++mask) {
        if (__builtin_popcount(mask) != g.order() - 1) continue;
        std::vector<Edge> sub;
        for (std::size_t k = 0; k < es.size(); ++k)
            if (mask >> k & 1u) sub.push_back(es[k]);
        if (is_connected(Graph::from_edges(g.order(), sub))) ++count;
    }
    return count;
}

// Reference TU sum built on as_tu_subgraph + tu_weight over every subset.
CoeffVector tu_by_subsets(const Graph& g) {
    CoeffVector c;
    c.values.assign(g.order() + 1, 0);
    const auto& es = g.edges();
    for (std::uint32_t mask = 0; mask < (1u << es.size()); ++mask) {
        std::vector<Edge> sub;
        for (std::size_t k = 0; k < es.size(); ++k)
            if (mask >> k & 1u) sub.push_back(es[k]);
        if (auto h = as_tu_subgraph(g, sub)) c.values.at(sub.size()) += tu_weight(*h);
    }
    return c;
}

} // namespace

TEST(TuWeight, Examples) {
    EXPECT_EQ(tu_weight({{}, {1, 1, 2}, 0}), 2);
    EXPECT_EQ(tu_weight({{}, {}, 1}), 4);
    EXPECT_EQ(tu_weight({{}, {3}, 1}), 12);
    EXPECT_EQ(tu_weight({{}, {}, 0}), 1);
}

TEST(TuSubgraph, Decomposition) {
    auto h = as_tu_subgraph(bowtie(), {Edge(0, 1), Edge(1, 2), Edge(0, 2)});
    ASSERT_TRUE(h);
    EXPECT_EQ(h->odd_unicyclic_count, 1);
    EXPECT_EQ(h->tree_orders, (std::vector<int>{1, 1}));
    EXPECT_FALSE(as_tu_subgraph(cycle_graph(4), cycle_graph(4).edges()));
    EXPECT_FALSE(as_tu_subgraph(bowtie(), bowtie().edges()));
}

TEST(SignlessOracle, Examples) {
    EXPECT_EQ(vec(signless_coeffs_oracle(triangle())), "(1,6,9,4)");
    EXPECT_EQ(vec(signless_coeffs_oracle(k4_minus_edge())), "(1,10,32,40,16)");
    EXPECT_EQ(vec(signless_coeffs_oracle(Graph(2, {{0, 1}}))), "(1,2,0)");
    EXPECT_EQ(vec(signless_coeffs_oracle(k23())), "(1,12,51,92,60,0)");
}

TEST(LaplacianOracle, Examples) {
    EXPECT_EQ(vec(laplacian_coeffs_oracle(triangle())), "(1,6,9,0)");
    EXPECT_EQ(vec(laplacian_coeffs_oracle(cycle_graph(4))), "(1,8,20,16,0)");
    EXPECT_EQ(vec(laplacian_coeffs_oracle(Graph::empty(2))), "(1,0,0)");
}

TEST(Oracle, TooManyEdges) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) es.emplace_back(i, j);
    Graph k8(8, es);
    try {
        signless_coeffs_oracle(k8);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TooManyEdges);
    }
    EXPECT_THROW(laplacian_coeffs_oracle(k8), Error);
}

TEST(Oracle, PrunedWalkMatchesNaiveSubsets) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_connected(3 + trial % 5, trial % 6, rng);
        EXPECT_EQ(signless_coeffs_oracle(g), tu_by_subsets(g)) << format_edge_list(g);
    }
}

TEST(Oracle, AgreesWithCharpolyOnAllSmallGraphs) {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : all_labeled_graphs(n)) {
            ASSERT_EQ(signless_coeffs_oracle(g), signless_coeffs(g)) << format_edge_list(g);
            ASSERT_EQ(laplacian_coeffs_oracle(g), laplacian_coeffs(g)) << format_edge_list(g);
        }
    }
}

TEST(Oracle, AgreesWithCharpolyOnRandomGraphs) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 6 + trial % 3;
        Graph g = random_connected(n, trial % 6, rng);
        const auto q = signless_coeffs_oracle(g), l = laplacian_coeffs_oracle(g);
        EXPECT_EQ(q, signless_coeffs(g));
        EXPECT_EQ(l, laplacian_coeffs(g));
        EXPECT_EQ(q.values.back(), determinant(graph_matrix(g, MatrixKind::Signless)));
        if (is_bipartite(g)) {
            EXPECT_EQ(q, l);
        }
    }
}

TEST(SpanningTrees, Examples) {
    EXPECT_EQ(spanning_tree_count(triangle()), 3);
    EXPECT_EQ(spanning_tree_count(k23()), 12);
    EXPECT_EQ(spanning_tree_count(k4_minus_edge()), 8);
    EXPECT_EQ(spanning_tree_count(Graph::empty(1)), 1);
    EXPECT_EQ(trees_by_subsets(k23()), 12);
    EXPECT_EQ(trees_by_subsets(k4_minus_edge()), 8);
    try {
        spanning_tree_count(Graph::empty(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::Disconnected);
    }
}

TEST(PhiExtremes, AuditExamples) {
    auto k = phi_extremes_bicyclic(k4_minus_edge());
    EXPECT_EQ(k.phi1, 10);
    EXPECT_EQ(k.phi_n, 16);
    EXPECT_EQ(k.formula_phi_n, 4);
    EXPECT_EQ(k.formula_phi_n_weighted, 16);
    EXPECT_FALSE(k.phi_n_minus_1_if_bipartite);

    auto t = phi_extremes_bicyclic(theta123());
    EXPECT_EQ(t.phi_n, 16);
    EXPECT_EQ(t.formula_phi_n, 3);
    EXPECT_EQ(t.formula_phi_n_weighted, 12);

    auto b = phi_extremes_bicyclic(k23());
    EXPECT_EQ(b.phi_n, 0);
    EXPECT_EQ(b.spanning_trees, 12);
    ASSERT_TRUE(b.phi_n_minus_1_if_bipartite);
    EXPECT_EQ(*b.phi_n_minus_1_if_bipartite, 60);
    ASSERT_TRUE(b.formula_phi_n_minus_1);
    EXPECT_EQ(*b.formula_phi_n_minus_1, 14);

    EXPECT_THROW(phi_extremes_bicyclic(triangle()), Error);
}

TEST(PhiExtremes, MatchOracleOnRandomBicyclic) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + trial % 5;
        Graph g = random_connected(n, 2, rng);
        auto r = phi_extremes_bicyclic(g);
        auto o = signless_coeffs_oracle(g);
        EXPECT_EQ(r.phi1, o[1]);
        EXPECT_EQ(r.phi_n, o[n]) << format_edge_list(g);
        if (r.phi_n_minus_1_if_bipartite) {
            EXPECT_EQ(*r.phi_n_minus_1_if_bipartite, o[n - 1]);
        }
    }
}
