#include <gtest/gtest.h>

#include <array>
#include <map>
#include <set>

#include "slc/canonical.hpp"
#include "support.hpp"

using namespace slc;
using namespace slc::testing;

TEST(Canonical, RelabelingInvariant) {
    std::mt19937 rng(3);
    for (const Graph& g : {bowtie(), k23(), theta123(), two_triangles_bridge(), cycle_graph(7)}) {
        const auto code = canonical_form(g);
        for (int i = 0; i < 20; ++i) EXPECT_EQ(canonical_form(random_relabel(g, rng)), code);
    }
}

TEST(Canonical, DistinguishesPathAndStar) {
    EXPECT_NE(canonical_form(path_graph(4)), canonical_form(star(3)));
}

TEST(Canonical, AllFiveEdgeSubgraphsOfK4Agree) {
    std::vector<std::pair<int, int>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::set<CanonicalCode> codes;
    for (int drop = 0; drop < 6; ++drop) {
        auto es = k4;
        es.erase(es.begin() + drop);
        codes.insert(canonical_form(Graph(4, es)));
    }
    EXPECT_EQ(codes.size(), 1u);
}

TEST(Canonical, CanonicalGraphHasCanonicalCode) {
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_connected(5 + i % 6, i % 5, rng);
        Graph c = canonical_graph(g);
        EXPECT_TRUE(brute_isomorphic(g, c) || g.order() > 8);
        EXPECT_EQ(canonical_form(c), canonical_form(g));
    }
}

TEST(Canonical, TooLarge) {
    EXPECT_NO_THROW(canonical_form(path_graph(12)));
    try {
        canonical_form(path_graph(13));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TooLarge);
    }
}

// Codes partition all labeled graphs on n <= 6 vertices exactly as
// permutation brute force does: within a code class every graph is
// isomorphic to the class representative, and representatives of distinct
// classes are pairwise non-isomorphic.
TEST(Canonical, AgreesWithBruteForceUpToSix) {
    const std::array<int, 7> known_classes{1, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        std::map<CanonicalCode, Graph> reps;
        for (const Graph& g : all_labeled_graphs(n)) {
            auto code = canonical_form(g);
            auto [it, fresh] = reps.emplace(code, g);
            if (!fresh) {
                ASSERT_TRUE(brute_isomorphic(g, it->second)) << format_edge_list(g);
            }
        }
        std::vector<Graph> list;
        for (auto& [c, g] : reps) list.push_back(g);
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                ASSERT_FALSE(brute_isomorphic(list[i], list[j]));
        EXPECT_EQ(static_cast<int>(reps.size()), known_classes[n]);
    }
}
