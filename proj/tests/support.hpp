#pragma once

// Shared fixtures and brute-force reference implementations for the tests.
// Everything here is deliberately naive; it must not call into the code
// under test beyond Graph construction.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "slc/graph.hpp"

namespace slc::testing {

inline Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}
inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}
inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}
inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}); }
inline Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }
inline Graph k4_minus_edge() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }
/// Paths of lengths 1, 2, 3 between vertices 0 and 1.
inline Graph theta123() { return Graph(5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}}); }
/// Two triangles joined by a single edge (2-3).
inline Graph two_triangles_bridge() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
}

/// Every labeled graph on n vertices, by edge bitmask over the pairs i<j.
inline std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1u) es.push_back(pairs[k]);
        out.emplace_back(n, es);
    }
    return out;
}

/// Isomorphism by trying all n! bijections.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& e : a.edges())
            if (!b.has_edge(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph random_relabel(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
}

/// Random connected graph: random spanning tree plus extra random edges.
inline Graph random_connected(int n, int extra, std::mt19937& rng) {
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    std::vector<std::pair<int, int>> rest;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::find(es.begin(), es.end(), std::pair{i, j}) == es.end()) rest.emplace_back(i, j);
    std::shuffle(rest.begin(), rest.end(), rng);
    for (int k = 0; k < extra && k < static_cast<int>(rest.size()); ++k) es.push_back(rest[k]);
    return Graph(n, es);
}

} // namespace slc::testing
