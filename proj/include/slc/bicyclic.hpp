#pragma once

// Classification of connected bicyclic graphs by their base (the pendant-free
// core) and extraction of the two minimal cycles.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "slc/error.hpp"
#include "slc/graph.hpp"

namespace slc {

enum class BaseKind { VertexShared, PathJoined, Theta };

inline std::string_view to_string(BaseKind k) {
    switch (k) {
    case BaseKind::VertexShared: return "VertexShared";
    case BaseKind::PathJoined: return "PathJoined";
    case BaseKind::Theta: return "Theta";
    }
    return "?";
}

/// Shape of a bicyclic base.
///   VertexShared(p, q): cycles C_p and C_q sharing one vertex.
///   PathJoined(p, l, q): C_p and C_q joined by a path of l >= 1 edges.
///   Theta(k, l, m): three internally disjoint paths with k, l, m edges
///   between the same two vertices.
/// All parameters are edge counts.
struct BaseSpec {
    BaseKind kind = BaseKind::VertexShared;
    std::array<int, 3> params{0, 0, 0};

    static BaseSpec vertex_shared(int p, int q) { return {BaseKind::VertexShared, {p, q, 0}}; }
    static BaseSpec path_joined(int p, int l, int q) { return {BaseKind::PathJoined, {p, l, q}}; }
    static BaseSpec theta(int k, int l, int m) { return {BaseKind::Theta, {k, l, m}}; }

    /// Canonical parameter order: p <= q for the cycle pairs, k >= l >= m for theta.
    BaseSpec normalized() const {
        BaseSpec s = *this;
        switch (kind) {
        case BaseKind::VertexShared:
            if (s.params[0] > s.params[1]) std::swap(s.params[0], s.params[1]);
            break;
        case BaseKind::PathJoined:
            if (s.params[0] > s.params[2]) std::swap(s.params[0], s.params[2]);
            break;
        case BaseKind::Theta:
            std::sort(s.params.begin(), s.params.end(), std::greater<>());
            break;
        }
        return s;
    }

    bool valid() const {
        const auto [a, b, c] = params;
        switch (kind) {
        case BaseKind::VertexShared: return a >= 3 && b >= 3;
        case BaseKind::PathJoined: return a >= 3 && c >= 3 && b >= 1;
        case BaseKind::Theta: {
            if (a < 1 || b < 1 || c < 1) return false;
            int ones = (a == 1) + (b == 1) + (c == 1);
            return ones <= 1;
        }
        }
        return false;
    }

    int vertex_count() const {
        const auto [a, b, c] = params;
        switch (kind) {
        case BaseKind::VertexShared: return a + b - 1;
        case BaseKind::PathJoined: return a + b + c - 1;
        case BaseKind::Theta: return a + b + c - 1;
        }
        return 0;
    }

    /// Lengths of the two minimal cycles, ascending.
    std::array<int, 2> minimal_cycle_lengths() const {
        BaseSpec s = normalized();
        const auto [a, b, c] = s.params;
        switch (kind) {
        case BaseKind::VertexShared: return {a, b};
        case BaseKind::PathJoined: return {a, c};
        case BaseKind::Theta: return {b + c, a + c};
        }
        return {0, 0};
    }

    std::string to_string() const {
        const auto [a, b, c] = params;
        switch (kind) {
        case BaseKind::VertexShared: return "B(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case BaseKind::PathJoined:
            return "B(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        case BaseKind::Theta:
            return "B(P" + std::to_string(a) + ",P" + std::to_string(b) + ",P" + std::to_string(c) + ")";
        }
        return "?";
    }

    bool operator==(const BaseSpec&) const = default;
};

enum class ParityClass { OddClass, EvenClass };

inline std::string_view to_string(ParityClass c) {
    return c == ParityClass::OddClass ? "odd" : "even";
}

struct BicyclicClass {
    Graph base;                       // core, relabeled 0..k-1
    std::vector<Vertex> base_vertices; // base vertex i is original vertex base_vertices[i]
    BaseSpec shape;                    // normalized
    int g1 = 0;                        // g1 <= g2
    int g2 = 0;
    ParityClass parity = ParityClass::OddClass;
};

namespace detail {

struct Branch {
    Vertex end;
    int length;
    Vertex last_before_end;
};

inline Branch walk_branch(const Graph& g, Vertex start, Vertex first) {
    Vertex prev = start, cur = first;
    int len = 1;
    while (g.degree(cur) == 2) {
        const auto& nb = g.neighbors(cur);
        Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        ++len;
    }
    return {cur, len, prev};
}

inline void require_bicyclic(const Graph& g) {
    if (!is_bicyclic(g))
        throw Error(Errc::NotBicyclic, "graph with n=" + std::to_string(g.order()) + ", m=" +
                                           std::to_string(g.size()) +
                                           " is not a connected bicyclic graph");
}

} // namespace detail

/// Shape of a pendant-free bicyclic graph (min degree >= 2, m = n + 1).
inline BaseSpec base_shape(const Graph& core) {
    std::vector<Vertex> branch_vertices;
    for (Vertex v = 0; v < core.order(); ++v)
        if (core.degree(v) >= 3) branch_vertices.push_back(v);

    if (branch_vertices.size() == 1) {
        const Vertex h = branch_vertices[0];
        std::vector<bool> used(core.order(), false);
        std::vector<int> loops;
        for (Vertex y : core.neighbors(h)) {
            if (used[y]) continue;
            auto b = detail::walk_branch(core, h, y);
            used[y] = true;
            used[b.last_before_end] = true;
            loops.push_back(b.length);
        }
        return BaseSpec::vertex_shared(loops.at(0), loops.at(1)).normalized();
    }
    if (branch_vertices.size() == 2) {
        const Vertex a = branch_vertices[0];
        std::vector<bool> used(core.order(), false);
        std::vector<int> to_other;
        int loop_a = 0;
        for (Vertex y : core.neighbors(a)) {
            if (used[y]) continue;
            auto b = detail::walk_branch(core, a, y);
            used[y] = true;
            if (b.end == a) {
                used[b.last_before_end] = true;
                loop_a = b.length;
            } else {
                to_other.push_back(b.length);
            }
        }
        if (loop_a > 0) {
            const Vertex c = branch_vertices[1];
            std::vector<bool> used_c(core.order(), false);
            int loop_c = 0;
            for (Vertex y : core.neighbors(c)) {
                if (used_c[y]) continue;
                auto b = detail::walk_branch(core, c, y);
                used_c[y] = true;
                if (b.end == c) {
                    used_c[b.last_before_end] = true;
                    loop_c = b.length;
                }
            }
            return BaseSpec::path_joined(loop_a, to_other.at(0), loop_c).normalized();
        }
        return BaseSpec::theta(to_other.at(0), to_other.at(1), to_other.at(2)).normalized();
    }
    throw Error(Errc::NotBicyclic, "core has an unexpected branch structure");
}

inline BicyclicClass classify_bicyclic(const Graph& g) {
    detail::require_bicyclic(g);
    BicyclicClass c;
    c.base_vertices = core_vertices(g);
    c.base = g.induced(c.base_vertices);
    c.shape = base_shape(c.base);
    auto lens = c.shape.minimal_cycle_lengths();
    c.g1 = lens[0];
    c.g2 = lens[1];
    c.parity = (c.g1 % 2 == 1 || c.g2 % 2 == 1) ? ParityClass::OddClass : ParityClass::EvenClass;
    return c;
}

inline ParityClass parity_class(const Graph& g) { return classify_bicyclic(g).parity; }

struct CyclePair {
    Cycle c1; // shorter (ties broken by vertex sequence)
    Cycle c2;
    std::vector<Edge> shared_edges;
    int shared_vertices = 0;
};

/// The two shortest cycles of a connected bicyclic graph. Among cycles of
/// equal length the lexicographically smallest normalized vertex sequence
/// wins.
inline CyclePair minimal_cycle_pair(const Graph& g) {
    detail::require_bicyclic(g);
    auto cycles = enumerate_cycles(g);
    if (cycles.size() < 2) throw Error(Errc::NotBicyclic, "fewer than two cycles");
    CyclePair p;
    p.c1 = cycles[0];
    p.c2 = cycles[1];
    p.shared_edges = common_edges(p.c1, p.c2);
    p.shared_vertices = count_common_vertices(p.c1, p.c2);
    return p;
}

} // namespace slc
