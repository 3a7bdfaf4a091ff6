#pragma once

// Immutable simple undirected graphs plus the structural queries the rest of
// the library leans on: components, bipartiteness, bridges, pendant
// stripping and simple-cycle enumeration.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slc/error.hpp"

namespace slc {

using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    /// Stores the endpoints ordered so that u < v.
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr Vertex other(Vertex x) const { return x == u ? v : u; }
    constexpr bool touches(Vertex x) const { return x == u || x == v; }

    auto operator<=>(const Edge&) const = default;
};

class Graph {
public:
    Graph() = default;

    /// Validated construction. Throws LoopEdge, DuplicateEdge or IndexOutOfRange.
    Graph(int n, const std::vector<std::pair<int, int>>& pairs) : n_(n) {
        if (n < 0) throw Error(Errc::IndexOutOfRange, "negative vertex count");
        edges_.reserve(pairs.size());
        for (auto [a, b] : pairs) {
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw Error(Errc::IndexOutOfRange, "edge (" + std::to_string(a) + "," +
                                                       std::to_string(b) + ") with n=" +
                                                       std::to_string(n));
            if (a == b) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(a));
            edges_.emplace_back(a, b);
        }
        std::sort(edges_.begin(), edges_.end());
        if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
            throw Error(Errc::DuplicateEdge,
                        "edge (" + std::to_string(it->u) + "," + std::to_string(it->v) + ")");
        build_adjacency();
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(edges.size());
        for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
        return Graph(n, pairs);
    }

    static Graph empty(int n) { return Graph(n, {}); }

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(Vertex a, Vertex b) const {
        if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
        return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
    }

    bool is_pendant(Vertex v) const { return degree(v) == 1; }

    std::vector<int> degrees() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

    /// Relabels by `perm` (old vertex i becomes perm[i]).
    Graph relabeled(const std::vector<Vertex>& perm) const {
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (const auto& e : edges_) es.emplace_back(perm.at(e.u), perm.at(e.v));
        return from_edges(n_, es);
    }

    /// Disjoint union; vertices of `other` are shifted by order().
    Graph disjoint_union(const Graph& other) const {
        std::vector<Edge> es = edges_;
        for (const auto& e : other.edges_) es.emplace_back(e.u + n_, e.v + n_);
        return from_edges(n_ + other.n_, es);
    }

    Graph with_vertices(int extra) const { return from_edges(n_ + extra, edges_); }

    Graph with_edge(Vertex a, Vertex b) const {
        std::vector<Edge> es = edges_;
        es.emplace_back(a, b);
        return from_edges(n_, es);
    }

    Graph without_edge(Edge e) const {
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (const auto& f : edges_)
            if (f != e) es.push_back(f);
        return from_edges(n_, es);
    }

    /// Induced subgraph on `keep` (relabeled 0..k-1 in the given order).
    Graph induced(const std::vector<Vertex>& keep) const {
        std::vector<int> pos(n_, -1);
        for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
        std::vector<Edge> es;
        for (const auto& e : edges_)
            if (pos[e.u] >= 0 && pos[e.v] >= 0) es.emplace_back(pos[e.u], pos[e.v]);
        return from_edges(static_cast<int>(keep.size()), es);
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void build_adjacency() {
        adj_.assign(n_, {});
        for (const auto& e : edges_) {
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

inline Graph graph_from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    return Graph(n, pairs);
}

// ---------------------------------------------------------------------------
// Edge-list text format:
//   p <n> <m>
//   <u> <v>        (m lines, 0-based)
// Lines starting with '#' are comments.

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "p " << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::optional<std::pair<int, int>> header;
    std::vector<std::pair<int, int>> pairs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!header) {
            std::string tag;
            int n = -1, m = -1;
            if (!(ls >> tag >> n >> m) || tag != "p" || n < 0 || m < 0)
                throw Error(Errc::ParseError, "line " + std::to_string(lineno) +
                                                  ": expected 'p <n> <m>'");
            header = {n, m};
            continue;
        }
        int a = 0, b = 0;
        std::string rest;
        if (!(ls >> a >> b) || (ls >> rest))
            throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected '<u> <v>'");
        pairs.emplace_back(a, b);
    }
    if (!header) throw Error(Errc::ParseError, "missing 'p <n> <m>' header");
    if (static_cast<int>(pairs.size()) != header->second)
        throw Error(Errc::ParseError, "header announces " + std::to_string(header->second) +
                                          " edges, found " + std::to_string(pairs.size()));
    return Graph(header->first, pairs);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    return parse_edge_list(is);
}

// ---------------------------------------------------------------------------
// Components and structural profile

enum class ComponentKind { Tree, OddUnicyclic, EvenUnicyclic, Other };

inline std::string_view to_string(ComponentKind k) {
    switch (k) {
    case ComponentKind::Tree: return "Tree";
    case ComponentKind::OddUnicyclic: return "OddUnicyclic";
    case ComponentKind::EvenUnicyclic: return "EvenUnicyclic";
    case ComponentKind::Other: return "Other";
    }
    return "?";
}

struct Component {
    std::vector<Vertex> vertices; // ascending
    int edge_count = 0;
    bool bipartite = true;
    ComponentKind kind = ComponentKind::Tree;
};

/// Components ordered by their smallest vertex.
inline std::vector<Component> components(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<Component> out;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        Component c;
        std::vector<Vertex> stack{s};
        color[s] = 0;
        int degree_sum = 0;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            c.vertices.push_back(x);
            degree_sum += g.degree(x);
            for (Vertex y : g.neighbors(x)) {
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    stack.push_back(y);
                } else if (color[y] == color[x]) {
                    c.bipartite = false;
                }
            }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        c.edge_count = degree_sum / 2;
        const int nv = static_cast<int>(c.vertices.size());
        if (c.edge_count == nv - 1)
            c.kind = ComponentKind::Tree;
        else if (c.edge_count == nv)
            c.kind = c.bipartite ? ComponentKind::EvenUnicyclic : ComponentKind::OddUnicyclic;
        else
            c.kind = ComponentKind::Other;
        out.push_back(std::move(c));
    }
    return out;
}

struct StructuralProfile {
    bool connected = false;
    bool bipartite = true;
    int component_count = 0;
    int cyclomatic_number = 0;
    std::vector<ComponentKind> component_kinds;
};

inline StructuralProfile structural_profile(const Graph& g) {
    StructuralProfile p;
    auto comps = components(g);
    p.component_count = static_cast<int>(comps.size());
    p.connected = p.component_count <= 1;
    p.cyclomatic_number = g.size() - g.order() + p.component_count;
    for (const auto& c : comps) {
        p.bipartite = p.bipartite && c.bipartite;
        p.component_kinds.push_back(c.kind);
    }
    return p;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline bool is_bipartite(const Graph& g) { return structural_profile(g).bipartite; }

inline bool is_bicyclic(const Graph& g) {
    return g.order() > 0 && g.size() == g.order() + 1 && is_connected(g);
}

// ---------------------------------------------------------------------------
// Bridges (Tarjan low-link); returned sorted.

inline std::vector<Edge> bridges(const Graph& g) {
    const int n = g.order();
    std::vector<int> tin(n, -1), low(n, 0);
    std::vector<Edge> out;
    int timer = 0;
    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    for (int s = 0; s < n; ++s) {
        if (tin[s] >= 0) continue;
        std::vector<Frame> st{{s, -1, 0}};
        tin[s] = low[s] = timer++;
        while (!st.empty()) {
            auto& f = st.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex y = nb[f.next++];
                if (y == f.parent) continue; // simple graph: single parent edge
                if (tin[y] >= 0) {
                    low[f.v] = std::min(low[f.v], tin[y]);
                } else {
                    tin[y] = low[y] = timer++;
                    st.push_back({y, f.v, 0});
                }
            } else {
                Frame done = f;
                st.pop_back();
                if (!st.empty()) {
                    Vertex p = st.back().v;
                    low[p] = std::min(low[p], low[done.v]);
                    if (low[done.v] > tin[p]) out.emplace_back(p, done.v);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_bridge(const Graph& g, Edge e) {
    auto bs = bridges(g);
    return std::binary_search(bs.begin(), bs.end(), e);
}

// ---------------------------------------------------------------------------
// Pendant stripping: repeatedly delete degree-1 vertices. Returns the
// surviving vertices in ascending order.

inline std::vector<Vertex> core_vertices(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg = g.degrees();
    std::vector<bool> alive(n, true);
    std::vector<Vertex> queue;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) queue.push_back(v);
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        if (!alive[v]) continue;
        alive[v] = false;
        for (Vertex y : g.neighbors(v))
            if (alive[y] && --deg[y] <= 1) queue.push_back(y);
    }
    std::vector<Vertex> keep;
    for (int v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(v);
    return keep;
}

// ---------------------------------------------------------------------------
// Simple cycles

struct Cycle {
    /// Normalized: starts at the smallest vertex and continues towards the
    /// smaller of its two cycle neighbors.
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            es.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
        std::sort(es.begin(), es.end());
        return es;
    }

    bool contains(Vertex v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    bool contains_edge(Edge e) const {
        const std::size_t k = vertices.size();
        for (std::size_t i = 0; i < k; ++i)
            if (Edge(vertices[i], vertices[(i + 1) % k]) == e) return true;
        return false;
    }

    auto operator<=>(const Cycle&) const = default;
};

inline Cycle normalize_cycle(std::vector<Vertex> seq) {
    auto it = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), it, seq.end());
    if (seq.size() > 2 && seq.back() < seq[1]) std::reverse(seq.begin() + 1, seq.end());
    return Cycle{std::move(seq)};
}

/// All simple cycles, sorted by (length, vertex sequence). Exponential in
/// general; intended for the low-cyclomatic graphs handled here.
inline std::vector<Cycle> enumerate_cycles(const Graph& g) {
    const int n = g.order();
    std::vector<Cycle> out;
    std::vector<Vertex> path;
    std::vector<bool> on_path(n, false);
    // Restrict to the 2-core: vertices outside it lie on no cycle.
    std::vector<bool> in_core(n, false);
    for (Vertex v : core_vertices(g)) in_core[v] = true;

    for (Vertex s = 0; s < n; ++s) {
        if (!in_core[s]) continue;
        path.assign(1, s);
        on_path[s] = true;
        // Iterative DFS over vertices > s.
        std::vector<std::size_t> next{0};
        while (!path.empty()) {
            Vertex x = path.back();
            const auto& nb = g.neighbors(x);
            if (next.back() < nb.size()) {
                Vertex y = nb[next.back()++];
                if (y == s && path.size() >= 3 && path[1] < path.back()) {
                    out.push_back(Cycle{path});
                } else if (y > s && in_core[y] && !on_path[y]) {
                    path.push_back(y);
                    on_path[y] = true;
                    next.push_back(0);
                }
            } else {
                on_path[x] = false;
                path.pop_back();
                next.pop_back();
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return out;
}

inline int count_common_vertices(const Cycle& a, const Cycle& b) {
    int c = 0;
    for (Vertex v : a.vertices)
        if (b.contains(v)) ++c;
    return c;
}

inline std::vector<Edge> common_edges(const Cycle& a, const Cycle& b) {
    auto ea = a.edges();
    auto eb = b.edges();
    std::vector<Edge> out;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
    return out;
}

} // namespace slc
