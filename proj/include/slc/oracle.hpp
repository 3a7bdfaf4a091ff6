#pragma once

// Combinatorial coefficient oracles, independent of the determinant route.
//
//   Laplacian:  c_{n-k} = sum over spanning forests F with k trees of the
//               product of the tree orders.
//   Signless:   phi_i   = sum over spanning TU-subgraphs H with i edges of
//               W(H) = 4^c * prod(tree orders), where every component of H
//               is a tree or a unicyclic graph whose cycle is odd and c
//               counts the unicyclic components.
//
// Both sums are taken by walking all edge subsets depth first with a
// rollback union-find that tracks bipartite parity; a branch is cut as soon
// as a component stops being admissible, since adding edges never repairs it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slc/bicyclic.hpp"
#include "slc/bigint.hpp"
#include "slc/charpoly.hpp"
#include "slc/error.hpp"
#include "slc/graph.hpp"

namespace slc {

inline constexpr int kOracleMaxEdges = 24;

struct TUSubgraph {
    std::vector<Edge> edge_subset;
    std::vector<int> tree_orders; // ascending, isolated vertices included as 1
    int odd_unicyclic_count = 0;
};

/// W(H) = 4^c * prod(tree orders); an empty product is 1.
inline BigInt tu_weight(const TUSubgraph& h) {
    BigInt w = 1;
    for (int i = 0; i < h.odd_unicyclic_count; ++i) w *= 4;
    for (int t : h.tree_orders) w *= t;
    return w;
}

/// Decomposes the spanning subgraph of `host` with the given edges, or
/// returns nullopt when some component is neither a tree nor odd unicyclic.
inline std::optional<TUSubgraph> as_tu_subgraph(const Graph& host, const std::vector<Edge>& edges) {
    const Graph h = Graph::from_edges(host.order(), edges);
    TUSubgraph out;
    out.edge_subset = h.edges();
    for (const auto& c : components(h)) {
        switch (c.kind) {
        case ComponentKind::Tree: out.tree_orders.push_back(static_cast<int>(c.vertices.size())); break;
        case ComponentKind::OddUnicyclic: ++out.odd_unicyclic_count; break;
        default: return std::nullopt;
        }
    }
    std::sort(out.tree_orders.begin(), out.tree_orders.end());
    return out;
}

namespace detail {

/// Union-find without path compression so every union can be undone.
class ParityDsu {
public:
    explicit ParityDsu(int n) : parent_(n), size_(n, 1), edges_(n, 0), parity_(n, 0), odd_(n, 0) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    std::pair<int, int> find(int x) const {
        int p = 0;
        while (parent_[x] != x) {
            p ^= parity_[x];
            x = parent_[x];
        }
        return {x, p};
    }

    /// Adds edge (a, b). Returns false (state unchanged) if the component
    /// would stop being admissible.
    bool unite(int a, int b, bool allow_odd_cycle) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if (!allow_odd_cycle || edges_[ra] + 1 > size_[ra] || pa != pb) return false;
            history_.push_back({ra, -1, odd_[ra]});
            ++edges_[ra];
            odd_[ra] = 1;
            return true;
        }
        if (edges_[ra] + edges_[rb] + 1 > size_[ra] + size_[rb]) return false;
        if (size_[ra] < size_[rb]) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        history_.push_back({ra, rb, odd_[ra]});
        parent_[rb] = ra;
        parity_[rb] = static_cast<std::uint8_t>(pa ^ pb ^ 1);
        size_[ra] += size_[rb];
        edges_[ra] += edges_[rb] + 1;
        odd_[ra] = odd_[ra] | odd_[rb];
        return true;
    }

    void undo() {
        const Step s = history_.back();
        history_.pop_back();
        if (s.child < 0) {
            --edges_[s.root];
            odd_[s.root] = s.root_odd;
            return;
        }
        parent_[s.child] = s.child;
        parity_[s.child] = 0;
        size_[s.root] -= size_[s.child];
        edges_[s.root] -= edges_[s.child] + 1;
        odd_[s.root] = s.root_odd;
    }

    /// Product of tree orders times 4 per unicyclic component.
    std::uint64_t weight() const {
        std::uint64_t w = 1;
        for (int x = 0; x < static_cast<int>(parent_.size()); ++x) {
            if (parent_[x] != x) continue;
            const std::uint64_t f = edges_[x] == size_[x] ? 4u : static_cast<std::uint64_t>(size_[x]);
            if (__builtin_mul_overflow(w, f, &w)) throw std::overflow_error("TU weight overflow");
        }
        return w;
    }

private:
    struct Step {
        int root;
        int child; // -1: edge closed a cycle inside root
        std::uint8_t root_odd;
    };
    std::vector<int> parent_, size_, edges_;
    std::vector<std::uint8_t> parity_, odd_;
    std::vector<Step> history_;
};

inline std::vector<BigInt> subset_weight_sums(const Graph& g, bool allow_odd_cycles) {
    if (g.size() > kOracleMaxEdges)
        throw Error(Errc::TooManyEdges, std::to_string(g.size()) + " edges exceeds the limit of " +
                                            std::to_string(kOracleMaxEdges));
    const auto& es = g.edges();
    const int m = static_cast<int>(es.size());
    std::vector<std::uint64_t> sums(g.order() + 1, 0);
    ParityDsu dsu(g.order());

    // Explicit recursion over edge index with include/exclude branches.
    auto rec = [&](auto&& self, int i, int taken) -> void {
        if (i == m) {
            std::uint64_t& slot = sums.at(taken);
            if (__builtin_add_overflow(slot, dsu.weight(), &slot))
                throw std::overflow_error("coefficient accumulator overflow");
            return;
        }
        if (taken < g.order() && dsu.unite(es[i].u, es[i].v, allow_odd_cycles)) {
            self(self, i + 1, taken + 1);
            dsu.undo();
        }
        self(self, i + 1, taken);
    };
    rec(rec, 0, 0);

    std::vector<BigInt> out(sums.begin(), sums.end());
    return out;
}

} // namespace detail

inline CoeffVector signless_coeffs_oracle(const Graph& g) {
    CoeffVector cv;
    cv.kind = MatrixKind::Signless;
    cv.values = detail::subset_weight_sums(g, true);
    if (cv.values.at(0) != 1) throw std::logic_error("phi_0 must be 1");
    return cv;
}

inline CoeffVector laplacian_coeffs_oracle(const Graph& g) {
    CoeffVector cv;
    cv.kind = MatrixKind::Laplacian;
    cv.values = detail::subset_weight_sums(g, false);
    return cv;
}

/// Kirchhoff: determinant of L with one row and column removed.
inline BigInt spanning_tree_count(const Graph& g) {
    if (!is_connected(g)) throw Error(Errc::Disconnected, "spanning trees need a connected graph");
    if (g.order() <= 1) return 1;
    IntMatrix l = graph_matrix(g, MatrixKind::Laplacian);
    IntMatrix minor;
    for (int i = 1; i < g.order(); ++i) minor.emplace_back(l[i].begin() + 1, l[i].end());
    return determinant(minor);
}

// ---------------------------------------------------------------------------
// Shortcut values for bicyclic graphs, next to the closed expressions that
// are often quoted for them.

struct PhiExtremes {
    BigInt phi1;  // 2(n+1)
    BigInt phi_n; // sum over single-edge deletions G-e that are TU-subgraphs
    std::optional<BigInt> phi_n_minus_1_if_bipartite; // n * tau(G)
    BigInt spanning_trees;
    bool bipartite = false;

    // Cycle-count formulas, evaluated literally on the minimal cycle pair.
    // phi_n: non-bipartite -> |E(C2)\E(C1)| if g(C2) even, else
    //        |E(C1)\E(C2)| + |E(C2)\E(C1)|, with C1 odd; bipartite -> 0.
    BigInt formula_phi_n;
    // Same count read as TU-subgraphs of weight 4 each.
    BigInt formula_phi_n_weighted;
    // bipartite only: |E(C1)||E(C2)| - s(s-1) with s = |E(C1) cap E(C2)|.
    std::optional<BigInt> formula_phi_n_minus_1;
};

inline PhiExtremes phi_extremes_bicyclic(const Graph& g) {
    detail::require_bicyclic(g);
    const int n = g.order();
    PhiExtremes r;
    r.phi1 = 2 * (n + 1);
    r.bipartite = is_bipartite(g);
    r.spanning_trees = spanning_tree_count(g);

    // G - e has n edges; it is TU iff every component is odd unicyclic.
    r.phi_n = 0;
    for (const auto& e : g.edges()) {
        const Graph h = g.without_edge(e);
        BigInt w = 1;
        bool ok = true;
        for (const auto& c : components(h)) {
            if (c.kind != ComponentKind::OddUnicyclic) {
                ok = false;
                break;
            }
            w *= 4;
        }
        if (ok) r.phi_n += w;
    }

    const CyclePair pair = minimal_cycle_pair(g);
    const int s = static_cast<int>(pair.shared_edges.size());
    if (r.bipartite) {
        r.phi_n_minus_1_if_bipartite = BigInt(n) * r.spanning_trees;
        r.formula_phi_n = 0;
        r.formula_phi_n_weighted = 0;
        const BigInt prod = BigInt(pair.c1.length()) * pair.c2.length();
        r.formula_phi_n_minus_1 = s >= 1 ? BigInt(prod - BigInt(s) * (s - 1)) : prod;
    } else {
        const Cycle& c1 = pair.c1.length() % 2 == 1 ? pair.c1 : pair.c2;
        const Cycle& c2 = pair.c1.length() % 2 == 1 ? pair.c2 : pair.c1;
        if (c2.length() % 2 == 0)
            r.formula_phi_n = c2.length() - s;
        else
            r.formula_phi_n = (c1.length() - s) + (c2.length() - s);
        r.formula_phi_n_weighted = 4 * r.formula_phi_n;
    }
    return r;
}

} // namespace slc
