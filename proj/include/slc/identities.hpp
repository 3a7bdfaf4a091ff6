#pragma once

// Polynomial composition rules for two graph operations, checked exactly:
//   * joining G1 at u to G2 at v by a new edge,
//   * hanging k pendant vertices on a vertex v of H.
// Each rule has the same shape for L and for Q; both are checked.

#include "slc/charpoly.hpp"
#include "slc/graph.hpp"

namespace slc {

struct IdentityCheck {
    bool signless = false;
    bool laplacian = false;
    bool holds() const { return signless && laplacian; }
};

/// G1 and G2 joined by the edge (u, n1 + v).
inline Graph join_by_edge(const Graph& g1, Vertex u, const Graph& g2, Vertex v) {
    if (u < 0 || u >= g1.order() || v < 0 || v >= g2.order())
        throw Error(Errc::IndexOutOfRange, "join endpoint out of range");
    return g1.disjoint_union(g2).with_edge(u, g1.order() + v);
}

/// H with k new pendant vertices (labeled n_H .. n_H+k-1) attached to v.
inline Graph attach_pendants(const Graph& h, Vertex v, int k) {
    if (v < 0 || v >= h.order()) throw Error(Errc::IndexOutOfRange, "pendant host out of range");
    std::vector<Edge> es = h.edges();
    for (int i = 0; i < k; ++i) es.emplace_back(v, h.order() + i);
    return Graph::from_edges(h.order() + k, es);
}

inline IdentityCheck check_join_identity(const Graph& g1, Vertex u, const Graph& g2, Vertex v) {
    const Graph g = join_by_edge(g1, u, g2, v);
    IdentityCheck r;
    for (MatrixKind kind : {MatrixKind::Signless, MatrixKind::Laplacian}) {
        const IntPoly p1 = charpoly(g1, kind), p2 = charpoly(g2, kind);
        const IntPoly p1u = vertex_deleted_charpoly(g1, u, kind);
        const IntPoly p2v = vertex_deleted_charpoly(g2, v, kind);
        const IntPoly rhs = p1 * p2 - p1 * p2v - p2 * p1u;
        const bool ok = charpoly(g, kind) == rhs;
        (kind == MatrixKind::Signless ? r.signless : r.laplacian) = ok;
    }
    return r;
}

inline bool identity_check_join(const Graph& g1, Vertex u, const Graph& g2, Vertex v) {
    return check_join_identity(g1, u, g2, v).holds();
}

inline IdentityCheck check_pendant_identity(const Graph& h, Vertex v, int k) {
    if (h.order() < 2) throw Error(Errc::OutOfRange, "host graph needs at least two vertices");
    if (k < 1) throw Error(Errc::OutOfRange, "at least one pendant vertex required");
    const Graph g = attach_pendants(h, v, k);
    const IntPoly xm1 = IntPoly::linear(1);
    IdentityCheck r;
    for (MatrixKind kind : {MatrixKind::Signless, MatrixKind::Laplacian}) {
        const IntPoly ph = charpoly(h, kind);
        const IntPoly phv = vertex_deleted_charpoly(h, v, kind);
        const IntPoly rhs = xm1.pow(k) * ph - BigInt(k) * (IntPoly::x() * xm1.pow(k - 1) * phv);
        const bool ok = charpoly(g, kind) == rhs;
        (kind == MatrixKind::Signless ? r.signless : r.laplacian) = ok;
    }
    return r;
}

inline bool identity_check_pendants(const Graph& h, Vertex v, int k) {
    return check_pendant_identity(h, v, k).holds();
}

} // namespace slc
