#pragma once

// Coefficient-decreasing graph transformations and the reduction of a
// connected bicyclic graph to the extremal graph of its parity class.
//
//   sigma                 v carries p >= 1 pendants and one non-pendant
//                         neighbour u; the pendants move to u.
//   contract_to_pendant   a non-pendant bridge uv is contracted into one
//                         vertex and a new pendant is hung on it.
//   shorten_cycle         u~v~w consecutive on a cycle of length >= 5; every
//                         other neighbour of v and w moves to u, w is
//                         re-attached to u, so v and w become pendants of u
//                         and the cycle loses two vertices.
//   relocate_pendants     pendants of some source vertices move to a target.
//
// All four keep the vertex count.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "slc/bicyclic.hpp"
#include "slc/canonical.hpp"
#include "slc/charpoly.hpp"
#include "slc/error.hpp"
#include "slc/families.hpp"
#include "slc/graph.hpp"

namespace slc {

enum class TransformKind { Sigma, ContractToPendant, ShortenCycle, RelocatePendants, ClosedFormComparison };

inline std::string_view to_string(TransformKind k) {
    switch (k) {
    case TransformKind::Sigma: return "Sigma";
    case TransformKind::ContractToPendant: return "ContractToPendant";
    case TransformKind::ShortenCycle: return "ShortenCycle";
    case TransformKind::RelocatePendants: return "RelocatePendants";
    case TransformKind::ClosedFormComparison: return "ClosedFormComparison";
    }
    return "?";
}

struct TransformRecord {
    TransformKind kind = TransformKind::Sigma;
    std::string detail; // arguments, e.g. "u=2 v=3" or "move B3.a"
    Graph input;
    Graph output;
    Dominance dominance; // input relative to output
};

inline TransformRecord make_record(TransformKind kind, std::string detail, const Graph& in, const Graph& out) {
    return {kind, std::move(detail), in, out, compare_dominance(signless_coeffs(in), signless_coeffs(out))};
}

/// Indices at which equality is claimed for a transformation of `g`:
/// {0,1,n} for non-bipartite and {0,1,n-1,n} for bipartite hosts (sigma and
/// bridge contraction), {0,1} for cycle shortening (plus n when phi_n = 0 on
/// both sides), {0,1,n-1,n} for the pendant moves.
inline std::vector<int> claimed_equality_indices(TransformKind kind, const Graph& g) {
    const int n = g.order();
    const bool bip = is_bipartite(g);
    switch (kind) {
    case TransformKind::Sigma:
    case TransformKind::ContractToPendant:
        return bip ? std::vector<int>{0, 1, n - 1, n} : std::vector<int>{0, 1, n};
    case TransformKind::ShortenCycle: return bip ? std::vector<int>{0, 1, n} : std::vector<int>{0, 1};
    case TransformKind::RelocatePendants: return {0, 1, n - 1, n};
    case TransformKind::ClosedFormComparison: return {};
    }
    return {};
}

namespace detail {

inline void require_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order())
        throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " with n=" + std::to_string(g.order()));
}

inline std::string triple_str(Vertex u, Vertex v, Vertex w) {
    return "u=" + std::to_string(u) + " v=" + std::to_string(v) + " w=" + std::to_string(w);
}

inline bool is_star(const Graph& g) {
    if (g.order() < 2 || g.size() != g.order() - 1) return false;
    for (Vertex c = 0; c < g.order(); ++c)
        if (g.degree(c) == g.order() - 1) return true;
    return false;
}

} // namespace detail

// ---------------------------------------------------------------------------
// sigma

inline Graph sigma(const Graph& g, Vertex v) {
    detail::require_vertex(g, v);
    if (detail::is_star(g)) throw Error(Errc::NotApplicable, "sigma is undefined on a star");
    std::vector<Vertex> pendants, others;
    for (Vertex y : g.neighbors(v)) (g.is_pendant(y) ? pendants : others).push_back(y);
    if (others.size() != 1 || pendants.empty())
        throw Error(Errc::NotApplicable, "vertex " + std::to_string(v) +
                                             " needs exactly one non-pendant neighbour and at least one pendant");
    const Vertex u = others[0];
    std::vector<Edge> es;
    for (const auto& e : g.edges()) {
        if (e.touches(v) && g.is_pendant(e.other(v)))
            es.emplace_back(u, e.other(v));
        else
            es.push_back(e);
    }
    return Graph::from_edges(g.order(), es);
}

// ---------------------------------------------------------------------------
// Bridge contraction

/// Merges u and v into min(u, v); max(u, v) becomes a pendant of the merged vertex.
inline Graph contract_to_pendant(const Graph& g, Vertex u, Vertex v) {
    detail::require_vertex(g, u);
    detail::require_vertex(g, v);
    if (!g.has_edge(u, v))
        throw Error(Errc::NotABridge, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    if (g.is_pendant(u) || g.is_pendant(v))
        throw Error(Errc::PendantEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ") is a pendant edge");
    if (!is_bridge(g, Edge(u, v)))
        throw Error(Errc::NotABridge, "(" + std::to_string(u) + "," + std::to_string(v) + ") lies on a cycle");
    const Vertex keep = std::min(u, v), freed = std::max(u, v);
    std::vector<Edge> es;
    for (const auto& e : g.edges()) {
        if (e == Edge(u, v)) continue;
        if (e.touches(freed))
            es.emplace_back(keep, e.other(freed));
        else
            es.push_back(e);
    }
    es.emplace_back(keep, freed);
    return Graph::from_edges(g.order(), es);
}

/// Non-pendant bridges, sorted.
inline std::vector<Edge> contractible_bridges(const Graph& g) {
    std::vector<Edge> out;
    for (const auto& e : bridges(g))
        if (!g.is_pendant(e.u) && !g.is_pendant(e.v)) out.push_back(e);
    return out;
}

// ---------------------------------------------------------------------------
// Cycle shortening

/// How condition (2) is read. Its hypothesis names a cycle C3 meeting C1 in
/// three vertices while its conclusion constrains C2.
enum class ConditionReading { HypothesisCycle, LiteralSecondCycle };

inline std::string_view to_string(ConditionReading r) {
    return r == ConditionReading::HypothesisCycle ? "HypothesisCycle" : "LiteralSecondCycle";
}

struct PositionCheck {
    Cycle other;
    int overlap_with_c1 = 0; // |V(C1) cap V(other)|
    int triple_hits = 0;     // |{u,v,w} cap V(other)|
    int condition = 0;       // 1, 2 or 3
    bool hypothesis_reading_ok = true;
    bool literal_reading_ok = true;
};

struct ShortenReport {
    Vertex u = 0, v = 0, w = 0;
    std::optional<Cycle> c1; // shortest cycle through u-v-w
    bool neighborhoods_disjoint = false;
    std::vector<PositionCheck> checks;
    bool hypothesis_reading_ok = true;
    bool literal_reading_ok = true;

    bool satisfied(ConditionReading r) const {
        return r == ConditionReading::HypothesisCycle ? hypothesis_reading_ok : literal_reading_ok;
    }
    /// Triple hits on the designated second cycle (0 when there is none).
    int second_cycle_hits() const { return checks.empty() ? 0 : checks.front().triple_hits; }
};

namespace detail {

inline int triple_hits(const Cycle& c, Vertex u, Vertex v, Vertex w) {
    return int(c.contains(u)) + int(c.contains(v)) + int(c.contains(w));
}

/// Cycles the position conditions are evaluated against. Only minimal
/// cycles are considered: for a bicyclic host this is the partner of C1 in
/// the minimal pair (both cycles of the pair if C1 is not one of them);
/// otherwise every other cycle, shortest first.
inline std::vector<Cycle> comparison_cycles(const Graph& g, const Cycle& c1, const std::vector<Cycle>& all) {
    std::vector<Cycle> out;
    if (is_bicyclic(g)) {
        CyclePair p = minimal_cycle_pair(g);
        for (const Cycle& c : {p.c1, p.c2})
            if (c != c1) out.push_back(c);
        return out;
    }
    for (const Cycle& c : all)
        if (c != c1) out.push_back(c);
    return out;
}

} // namespace detail

/// Evaluates every precondition of the shortening at (u, v, w) without
/// throwing on a failed condition. Index errors and non-adjacency still throw.
inline ShortenReport check_shorten(const Graph& g, Vertex u, Vertex v, Vertex w) {
    detail::require_vertex(g, u);
    detail::require_vertex(g, v);
    detail::require_vertex(g, w);
    if (u == w || !g.has_edge(u, v) || !g.has_edge(v, w))
        throw Error(Errc::NotApplicable, detail::triple_str(u, v, w) + " is not a path u~v~w");

    ShortenReport r{u, v, w, std::nullopt, false, {}, true, true};
    const auto all = enumerate_cycles(g);
    for (const auto& c : all)
        if (c.contains_edge(Edge(u, v)) && c.contains_edge(Edge(v, w))) {
            r.c1 = c; // cycles are sorted by length first
            break;
        }

    // N(u)\{v}, N(v)\{u,w}, N(w)\{v} pairwise disjoint and u not adjacent to w.
    auto others = [&](Vertex x, std::initializer_list<Vertex> drop) {
        std::vector<Vertex> s;
        for (Vertex y : g.neighbors(x))
            if (std::find(drop.begin(), drop.end(), y) == drop.end()) s.push_back(y);
        return s;
    };
    const auto nu = others(u, {v}), nv = others(v, {u, w}), nw = others(w, {v});
    auto disjoint = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        for (Vertex x : a)
            if (std::binary_search(b.begin(), b.end(), x)) return false;
        return true;
    };
    r.neighborhoods_disjoint = !g.has_edge(u, w) && disjoint(nu, nv) && disjoint(nv, nw) && disjoint(nu, nw);

    if (!r.c1) return r;
    const auto cmp = detail::comparison_cycles(g, *r.c1, all);
    const Cycle* second = cmp.empty() ? nullptr : &cmp.front();
    for (const Cycle& c : cmp) {
        PositionCheck pc;
        pc.other = c;
        pc.overlap_with_c1 = count_common_vertices(*r.c1, c);
        pc.triple_hits = detail::triple_hits(c, u, v, w);
        if (pc.overlap_with_c1 <= 2) {
            pc.condition = 1;
            pc.hypothesis_reading_ok = pc.literal_reading_ok = pc.triple_hits <= 1;
        } else if (pc.overlap_with_c1 == 3) {
            pc.condition = 2;
            const int lit = detail::triple_hits(*second, u, v, w);
            pc.hypothesis_reading_ok = pc.triple_hits == 0 || pc.triple_hits == 3;
            pc.literal_reading_ok = lit == 0 || lit == 3;
        } else {
            pc.condition = 3;
            pc.hypothesis_reading_ok = pc.literal_reading_ok = pc.triple_hits == 3;
        }
        r.hypothesis_reading_ok = r.hypothesis_reading_ok && pc.hypothesis_reading_ok;
        r.literal_reading_ok = r.literal_reading_ok && pc.literal_reading_ok;
        r.checks.push_back(pc);
    }
    return r;
}

/// Applies the shortening without looking at the position conditions.
inline Graph apply_shorten(const Graph& g, Vertex u, Vertex v, Vertex w) {
    std::vector<Edge> es;
    for (const auto& e : g.edges()) {
        if (e == Edge(u, v)) {
            es.push_back(e);
        } else if (e.touches(v)) {
            es.emplace_back(u, e.other(v)); // includes vw -> uw
        } else if (e.touches(w)) {
            es.emplace_back(u, e.other(w));
        } else {
            es.push_back(e);
        }
    }
    return Graph::from_edges(g.order(), es);
}

inline Graph shorten_cycle(const Graph& g, Vertex u, Vertex v, Vertex w,
                           ConditionReading reading = ConditionReading::HypothesisCycle) {
    const ShortenReport r = check_shorten(g, u, v, w);
    if (!r.c1) throw Error(Errc::NotApplicable, detail::triple_str(u, v, w) + " lies on no cycle");
    if (r.c1->length() < 5)
        throw Error(Errc::CycleTooShort, "cycle through " + detail::triple_str(u, v, w) + " has length " +
                                             std::to_string(r.c1->length()));
    if (!r.neighborhoods_disjoint) throw Error(Errc::NeighborhoodsOverlap, detail::triple_str(u, v, w));
    if (!r.satisfied(reading))
        throw Error(Errc::PositionConditionViolated,
                    detail::triple_str(u, v, w) + " under the " + std::string(to_string(reading)) + " reading");
    return apply_shorten(g, u, v, w);
}

struct ShortenCandidate {
    Vertex u, v, w;
    ShortenReport report;
};

/// Qualifying triples on the cycle `c` (length >= 5), both orientations.
/// Sorted by hits on the designated second cycle, then by (u, v, w).
inline std::vector<ShortenCandidate> shorten_candidates(const Graph& g, const Cycle& c,
                                                        ConditionReading reading = ConditionReading::HypothesisCycle) {
    std::vector<ShortenCandidate> out;
    if (c.length() < 5) return out;
    const int k = c.length();
    for (int i = 0; i < k; ++i) {
        const Vertex a = c.vertices[i], b = c.vertices[(i + 1) % k], d = c.vertices[(i + 2) % k];
        for (auto [u, w] : {std::pair{a, d}, std::pair{d, a}}) {
            ShortenReport r = check_shorten(g, u, b, w);
            if (r.c1 && r.c1->length() >= 5 && r.neighborhoods_disjoint && r.satisfied(reading))
                out.push_back({u, b, w, std::move(r)});
        }
    }
    std::sort(out.begin(), out.end(), [](const ShortenCandidate& x, const ShortenCandidate& y) {
        const int hx = x.report.second_cycle_hits(), hy = y.report.second_cycle_hits();
        if (hx != hy) return hx < hy;
        return std::tie(x.u, x.v, x.w) < std::tie(y.u, y.v, y.w);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Pendant relocation

inline Graph relocate_pendants(const Graph& g, const std::vector<Vertex>& sources, Vertex target) {
    detail::require_vertex(g, target);
    for (Vertex s : sources) {
        detail::require_vertex(g, s);
        if (s == target) throw Error(Errc::NotApplicable, "source equals target");
    }
    if (g.is_pendant(target)) throw Error(Errc::NotApplicable, "target is itself a pendant vertex");
    std::vector<Edge> es;
    int moved = 0;
    for (const auto& e : g.edges()) {
        bool done = false;
        for (Vertex s : sources) {
            if (e.touches(s) && g.is_pendant(e.other(s)) && !g.is_pendant(s)) {
                es.emplace_back(target, e.other(s));
                ++moved;
                done = true;
                break;
            }
        }
        if (!done) es.push_back(e);
    }
    if (moved == 0) throw Error(Errc::NoPendantsToMove, "sources carry no pendant vertices");
    return Graph::from_edges(g.order(), es);
}

/// A pendant move between base vertices of a family, labelled by family
/// and letter. `zero` lists base vertices that must carry no pendants for
/// the move to apply.
struct PendantMove {
    std::string id;
    Family family;
    std::vector<int> sources;
    int target;
    std::vector<int> zero;
};

inline const std::vector<PendantMove>& pendant_moves() {
    static const std::vector<PendantMove> moves{
        {"B1.a", Family::B1, {1, 2, 3, 4}, 0, {}},
        {"B2.a", Family::B2, {1, 2}, 0, {}},
        {"B2.b", Family::B2, {3, 4, 5}, 0, {1, 2}},
        {"B3.a", Family::B3, {1, 2, 3}, 0, {}},
        {"B4.a", Family::B4, {4}, 0, {}},
        {"B4.b", Family::B4, {2, 3}, 0, {4}},
        {"B4.c", Family::B4, {1}, 0, {2, 3, 4}},
        {"B5.a", Family::B5, {1, 2, 3, 4, 5}, 0, {}},
        {"B6.a", Family::B6, {2, 3}, 0, {}},
        {"B6.b", Family::B6, {4, 5}, 0, {2, 3}}, // mirror image of B6.a
        {"B6.c", Family::B6, {1}, 0, {2, 3, 4, 5}},
        {"B7.a", Family::B7, {2}, 0, {}},
        {"B7.b", Family::B7, {3}, 0, {2}}, // same move from the other
        {"B7.c", Family::B7, {4}, 0, {2, 3}}, // two degree-2 vertices
        {"B7.d", Family::B7, {1}, 0, {2, 3, 4}},
        {"B8.a", Family::B8, {1, 2, 3}, 0, {}},
        {"B8.b", Family::B8, {4, 5, 6}, 0, {1, 2, 3}},
    };
    return moves;
}

inline bool move_applies(const PendantMove& m, const FamilySpec& spec) {
    if (spec.family != m.family) return false;
    for (int z : m.zero)
        if (spec.pendants.at(z) != 0) return false;
    for (int s : m.sources)
        if (spec.pendants.at(s) != 0) return true;
    return false;
}

inline FamilySpec apply_move(const PendantMove& m, FamilySpec spec) {
    for (int s : m.sources) {
        spec.pendants.at(m.target) += spec.pendants.at(s);
        spec.pendants.at(s) = 0;
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Reduction to the extremal graph

struct Reduction {
    std::vector<TransformRecord> records;
    Graph final_graph;
    ParityClass parity = ParityClass::OddClass;
    std::optional<Family> family; // family reached after the structural steps
    bool reached_extremal = false;
    std::optional<std::string> stuck; // set when no applicable transformation remained
};

namespace detail {

/// Finds the family whose base is isomorphic to the pendant-free core of
/// `g` and an embedding of the family base into `g`. Among embeddings the one
/// with the most pendants already on the hub wins, then the smallest image.
struct FamilyEmbedding {
    Family family;
    std::vector<Vertex> image; // family base vertex i -> vertex of g
};

inline std::optional<FamilyEmbedding> embed_family(const Graph& g, const std::vector<Family>& candidates) {
    const std::vector<Vertex> core = core_vertices(g);
    // Every non-core vertex must be a pendant on the core.
    for (Vertex x = 0; x < g.order(); ++x) {
        if (std::binary_search(core.begin(), core.end(), x)) continue;
        if (!g.is_pendant(x) || !std::binary_search(core.begin(), core.end(), g.neighbors(x)[0])) return std::nullopt;
    }
    for (Family f : candidates) {
        const FamilyBase& fb = family_base(f);
        if (fb.names.size() != core.size()) continue;
        std::vector<Vertex> perm = core;
        std::optional<FamilyEmbedding> best;
        int best_hub = -1;
        do {
            bool ok = true;
            for (auto [a, b] : fb.edges)
                if (!g.has_edge(perm[a], perm[b])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            int hub = 0;
            for (Vertex y : g.neighbors(perm[0])) hub += g.is_pendant(y);
            if (hub > best_hub) {
                best_hub = hub;
                best = FamilyEmbedding{f, perm};
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (best) return best;
    }
    return std::nullopt;
}

} // namespace detail

inline Reduction reduce_to_extremal(const Graph& g0, ConditionReading reading = ConditionReading::HypothesisCycle) {
    detail::require_bicyclic(g0);
    Reduction red;
    red.parity = parity_class(g0);
    Graph g = g0;

    // Step 1: contract non-pendant bridges.
    for (auto bs = contractible_bridges(g); !bs.empty(); bs = contractible_bridges(g)) {
        const Edge e = bs.front();
        Graph next = contract_to_pendant(g, e.u, e.v);
        red.records.push_back(make_record(TransformKind::ContractToPendant,
                                          "u=" + std::to_string(e.u) + " v=" + std::to_string(e.v), g, next));
        g = std::move(next);
    }

    // Step 2: shorten minimal cycles of length >= 5.
    while (true) {
        const CyclePair pair = minimal_cycle_pair(g);
        std::optional<ShortenCandidate> pick;
        for (const Cycle& c : {pair.c1, pair.c2}) {
            auto cands = shorten_candidates(g, c, reading);
            if (!cands.empty()) {
                pick = cands.front();
                break;
            }
        }
        if (!pick) break;
        Graph next = apply_shorten(g, pick->u, pick->v, pick->w);
        red.records.push_back(
            make_record(TransformKind::ShortenCycle, detail::triple_str(pick->u, pick->v, pick->w), g, next));
        g = std::move(next);
    }

    // Step 3: move pendants onto the hub of the family base.
    const bool odd = red.parity == ParityClass::OddClass;
    const std::vector<Family> candidates = odd ? std::vector<Family>{Family::B1, Family::B2, Family::B3, Family::B4, Family::B5}
                                               : std::vector<Family>{Family::B6, Family::B7, Family::B8};
    auto emb = detail::embed_family(g, candidates);
    if (!emb) {
        red.final_graph = g;
        red.stuck = "no applicable transformation; graph is not a pendant family graph:\n" + format_edge_list(g);
        return red;
    }
    red.family = emb->family;
    const int b = family_base_order(emb->family);
    auto pendants_on = [&](const Graph& h) {
        FamilySpec s{emb->family, std::vector<int>(b, 0)};
        for (int i = 0; i < b; ++i)
            for (Vertex y : h.neighbors(emb->image[i])) s.pendants[i] += h.is_pendant(y);
        return s;
    };
    for (const PendantMove& m : pendant_moves()) {
        const FamilySpec spec = pendants_on(g);
        if (!move_applies(m, spec)) continue;
        std::vector<Vertex> src;
        for (int s : m.sources) src.push_back(emb->image[s]);
        Graph next = relocate_pendants(g, src, emb->image[m.target]);
        red.records.push_back(make_record(TransformKind::RelocatePendants, "move " + m.id, g, next));
        g = std::move(next);
    }

    // Step 4: the hub graph of another family is compared with the extremal
    // graph through the closed forms.
    const Family target = odd ? Family::B3 : Family::B7;
    if (emb->family != target) {
        Graph ext = extremal_graph(g.order(), red.parity);
        red.records.push_back(make_record(TransformKind::ClosedFormComparison,
                                          to_string(emb->family) + " hub vs " + to_string(target) + " hub", g, ext));
        g = std::move(ext);
    }
    red.final_graph = g;
    red.reached_extremal = g.order() > kCanonicalMaxOrder ? emb->family == target
                                                           : isomorphic(g, extremal_graph(g.order(), red.parity));
    return red;
}

} // namespace slc
