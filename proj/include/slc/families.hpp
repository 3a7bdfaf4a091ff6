#pragma once

// Bicyclic bases, the eight pendant families B1..B8, their closed-form
// signless Laplacian polynomials and the pairwise difference identities.
//
// Base labelings (vertex index: name, edges):
//
//   B1 = B(3,3)          0:x 1:u 2:v 3:w 4:z          x-u x-v u-v x-w x-z w-z
//   B2 = B(3,4)          0:u1 .. 5:u6                 u1-u2 u2-u3 u3-u1 u1-u4 u4-u5 u5-u6 u6-u1
//   B3 = B(P2,P2,P1)     0:u 1:v 2:w 3:z              u-v u-w w-v u-z z-v
//   B4 = B(P3,P2,P1)     0:u 1:v 2:w 3:z 4:x          u-v u-x x-v u-w w-z z-v
//   B5 = B(P3,P2,P2)     0:u 1:v 2:u1 3:v1 4:w1 5:w2  u-u1 u1-v u-v1 v1-v u-w1 w1-w2 w2-v
//   B6 = B(P3,P3,P1)     0:u1 1:u2 2:u3 3:u4 4:w3 5:w4
//                                                     u1-u2 u1-u3 u3-u4 u4-u2 u1-w3 w3-w4 w4-u2
//   B7 = B(P2,P2,P2)     0:u 1:v 2:u1 3:w1 4:v1       u-u1 u1-v u-v1 v1-v u-w1 w1-v
//   B8 = B(4,4)          0:u1 1:u2 2:u3 3:u4 4:v2 5:v3 6:v4
//                                                     u1-u2 u2-u3 u3-u4 u4-u1 u1-v2 v2-v3 v3-v4 v4-u1
//
// FamilySpec pendants[i] is the number of pendant vertices hung on base
// vertex i; pendant vertices are numbered after the base, grouped by host in
// base order. Vertex 0 is the hub in every family: the closed forms describe
// the graph with all pendants on vertex 0.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slc/bicyclic.hpp"
#include "slc/error.hpp"
#include "slc/graph.hpp"
#include "slc/poly.hpp"

namespace slc {

/// Deterministic labeling:
///   VertexShared(p,q): shared vertex 0; C_p = 0,1..p-1; C_q = 0,p..p+q-2.
///   PathJoined(p,l,q): C_p = 0..p-1; path 0,p..p+l-2,t with t = p+l-1;
///                      C_q = t,t+1..t+q-1.
///   Theta(k,l,m):      ends 0 and 1; internal vertices of the k-path, then
///                      the l-path, then the m-path, numbered from 2 upward.
inline Graph build_base(const BaseSpec& spec) {
    if (!spec.valid()) throw Error(Errc::InvalidSpec, spec.to_string());
    const auto [a, b, c] = spec.params;
    std::vector<Edge> es;
    int next = 0;
    // Closed walk from `start` through `len - 1` fresh vertices back to `start`.
    auto cycle = [&](Vertex start, int len) {
        Vertex prev = start;
        for (int i = 1; i < len; ++i) {
            es.emplace_back(prev, next);
            prev = next++;
        }
        es.emplace_back(prev, start);
    };
    // Path from `from` to `to` of `len` edges through fresh vertices.
    auto path = [&](Vertex from, Vertex to, int len) {
        Vertex prev = from;
        for (int i = 1; i < len; ++i) {
            es.emplace_back(prev, next);
            prev = next++;
        }
        es.emplace_back(prev, to);
    };
    switch (spec.kind) {
    case BaseKind::VertexShared:
        next = 1;
        cycle(0, a);
        cycle(0, b);
        break;
    case BaseKind::PathJoined: {
        next = 1;
        cycle(0, a);
        const Vertex t = a + b - 1;
        path(0, t, b);
        next = t + 1;
        cycle(t, c);
        break;
    }
    case BaseKind::Theta:
        next = 2;
        path(0, 1, a);
        path(0, 1, b);
        path(0, 1, c);
        break;
    }
    return Graph::from_edges(spec.vertex_count(), es);
}

// ---------------------------------------------------------------------------
// Families

enum class Family { B1 = 1, B2, B3, B4, B5, B6, B7, B8 };

inline constexpr std::array<Family, 8> kAllFamilies{Family::B1, Family::B2, Family::B3, Family::B4,
                                                    Family::B5, Family::B6, Family::B7, Family::B8};

inline std::string to_string(Family f) { return "B" + std::to_string(static_cast<int>(f)); }

inline Family parse_family(std::string_view s) {
    if (s.size() == 2 && (s[0] == 'B' || s[0] == 'b') && s[1] >= '1' && s[1] <= '8')
        return static_cast<Family>(s[1] - '0');
    throw Error(Errc::InvalidSpec, "unknown family '" + std::string(s) + "'");
}

struct FamilyBase {
    BaseSpec shape;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
};

inline const FamilyBase& family_base(Family f) {
    static const std::array<FamilyBase, 8> table{{
        {BaseSpec::vertex_shared(3, 3), {"x", "u", "v", "w", "z"},
         {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}},
        {BaseSpec::vertex_shared(3, 4), {"u1", "u2", "u3", "u4", "u5", "u6"},
         {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0}}},
        {BaseSpec::theta(2, 2, 1), {"u", "v", "w", "z"}, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}}},
        {BaseSpec::theta(3, 2, 1), {"u", "v", "w", "z", "x"},
         {{0, 1}, {0, 4}, {4, 1}, {0, 2}, {2, 3}, {3, 1}}},
        {BaseSpec::theta(3, 2, 2), {"u", "v", "u1", "v1", "w1", "w2"},
         {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}}},
        {BaseSpec::theta(3, 3, 1), {"u1", "u2", "u3", "u4", "w3", "w4"},
         {{0, 1}, {0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}}},
        {BaseSpec::theta(2, 2, 2), {"u", "v", "u1", "w1", "v1"},
         {{0, 2}, {2, 1}, {0, 4}, {4, 1}, {0, 3}, {3, 1}}},
        {BaseSpec::vertex_shared(4, 4), {"u1", "u2", "u3", "u4", "v2", "v3", "v4"},
         {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}}},
    }};
    return table.at(static_cast<int>(f) - 1);
}

inline int family_base_order(Family f) { return static_cast<int>(family_base(f).names.size()); }

struct FamilySpec {
    Family family = Family::B1;
    std::vector<int> pendants;

    int order() const {
        int n = family_base_order(family);
        for (int k : pendants) n += k;
        return n;
    }

    bool operator==(const FamilySpec&) const = default;
};

inline Graph build_family(const FamilySpec& spec) {
    const FamilyBase& base = family_base(spec.family);
    const int b = static_cast<int>(base.names.size());
    if (static_cast<int>(spec.pendants.size()) != b)
        throw Error(Errc::InvalidSpec, to_string(spec.family) + " takes " + std::to_string(b) +
                                           " pendant counts, got " +
                                           std::to_string(spec.pendants.size()));
    std::vector<std::pair<int, int>> es = base.edges;
    int next = b;
    for (int v = 0; v < b; ++v) {
        if (spec.pendants[v] < 0) throw Error(Errc::InvalidSpec, "negative pendant count");
        for (int i = 0; i < spec.pendants[v]; ++i) es.emplace_back(v, next++);
    }
    return Graph(next, es);
}

/// All pendants on vertex 0, total order n.
inline FamilySpec hub_family(Family f, int n) {
    const int b = family_base_order(f);
    if (n < b)
        throw Error(Errc::TooSmall, to_string(f) + " needs n >= " + std::to_string(b) + ", got " +
                                        std::to_string(n));
    FamilySpec s{f, std::vector<int>(b, 0)};
    s.pendants[0] = n - b;
    return s;
}

/// B_n^1 (odd class): K4-e with n-4 pendants at a degree-3 vertex.
/// B_n^2 (even class): K2,3 with n-5 pendants at a degree-3 vertex.
inline Graph extremal_graph(int n, ParityClass cls) {
    const bool odd = cls == ParityClass::OddClass;
    const int least = odd ? 4 : 5;
    if (n < least)
        throw Error(Errc::TooSmall, std::string(odd ? "odd" : "even") + " class extremal graph needs n >= " +
                                        std::to_string(least));
    return build_family(hub_family(odd ? Family::B3 : Family::B7, n));
}

// ---------------------------------------------------------------------------
// Closed forms for the hub graphs

/// Smallest n for which every (x-1) exponent in the closed form is >= 0.
inline int closed_form_min_order(Family f) {
    static constexpr std::array<int, 8> least{5, 6, 4, 6, 7, 6, 6, 8};
    return least.at(static_cast<int>(f) - 1);
}

namespace detail {

inline IntPoly ipoly(std::initializer_list<long long> high_to_low) {
    std::vector<BigInt> c(high_to_low.begin(), high_to_low.end());
    std::reverse(c.begin(), c.end());
    return IntPoly(std::move(c));
}

inline void require_order(int n, int least, const std::string& what) {
    if (n < least)
        throw Error(Errc::OutOfRange, what + " needs n >= " + std::to_string(least) + ", got " +
                                          std::to_string(n));
}

} // namespace detail

inline IntPoly closed_form_poly(Family f, int n) {
    detail::require_order(n, closed_form_min_order(f), to_string(f) + " closed form");
    using detail::ipoly;
    const long long m = n;
    const IntPoly x = IntPoly::x();
    auto xm = [](long long r) { return IntPoly::linear(r); };
    const IntPoly one = xm(1);
    switch (f) {
    case Family::B1:
        return one.pow(n - 4) * xm(3) * ipoly({1, -(m + 3), 3 * m, -8});
    case Family::B2:
        return one.pow(n - 6) * xm(2) *
               ipoly({1, -(m + 6), 7 * (m + 1), -2 * (7 * m - 1), 2 * (3 * m + 8), -8});
    case Family::B3:
        return one.pow(n - 4) * xm(2) * ipoly({1, -(m + 4), 4 * m, -8});
    case Family::B4:
        return one.pow(n - 6) *
               ipoly({1, -(m + 8), 9 * (m + 2), -(27 * m + 10), 31 * m + 10, -(11 * m + 32), 16});
    case Family::B5:
        return one.pow(n - 7) * xm(2) *
               ipoly({1, -(m + 7), 9 * m + 8, -(26 * m - 22), 27 * m - 30, -(8 * m + 8), 8});
    case Family::B6:
        return x * one.pow(n - 6) * xm(3) * ipoly({1, -(m + 5), 7 * m - 1, -(13 * m - 17), 5 * m});
    case Family::B7:
        return x * one.pow(n - 6) * xm(2).pow(2) * ipoly({1, -(m + 4), 5 * m - 2, -3 * m});
    case Family::B8:
        return x * one.pow(n - 8) * xm(2).pow(2) * ipoly({1, -4, 2}) *
               ipoly({1, -(m + 2), 2 * (2 * m - 3), -2 * m});
    }
    throw Error(Errc::InvalidSpec, "unknown family");
}

// ---------------------------------------------------------------------------
// Difference identities between hub closed forms

struct DifferenceIdentity {
    int equation = 0;
    Family minuend = Family::B1;
    Family subtrahend = Family::B1;
    IntPoly lhs; // closed form of minuend minus closed form of subtrahend
    IntPoly rhs; // factored right-hand side, expanded
    bool holds() const { return lhs == rhs; }
};

inline std::pair<Family, Family> difference_identity_families(int eq) {
    switch (eq) {
    case 1: return {Family::B1, Family::B3};
    case 2: return {Family::B2, Family::B4};
    case 3: return {Family::B4, Family::B3};
    case 4: return {Family::B5, Family::B3};
    case 5: return {Family::B8, Family::B6};
    case 6: return {Family::B6, Family::B7};
    default: throw Error(Errc::OutOfRange, "difference identity " + std::to_string(eq) + " (expected 1..6)");
    }
}

inline int difference_identity_min_order(int eq) {
    auto [a, b] = difference_identity_families(eq);
    return std::max(closed_form_min_order(a), closed_form_min_order(b));
}

inline DifferenceIdentity difference_identity(int eq, int n) {
    auto [a, b] = difference_identity_families(eq);
    detail::require_order(n, difference_identity_min_order(eq),
                          "difference identity " + std::to_string(eq));
    using detail::ipoly;
    const long long m = n;
    const IntPoly x = IntPoly::x();
    const IntPoly one = IntPoly::linear(1);
    DifferenceIdentity d{eq, a, b, closed_form_poly(a, n) - closed_form_poly(b, n), {}};
    switch (eq) {
    case 1: d.rhs = one.pow(n - 4) * ipoly({1, -m, 8}); break;
    case 2: d.rhs = x * one.pow(n - 6) * ipoly({1, -(m + 2), 3 * m + 2, -(m + 8)}); break;
    case 3:
        d.rhs = x * one.pow(n - 6) * ipoly({m - 3, -(6 * m - 20), 9 * m - 30, -(3 * m - 8)});
        break;
    case 4:
        d.rhs = x * IntPoly::linear(2) * one.pow(n - 7) *
                ipoly({2 * m - 7, -(11 * m - 43), 14 * m - 58, -(4 * m - 16)});
        break;
    case 5:
        d.rhs = x * one.pow(n - 8) *
                ipoly({1, -(m + 4), 6 * m + 1, -(11 * m - 6), 3 * (2 * m + 1), -m});
        break;
    case 6:
        d.rhs = x * one.pow(n - 6) * ipoly({m - 4, -(7 * m - 28), 12 * m - 43, -3 * m});
        break;
    }
    return d;
}

/// The cubic factors of the two extremal polynomials:
///   x^3 - (n+4)x^2 + 4nx - 8       (B_n^1)
///   x^3 - (n+4)x^2 + (5n-2)x - 3n  (B_n^2)
inline std::pair<IntPoly, IntPoly> extremal_cubics(int n) {
    detail::require_order(n, 5, "extremal cubics");
    const long long m = n;
    return {detail::ipoly({1, -(m + 4), 4 * m, -8}), detail::ipoly({1, -(m + 4), 5 * m - 2, -3 * m})};
}

} // namespace slc
