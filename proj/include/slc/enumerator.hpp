#pragma once

// Exhaustive generation of connected graphs up to isomorphism by direct
// edge-subset enumeration, and the machine check of the extremality claims
// for the two parity classes of bicyclic graphs.
//
// Subsets are walked in lexicographic order of the pair list (0,1),(0,2),...
// with a simple feasibility prune: a vertex whose last incident pair has been
// passed without being touched kills the branch. Survivors are tested for
// connectivity on bitmask rows and deduplicated by canonical code.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "slc/bicyclic.hpp"
#include "slc/canonical.hpp"
#include "slc/charpoly.hpp"
#include "slc/error.hpp"
#include "slc/families.hpp"
#include "slc/graph.hpp"

namespace slc {

inline constexpr int kBicyclicDefaultMaxOrder = 8;
inline constexpr int kBicyclicHardMaxOrder = 9;

struct EnumerationOptions {
    bool allow_large = false; // admit n = 9 for bicyclic generation
    unsigned threads = 0;     // 0: hardware concurrency
};

/// Graph whose labeling is the one recorded in a canonical code.
inline Graph graph_from_code(const CanonicalCode& code) {
    if (code.bytes.empty()) throw Error(Errc::ParseError, "empty canonical code");
    const int n = static_cast<unsigned char>(code.bytes[0]);
    std::vector<std::pair<int, int>> es;
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            const std::size_t byte = 1 + static_cast<std::size_t>(k / 8);
            if (byte >= code.bytes.size()) throw Error(Errc::ParseError, "truncated canonical code");
            if (static_cast<unsigned char>(code.bytes[byte]) >> (7 - k % 8) & 1u) es.emplace_back(i, j);
        }
    return Graph(n, es);
}

namespace detail {

struct SubsetWalker {
    int n;
    int m;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> last_pair; // last pair index touching each vertex
    std::set<CanonicalCode> codes;

    SubsetWalker(int n_, int m_) : n(n_), m(m_), last_pair(n_, -1) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                last_pair[i] = last_pair[j] = static_cast<int>(pairs.size());
                pairs.emplace_back(i, j);
            }
    }

    bool connected(const std::array<std::uint16_t, 16>& rows) const {
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[__builtin_ctz(f)];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (std::uint32_t{1} << n) - 1;
    }

    void leaf(const std::vector<int>& chosen) {
        std::vector<std::pair<int, int>> es;
        es.reserve(chosen.size());
        for (int k : chosen) es.push_back(pairs[k]);
        codes.insert(canonical_form(Graph(n, es)));
    }

    void walk(int idx, std::vector<int>& chosen, std::array<std::uint16_t, 16>& rows, std::uint32_t touched) {
        const int left = m - static_cast<int>(chosen.size());
        if (left == 0) {
            if (touched == (std::uint32_t{1} << n) - 1 && connected(rows)) leaf(chosen);
            return;
        }
        const int avail = static_cast<int>(pairs.size()) - idx;
        if (avail < left) return;
        const int untouched = n - __builtin_popcount(touched);
        if (untouched > 2 * left) return;
        for (int v = 0; v < n; ++v)
            if (!(touched >> v & 1u) && last_pair[v] < idx) return;

        auto [a, b] = pairs[idx];
        rows[a] |= static_cast<std::uint16_t>(1u << b);
        rows[b] |= static_cast<std::uint16_t>(1u << a);
        chosen.push_back(idx);
        walk(idx + 1, chosen, rows, touched | 1u << a | 1u << b);
        chosen.pop_back();
        rows[a] &= static_cast<std::uint16_t>(~(1u << b));
        rows[b] &= static_cast<std::uint16_t>(~(1u << a));
        walk(idx + 1, chosen, rows, touched);
    }

    // Subsets whose smallest pair index is `first`.
    void walk_from(int first) {
        std::array<std::uint16_t, 16> rows{};
        std::vector<int> chosen{first};
        auto [a, b] = pairs[first];
        rows[a] |= static_cast<std::uint16_t>(1u << b);
        rows[b] |= static_cast<std::uint16_t>(1u << a);
        walk(first + 1, chosen, rows, 1u << a | 1u << b);
    }
};

inline std::vector<Graph> decode_sorted(const std::set<CanonicalCode>& codes) {
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (const auto& c : codes) out.push_back(graph_from_code(c));
    return out;
}

} // namespace detail

/// One canonical representative per isomorphism class of connected graphs
/// with n vertices and m edges, sorted by canonical code. Intended for
/// n <= 9; the walk is exhaustive.
inline std::vector<Graph> generate_connected(int n, int m, unsigned threads = 1) {
    if (n < 1) throw Error(Errc::TooSmall, "n must be >= 1");
    if (n > 10) throw Error(Errc::TooLarge, "subset enumeration supports n <= 10");
    if (n == 1) {
        if (m == 0) return {Graph::empty(1)};
        return {};
    }
    if (m < n - 1 || m > n * (n - 1) / 2) return {};

    detail::SubsetWalker proto(n, m);
    // Connected graphs touch vertex 0, so the first chosen pair is one of (0,j).
    const int firsts = n - 1;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(firsts));

    std::vector<detail::SubsetWalker> workers(threads, proto);
    if (threads == 1) {
        for (int f = 0; f < firsts; ++f) workers[0].walk_from(f);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (int f = static_cast<int>(t); f < firsts; f += static_cast<int>(threads)) workers[t].walk_from(f);
            });
        for (auto& th : pool) th.join();
    }
    std::set<CanonicalCode> merged;
    for (auto& w : workers) merged.merge(w.codes);
    return detail::decode_sorted(merged);
}

/// Every connected graph on n vertices up to isomorphism, by edge count then code.
inline std::vector<Graph> generate_all_connected(int n, unsigned threads = 1) {
    std::vector<Graph> out;
    for (int m = std::max(0, n - 1); m <= n * (n - 1) / 2; ++m) {
        auto part = generate_connected(n, m, threads);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

/// Connected bicyclic graphs on n vertices, one per isomorphism class.
inline std::vector<Graph> generate_all_bicyclic(int n, EnumerationOptions opt = {}) {
    if (n < 4) throw Error(Errc::TooSmall, "no simple bicyclic graph has fewer than 4 vertices");
    const int limit = opt.allow_large ? kBicyclicHardMaxOrder : kBicyclicDefaultMaxOrder;
    if (n > limit)
        throw Error(Errc::TooLarge, "bicyclic generation supports n <= " + std::to_string(limit) +
                                        (opt.allow_large ? "" : " (n = 9 needs allow_large)"));
    return generate_connected(n, n + 1, opt.threads);
}

/// Uniform random recursive tree plus `extra` distinct chords. The result is
/// connected with n - 1 + extra edges; `extra` is clamped to what fits.
template <class Rng>
Graph random_connected_graph(int n, int extra, Rng& rng) {
    if (n < 1) throw Error(Errc::TooSmall, "n must be >= 1");
    std::vector<std::pair<int, int>> es;
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    for (int v = 1; v < n; ++v) {
        const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        es.emplace_back(u, v);
        used[u][v] = used[v][u] = true;
    }
    std::vector<std::pair<int, int>> rest;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!used[i][j]) rest.emplace_back(i, j);
    for (int k = 0; k < extra && !rest.empty(); ++k) {
        const auto pick = std::uniform_int_distribution<std::size_t>(0, rest.size() - 1)(rng);
        es.push_back(rest[pick]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Graph(n, es);
}

template <class Rng>
Graph random_bicyclic(int n, Rng& rng) {
    if (n < 4) throw Error(Errc::TooSmall, "no simple bicyclic graph has fewer than 4 vertices");
    return random_connected_graph(n, 2, rng);
}

inline std::pair<std::vector<Graph>, std::vector<Graph>> partition_by_parity(const std::vector<Graph>& gs) {
    std::pair<std::vector<Graph>, std::vector<Graph>> out;
    for (const auto& g : gs) (parity_class(g) == ParityClass::OddClass ? out.first : out.second).push_back(g);
    return out;
}

/// Graphs whose signless vector does not strictly dominate any other vector
/// in the list (ties are kept).
inline std::vector<Graph> minimal_elements(const std::vector<Graph>& gs) {
    std::vector<CoeffVector> vs;
    vs.reserve(gs.size());
    for (const auto& g : gs) vs.push_back(signless_coeffs(g));
    std::vector<Graph> out;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < gs.size() && minimal; ++j)
            if (i != j && vs[i].values.size() == vs[j].values.size() &&
                compare_dominance(vs[i], vs[j]).relation == Relation::Dominates)
                minimal = false;
        if (minimal) out.push_back(gs[i]);
    }
    return out;
}

struct CoefficientViolation {
    std::string code; // canonical code, hex
    std::string edges;
    int index = 0;
    BigInt value;    // phi_i(G)
    BigInt extremal; // phi_i of the extremal graph
};

struct InstanceFinding {
    std::string code;
    CoeffVector coeffs;
    bool is_extremal = false;
    std::vector<int> equal_indices;    // against the extremal graph
    std::vector<int> expected_indices; // from the equality clause keyed on base shape
    bool clause_matches = true;
};

struct VerificationReport {
    std::string claim;
    int n = 0;
    ParityClass parity = ParityClass::OddClass;
    std::size_t instance_count = 0;
    std::vector<std::string> minimizers; // canonical codes of the dominance-minimal graphs
    bool unique_minimizer = false;       // exactly one minimizer and it is the extremal graph
    std::vector<CoefficientViolation> violations;
    std::vector<InstanceFinding> instances;
    std::size_t clause_mismatches = 0;
    bool verified = false;
    double elapsed_ms = 0;
};

inline std::string_view extremal_claim_id(ParityClass c) {
    return c == ParityClass::OddClass ? "odd-class-minimum" : "even-class-minimum";
}

/// Base shape that the equality clause singles out for each class.
inline BaseSpec equality_clause_base(ParityClass c) {
    return c == ParityClass::OddClass ? BaseSpec::theta(2, 2, 1) : BaseSpec::theta(2, 2, 2);
}

inline VerificationReport verify_extremal_on(const std::vector<Graph>& cls_graphs, int n, ParityClass cls) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.claim = std::string(extremal_claim_id(cls));
    r.n = n;
    r.parity = cls;
    r.instance_count = cls_graphs.size();

    const Graph ext = extremal_graph(n, cls);
    const CanonicalCode ext_code = canonical_form(ext);
    const CoeffVector ext_vec = signless_coeffs(ext);
    const BaseSpec clause_base = equality_clause_base(cls);

    for (const auto& g : cls_graphs) {
        InstanceFinding f;
        const CanonicalCode code = canonical_form(g);
        f.code = code.hex();
        f.coeffs = signless_coeffs(g);
        f.is_extremal = code == ext_code;
        const Dominance d = compare_dominance(f.coeffs, ext_vec);
        f.equal_indices = d.equal_indices;
        if (f.is_extremal) {
            for (int i = 0; i <= n; ++i) f.expected_indices.push_back(i);
        } else if (classify_bicyclic(g).shape == clause_base) {
            f.expected_indices = {0, 1, n - 1, n};
        } else {
            f.expected_indices = {0, 1};
        }
        f.clause_matches = f.equal_indices == f.expected_indices;
        if (!f.clause_matches) ++r.clause_mismatches;
        for (int i = 0; i <= n; ++i)
            if (f.coeffs[i] < ext_vec[i])
                r.violations.push_back({f.code, format_edge_list(g), i, f.coeffs[i], ext_vec[i]});
        r.instances.push_back(std::move(f));
    }

    for (const auto& g : minimal_elements(cls_graphs)) r.minimizers.push_back(canonical_form(g).hex());
    r.unique_minimizer = r.minimizers.size() == 1 && r.minimizers[0] == ext_code.hex();
    r.verified = r.violations.empty();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// Generates the class and checks phi_i(G) >= phi_i(extremal) for every member
/// and every index. Violations and clause mismatches are report content.
inline VerificationReport verify_extremal(int n, ParityClass cls, EnumerationOptions opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    auto [odd, even] = partition_by_parity(generate_all_bicyclic(n, opt));
    VerificationReport r = verify_extremal_on(cls == ParityClass::OddClass ? odd : even, n, cls);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace slc
