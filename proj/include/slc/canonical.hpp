#pragma once

// Canonical labeling for small graphs (n <= 12).
//
// The code is the lexicographically smallest upper-triangle adjacency bit
// string over the leaves of an individualization/refinement search tree.
// Refinement starts from the degree partition and iterates neighbor-cell
// signatures to an equitable partition. Branches that differ only by a
// transposition of twins (N(x)\{y} == N(y)\{x}) are pruned; such a
// transposition is an automorphism fixing everything individualized so far,
// so the pruned subtree yields the same codes.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "slc/error.hpp"
#include "slc/graph.hpp"

namespace slc {

inline constexpr int kCanonicalMaxOrder = 12;

struct CanonicalCode {
    std::string bytes;

    std::string hex() const {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        out.reserve(bytes.size() * 2);
        for (unsigned char c : bytes) {
            out.push_back(digits[c >> 4]);
            out.push_back(digits[c & 0xF]);
        }
        return out;
    }

    auto operator<=>(const CanonicalCode&) const = default;
};

namespace detail {

using AdjRows = std::array<std::uint16_t, kCanonicalMaxOrder>;
using PackedBits = std::array<std::uint64_t, 2>; // 66 bits max, MSB-first

inline PackedBits pack_code(const AdjRows& adj, const std::vector<Vertex>& order) {
    PackedBits bits{0, 0};
    const int n = static_cast<int>(order.size());
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (adj[order[i]] >> order[j] & 1u) bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    return bits;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(g.order()) {
        adj_.fill(0);
        for (const auto& e : g.edges()) {
            adj_[e.u] |= static_cast<std::uint16_t>(1u << e.v);
            adj_[e.v] |= static_cast<std::uint16_t>(1u << e.u);
        }
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                const std::uint16_t mask = static_cast<std::uint16_t>(~((1u << x) | (1u << y)));
                twin_[x][y] = x != y && (adj_[x] & mask) == (adj_[y] & mask);
            }
    }

    std::vector<Vertex> run() {
        std::vector<int> rank(n_);
        for (int v = 0; v < n_; ++v) rank[v] = __builtin_popcount(adj_[v]);
        refine(rank);
        search(rank);
        return best_order_;
    }

    PackedBits best_code() const { return best_; }

private:
    // Splits cells by the multiset of neighbor cells until stable.
    void refine(std::vector<int>& rank) const {
        std::vector<std::pair<std::vector<int>, int>> sig(n_);
        int cells = -1;
        while (true) {
            for (int v = 0; v < n_; ++v) {
                auto& s = sig[v].first;
                s.clear();
                s.push_back(rank[v]);
                std::vector<int> nb;
                for (int y = 0; y < n_; ++y)
                    if (adj_[v] >> y & 1u) nb.push_back(rank[y]);
                std::sort(nb.begin(), nb.end());
                s.insert(s.end(), nb.begin(), nb.end());
                sig[v].second = v;
            }
            std::vector<int> idx(n_);
            for (int v = 0; v < n_; ++v) idx[v] = v;
            std::sort(idx.begin(), idx.end(),
                      [&](int a, int b) { return sig[a].first < sig[b].first; });
            int r = 0;
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && sig[idx[i]].first != sig[idx[i - 1]].first) ++r;
                rank[idx[i]] = r;
            }
            const int now = n_ == 0 ? 0 : r + 1;
            if (now == cells) return;
            cells = now;
        }
    }

    void search(const std::vector<int>& rank) {
        // Smallest non-singleton cell.
        std::vector<int> count(n_, 0);
        for (int v = 0; v < n_; ++v) ++count[rank[v]];
        int target = -1;
        for (int r = 0; r < n_; ++r)
            if (count[r] > 1) {
                target = r;
                break;
            }
        if (target < 0) {
            std::vector<Vertex> order(n_);
            for (int v = 0; v < n_; ++v) order[rank[v]] = v;
            PackedBits code = pack_code(adj_, order);
            if (!have_best_ || code < best_) {
                have_best_ = true;
                best_ = code;
                best_order_ = order;
            }
            return;
        }
        std::vector<Vertex> tried;
        for (int v = 0; v < n_; ++v) {
            if (rank[v] != target) continue;
            bool redundant = false;
            for (Vertex t : tried)
                if (twin_[t][v]) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried.push_back(v);
            std::vector<int> child(n_);
            for (int w = 0; w < n_; ++w) child[w] = 2 * rank[w];
            child[v] = 2 * rank[v] - 1;
            refine(child);
            search(child);
        }
    }

    int n_;
    AdjRows adj_{};
    std::array<std::array<bool, kCanonicalMaxOrder>, kCanonicalMaxOrder> twin_{};
    PackedBits best_{0, 0};
    bool have_best_ = false;
    std::vector<Vertex> best_order_;
};

} // namespace detail

/// Vertices listed in canonical order (position i holds the original vertex).
inline std::vector<Vertex> canonical_order(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder)
        throw Error(Errc::TooLarge, "canonical form supports n <= " +
                                        std::to_string(kCanonicalMaxOrder) + ", got " +
                                        std::to_string(g.order()));
    detail::CanonicalSearch s(g);
    return s.run();
}

inline CanonicalCode canonical_form(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder)
        throw Error(Errc::TooLarge, "canonical form supports n <= " +
                                        std::to_string(kCanonicalMaxOrder) + ", got " +
                                        std::to_string(g.order()));
    detail::CanonicalSearch s(g);
    s.run();
    const auto bits = s.best_code();
    CanonicalCode c;
    c.bytes.push_back(static_cast<char>(g.order()));
    const int nbits = g.order() * (g.order() - 1) / 2;
    const int nbytes = (nbits + 7) / 8;
    for (int b = 0; b < nbytes; ++b) {
        const int word = (b * 8) / 64;
        const int shift = 56 - (b * 8) % 64;
        c.bytes.push_back(static_cast<char>((bits[word] >> shift) & 0xFF));
    }
    return c;
}

/// Relabels `g` into its canonical labeling.
inline Graph canonical_graph(const Graph& g) {
    auto order = canonical_order(g);
    std::vector<Vertex> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[order[i]] = i;
    return g.relabeled(perm);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

} // namespace slc
