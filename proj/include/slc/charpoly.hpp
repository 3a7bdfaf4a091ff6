#pragma once

// Exact characteristic polynomials of L = D - A and Q = D + A.
//
// det(tI - M) is evaluated at t = 0..n with fraction-free (Bareiss)
// elimination over big integers, then interpolated through forward
// differences in the falling-factorial basis. All arithmetic is exact; the
// final division by n! is checked for exactness.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "slc/bigint.hpp"
#include "slc/error.hpp"
#include "slc/graph.hpp"
#include "slc/poly.hpp"

namespace slc {

enum class MatrixKind { Signless, Laplacian };

inline std::string_view to_string(MatrixKind k) {
    return k == MatrixKind::Signless ? "signless" : "laplacian";
}

using IntMatrix = std::vector<std::vector<long long>>;

inline IntMatrix graph_matrix(const Graph& g, MatrixKind kind) {
    const int n = g.order();
    IntMatrix m(n, std::vector<long long>(n, 0));
    const long long off = kind == MatrixKind::Signless ? 1 : -1;
    for (int v = 0; v < n; ++v) m[v][v] = g.degree(v);
    for (const auto& e : g.edges()) {
        m[e.u][e.v] = off;
        m[e.v][e.u] = off;
    }
    return m;
}

/// Fraction-free Gaussian elimination with row pivoting; consumes `m`.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline BigInt determinant(const IntMatrix& a) {
    std::vector<std::vector<BigInt>> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i].assign(a[i].begin(), a[i].end());
    return bareiss_determinant(std::move(m));
}

/// det(xI - M) for a square integer matrix.
inline IntPoly characteristic_polynomial(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    std::vector<BigInt> values(n + 1);
    for (int t = 0; t <= n; ++t) {
        std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = (i == j ? t : 0) - a[i][j];
        values[t] = bareiss_determinant(std::move(m));
    }

    // Forward differences: delta[k] = Δ^k p(0).
    std::vector<BigInt> delta;
    std::vector<BigInt> row = values;
    for (int k = 0; k <= n; ++k) {
        delta.push_back(row[0]);
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }

    // n! * p(x) = sum_k delta[k] * (n!/k!) * x(x-1)...(x-k+1)
    BigInt nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    IntPoly falling{1};
    BigInt kfact = 1;
    IntPoly scaled;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            falling *= IntPoly::linear(k - 1);
            kfact *= k;
        }
        scaled += BigInt(delta[k] * (nfact / kfact)) * falling;
    }
    std::vector<BigInt> out(scaled.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        BigInt q, r;
        boost::multiprecision::divide_qr(scaled.coeffs()[i], nfact, q, r);
        if (r != 0) throw std::logic_error("characteristic polynomial interpolation is not integral");
        out[i] = q;
    }
    return IntPoly(std::move(out));
}

inline IntPoly charpoly(const Graph& g, MatrixKind kind) {
    return characteristic_polynomial(graph_matrix(g, kind));
}

inline IntPoly signless_charpoly(const Graph& g) { return charpoly(g, MatrixKind::Signless); }

inline IntPoly laplacian_charpoly(const Graph& g) { return charpoly(g, MatrixKind::Laplacian); }

/// Characteristic polynomial of the principal submatrix with row and
/// column v removed. Diagonal entries keep the full graph's degrees.
inline IntPoly vertex_deleted_charpoly(const Graph& g, Vertex v, MatrixKind kind) {
    if (v < 0 || v >= g.order())
        throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " with n=" +
                                               std::to_string(g.order()));
    IntMatrix full = graph_matrix(g, kind);
    IntMatrix sub;
    for (int i = 0; i < g.order(); ++i) {
        if (i == v) continue;
        std::vector<long long> r;
        for (int j = 0; j < g.order(); ++j)
            if (j != v) r.push_back(full[i][j]);
        sub.push_back(std::move(r));
    }
    return characteristic_polynomial(sub);
}

// ---------------------------------------------------------------------------
// Coefficient vectors

/// phi_0..phi_n (or c_0..c_n) with the alternating sign stripped:
/// det(xI - M) = sum_i (-1)^i values[i] x^(n-i).
struct CoeffVector {
    MatrixKind kind = MatrixKind::Signless;
    std::vector<BigInt> values;

    std::size_t size() const noexcept { return values.size(); }
    const BigInt& operator[](std::size_t i) const { return values.at(i); }

    /// "(1,6,9,4)"
    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
        os << ')';
        return os.str();
    }

    IntPoly to_poly() const {
        const int n = static_cast<int>(values.size()) - 1;
        std::vector<BigInt> c(n + 1);
        for (int i = 0; i <= n; ++i) c[n - i] = (i % 2 ? -values[i] : values[i]);
        return IntPoly(std::move(c));
    }

    bool operator==(const CoeffVector& o) const { return values == o.values; }
};

inline CoeffVector coeff_vector(const IntPoly& p, MatrixKind kind) {
    if (!p.is_monic()) throw Error(Errc::NotMonic, p.to_string());
    const int n = p.degree();
    CoeffVector cv;
    cv.kind = kind;
    cv.values.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        BigInt c = p.coeff(n - i);
        cv.values[i] = i % 2 ? BigInt(-c) : c;
        if (cv.values[i] < 0)
            throw Error(Errc::NegativeCoefficient,
                        "coefficient " + std::to_string(i) + " of " + p.to_string());
    }
    return cv;
}

inline CoeffVector signless_coeffs(const Graph& g) {
    return coeff_vector(signless_charpoly(g), MatrixKind::Signless);
}

inline CoeffVector laplacian_coeffs(const Graph& g) {
    return coeff_vector(laplacian_charpoly(g), MatrixKind::Laplacian);
}

// ---------------------------------------------------------------------------
// Dominance

enum class Relation { Equal, Dominates, DominatedBy, Incomparable };

inline std::string_view to_string(Relation r) {
    switch (r) {
    case Relation::Equal: return "Equal";
    case Relation::Dominates: return "Dominates";
    case Relation::DominatedBy: return "DominatedBy";
    case Relation::Incomparable: return "Incomparable";
    }
    return "?";
}

/// Relation of `a` to `b`: Dominates means a >= b entrywise and a > b
/// somewhere. equal_indices lists the positions where the entries agree.
struct Dominance {
    Relation relation = Relation::Equal;
    std::vector<int> equal_indices;
};

inline Dominance compare_dominance(const CoeffVector& a, const CoeffVector& b) {
    if (a.size() != b.size())
        throw Error(Errc::LengthMismatch,
                    std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    Dominance d;
    bool greater = false, less = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i])
            d.equal_indices.push_back(static_cast<int>(i));
        else if (a[i] > b[i])
            greater = true;
        else
            less = true;
    }
    if (greater && less)
        d.relation = Relation::Incomparable;
    else if (greater)
        d.relation = Relation::Dominates;
    else if (less)
        d.relation = Relation::DominatedBy;
    else
        d.relation = Relation::Equal;
    return d;
}

} // namespace slc
