#pragma once

// Floating-point side: Q-spectra by cyclic Jacobi rotations, incidence
// energy, roots of the two extremal cubics, and the crossover scan between
// the odd-class and even-class extremal graphs.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "slc/charpoly.hpp"
#include "slc/error.hpp"
#include "slc/families.hpp"
#include "slc/graph.hpp"

namespace slc {

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kIeMargin = 1e-7;
inline constexpr double kIePathTolerance = 1e-6;

struct Spectrum {
    std::vector<double> eigenvalues; // descending
    double tolerance = 0;
    int sweeps = 0;

    double sum() const {
        double s = 0;
        for (double x : eigenvalues) s += x;
        return s;
    }
};

/// Eigenvalues of a real symmetric matrix. Sweeps continue until the
/// off-diagonal Frobenius norm drops below min(tol / n, 1e-12 * |A|_F),
/// floored at 64 ulp of |A|_F so the target is reachable in double.
inline Spectrum symmetric_spectrum(std::vector<std::vector<double>> a, double tol) {
    if (!(tol > 0)) throw Error(Errc::OutOfRange, "tolerance must be positive");
    const int n = static_cast<int>(a.size());
    Spectrum s;
    s.tolerance = tol;
    if (n == 0) return s;

    double fro = 0;
    for (const auto& row : a)
        for (double x : row) fro += x * x;
    fro = std::sqrt(fro);
    const double eps = std::numeric_limits<double>::epsilon();
    const double target = std::max(std::min(tol / n, 1e-12 * fro), 64 * eps * fro);

    auto off = [&] {
        double t = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) t += 2 * a[i][j] * a[i][j];
        return std::sqrt(t);
    };

    while (off() > target) {
        if (s.sweeps == kJacobiMaxSweeps)
            throw Error(Errc::ConvergenceFailure, "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) +
                                                       " sweeps (n=" + std::to_string(n) + ")");
        ++s.sweeps;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p][q];
                if (apq == 0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1), sn = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - sn * akq;
                    a[k][q] = sn * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - sn * aqk;
                    a[q][k] = sn * apk + c * aqk;
                }
                a[p][q] = a[q][p] = 0;
            }
    }
    for (int i = 0; i < n; ++i) s.eigenvalues.push_back(a[i][i]);
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
    return s;
}

inline Spectrum graph_spectrum(const Graph& g, MatrixKind kind, double tol = 1e-10) {
    const IntMatrix m = graph_matrix(g, kind);
    std::vector<std::vector<double>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) a[i].assign(m[i].begin(), m[i].end());
    return symmetric_spectrum(std::move(a), tol);
}

inline Spectrum q_spectrum(const Graph& g, double tol = 1e-10) { return graph_spectrum(g, MatrixKind::Signless, tol); }

/// Eigenvalues within the spectrum tolerance of zero count as zero.
inline double incidence_energy(const Spectrum& s) {
    double e = 0;
    for (double x : s.eigenvalues)
        if (x > s.tolerance) e += std::sqrt(x);
    return e;
}

inline double incidence_energy(const Graph& g) { return incidence_energy(q_spectrum(g, 1e-12)); }

/// Elementary symmetric functions e_0..e_n of the eigenvalues.
inline std::vector<double> elementary_symmetric(const std::vector<double>& xs) {
    std::vector<double> e(xs.size() + 1, 0.0);
    e[0] = 1;
    for (std::size_t k = 0; k < xs.size(); ++k)
        for (std::size_t i = k + 1; i >= 1; --i) e[i] += e[i - 1] * xs[k];
    return e;
}

struct IeSpotCheck {
    Relation relation = Relation::Incomparable; // of g to h
    double ie_g = 0;
    double ie_h = 0;
    bool conforms = true;
};

/// Coefficient dominance must order the incidence energies the same way.
/// Incomparable pairs are vacuously conforming.
inline IeSpotCheck ie_dominance_check(const Graph& g, const Graph& h) {
    if (g.order() != h.order())
        throw Error(Errc::LengthMismatch, "graphs of order " + std::to_string(g.order()) + " and " +
                                              std::to_string(h.order()));
    IeSpotCheck r;
    r.relation = compare_dominance(signless_coeffs(g), signless_coeffs(h)).relation;
    r.ie_g = incidence_energy(g);
    r.ie_h = incidence_energy(h);
    switch (r.relation) {
    case Relation::Dominates: r.conforms = r.ie_h < r.ie_g + kIeMargin; break;
    case Relation::DominatedBy: r.conforms = r.ie_g < r.ie_h + kIeMargin; break;
    case Relation::Equal: r.conforms = std::abs(r.ie_g - r.ie_h) <= kIeMargin; break;
    case Relation::Incomparable: break;
    }
    return r;
}

inline bool ie_dominance_spot_check(const Graph& g, const Graph& h) { return ie_dominance_check(g, h).conforms; }

// ---------------------------------------------------------------------------
// Cubics

struct CubicRoots {
    std::array<double, 3> roots{}; // descending
    double max_residual = 0;       // max |p(r)| / (1 + |p'(r)|)
};

namespace detail {

// Root of p in [lo, hi] with p(lo), p(hi) of opposite sign (or zero).
inline long double bracketed_root(const std::array<long double, 4>& c, long double lo, long double hi) {
    auto p = [&](long double x) { return ((x + c[2]) * x + c[1]) * x + c[0]; };
    auto dp = [&](long double x) { return (3 * x + 2 * c[2]) * x + c[1]; };
    long double plo = p(lo);
    if (plo == 0) return lo;
    if (p(hi) == 0) return hi;
    for (int it = 0; it < 200 && hi - lo > 1e-15L * (1 + std::abs(lo)); ++it) {
        const long double mid = (lo + hi) / 2, pm = p(mid);
        if (pm == 0) return mid;
        if ((pm < 0) == (plo < 0)) {
            lo = mid;
            plo = pm;
        } else {
            hi = mid;
        }
    }
    long double x = (lo + hi) / 2;
    for (int it = 0; it < 3; ++it) {
        const long double d = dp(x);
        if (d == 0) break;
        const long double nx = x - p(x) / d;
        if (nx < lo || nx > hi) break;
        x = nx;
    }
    return x;
}

} // namespace detail

/// Roots of the monic cubic x^3 + c2 x^2 + c1 x + c0, assumed to have three
/// real roots. Brackets come from the critical points and a Cauchy bound.
inline CubicRoots real_cubic_roots(double c2, double c1, double c0) {
    const std::array<long double, 4> c{c0, c1, c2, 1};
    const long double disc = static_cast<long double>(c2) * c2 - 3.0L * c1;
    if (disc <= 0) throw Error(Errc::NotApplicable, "cubic has fewer than three distinct real roots");
    const long double s = std::sqrt(disc);
    const long double k1 = (-c2 - s) / 3, k2 = (-c2 + s) / 3;
    const long double bound = 1 + std::max({std::abs(static_cast<long double>(c2)), std::abs(static_cast<long double>(c1)),
                                            std::abs(static_cast<long double>(c0))});
    CubicRoots r;
    r.roots = {static_cast<double>(detail::bracketed_root(c, k2, bound)),
               static_cast<double>(detail::bracketed_root(c, k1, k2)),
               static_cast<double>(detail::bracketed_root(c, -bound, k1))};
    for (double x : r.roots) {
        const double p = ((x + c2) * x + c1) * x + c0, dp = (3 * x + 2 * c2) * x + c1;
        r.max_residual = std::max(r.max_residual, std::abs(p) / (1 + std::abs(dp)));
    }
    return r;
}

inline CubicRoots real_cubic_roots(const IntPoly& p) {
    if (p.degree() != 3 || !p.is_monic()) throw Error(Errc::NotMonic, "expected a monic cubic");
    return real_cubic_roots(p.coeff(2).convert_to<double>(), p.coeff(1).convert_to<double>(),
                            p.coeff(0).convert_to<double>());
}

/// alpha roots (odd-class extremal cubic) and beta roots (even-class one).
inline std::pair<CubicRoots, CubicRoots> extremal_cubic_roots(int n) {
    auto [a, b] = extremal_cubics(n);
    return {real_cubic_roots(a), real_cubic_roots(b)};
}

inline double closed_form_ie_odd(int n, const CubicRoots& alpha) {
    double e = (n - 4) + std::sqrt(2.0);
    for (double x : alpha.roots) e += std::sqrt(std::max(x, 0.0));
    return e;
}

inline double closed_form_ie_even(int n, const CubicRoots& beta) {
    double e = (n - 6) + 2 * std::sqrt(2.0);
    for (double x : beta.roots) e += std::sqrt(std::max(x, 0.0));
    return e;
}

// ---------------------------------------------------------------------------
// Crossover scan

struct IeScanRow {
    int n = 0;
    double ie_odd = 0;  // IE of the odd-class extremal graph, from its spectrum
    double ie_even = 0; // same for the even class
    double ie_odd_closed = 0;
    double ie_even_closed = 0;
    double path_gap = 0; // max disagreement between the two computation paths
    double diff = 0;     // ie_even - ie_odd
    std::string winner;  // class with the smaller energy
};

struct IeScanReport {
    std::vector<IeScanRow> rows;
    std::optional<int> crossover; // first n where the winner differs from the previous row
    double min_abs_diff = std::numeric_limits<double>::infinity();
    int min_abs_diff_n = 0;
    double max_path_gap = 0;
    bool paths_agree = true;
    bool matches_claim = true; // even wins for n <= 30, odd wins from 31 on
};

inline IeScanRow ie_scan_row(int n) {
    IeScanRow r;
    r.n = n;
    r.ie_odd = incidence_energy(extremal_graph(n, ParityClass::OddClass));
    r.ie_even = incidence_energy(extremal_graph(n, ParityClass::EvenClass));
    auto [alpha, beta] = extremal_cubic_roots(n);
    r.ie_odd_closed = closed_form_ie_odd(n, alpha);
    r.ie_even_closed = closed_form_ie_even(n, beta);
    r.path_gap = std::max(std::abs(r.ie_odd - r.ie_odd_closed), std::abs(r.ie_even - r.ie_even_closed));
    r.diff = r.ie_even - r.ie_odd;
    r.winner = r.diff < 0 ? "even" : "odd";
    return r;
}

inline IeScanReport ie_threshold_scan(int n_min, int n_max) {
    if (n_min < 5 || n_max < n_min)
        throw Error(Errc::OutOfRange, "scan needs 5 <= from <= to, got " + std::to_string(n_min) + ".." +
                                          std::to_string(n_max));
    IeScanReport rep;
    for (int n = n_min; n <= n_max; ++n) {
        IeScanRow r = ie_scan_row(n);
        if (!rep.rows.empty() && rep.rows.back().winner != r.winner && !rep.crossover) rep.crossover = n;
        if (std::abs(r.diff) < rep.min_abs_diff) {
            rep.min_abs_diff = std::abs(r.diff);
            rep.min_abs_diff_n = n;
        }
        rep.max_path_gap = std::max(rep.max_path_gap, r.path_gap);
        rep.paths_agree = rep.paths_agree && r.path_gap <= kIePathTolerance;
        const std::string expected = n <= 30 ? "even" : "odd";
        rep.matches_claim = rep.matches_claim && r.winner == expected;
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Root interval bounds for n >= 31

struct BoundCheck {
    std::string name;
    double lo = 0;
    double hi = 0;
    double value = 0;
    bool holds = false;
};

struct RootBoundsReport {
    int n = 0;
    CubicRoots alpha;
    CubicRoots beta;
    std::vector<BoundCheck> checks;
    bool all_hold = false;
};

inline RootBoundsReport cubic_root_bounds(int n) {
    if (n < 31) throw Error(Errc::OutOfRange, "root bounds are claimed for n >= 31, got " + std::to_string(n));
    RootBoundsReport r;
    r.n = n;
    std::tie(r.alpha, r.beta) = extremal_cubic_roots(n);
    double sum = 0;
    for (int i = 0; i < 3; ++i) sum += std::sqrt(std::max(r.beta.roots[i], 0.0)) - std::sqrt(std::max(r.alpha.roots[i], 0.0));
    auto add = [&](std::string name, double lo, double hi, double v) {
        r.checks.push_back({std::move(name), lo, hi, v, lo <= v && v <= hi});
    };
    add("alpha1", n, n + 0.01, r.alpha.roots[0]);
    add("alpha2", 3.93, 4, r.alpha.roots[1]);
    add("alpha3", 0, 0.066, r.alpha.roots[2]);
    add("beta1", n - 1, n - 0.995, r.beta.roots[0]);
    add("beta2", 4.27, 4.31, r.beta.roots[1]);
    add("beta3", 0.697, 0.726, r.beta.roots[2]);
    add("sum_sqrt_diff", 0.5899, 1, sum);
    r.all_hold = std::all_of(r.checks.begin(), r.checks.end(), [](const BoundCheck& c) { return c.holds; });
    return r;
}

inline bool cubic_root_bounds_check(int n) { return cubic_root_bounds(n).all_hold; }

} // namespace slc
