#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "slc/bigint.hpp"

namespace slc {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. coeffs()[k] is the coefficient of x^k; the leading
/// coefficient is never zero and the zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> low_to_high) {
        for (long long c : low_to_high) coeffs_.emplace_back(c);
        trim();
    }
    explicit IntPoly(std::vector<BigInt> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

    static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
    static IntPoly x() { return IntPoly{0, 1}; }
    /// x - r
    static IntPoly linear(long long r) { return IntPoly{-r, 1}; }
    static IntPoly monomial(int degree, const BigInt& c = 1) {
        std::vector<BigInt> v(degree + 1);
        v[degree] = c;
        return IntPoly(std::move(v));
    }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    BigInt coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[k];
    }
    BigInt leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    BigInt evaluate(const BigInt& t) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    IntPoly& operator*=(const IntPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(IntPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPoly(std::move(out));
    }
    friend IntPoly operator*(const BigInt& s, IntPoly a) {
        for (auto& c : a.coeffs_) c *= s;
        a.trim();
        return a;
    }

    IntPoly pow(int e) const {
        IntPoly result{1};
        IntPoly base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    bool operator==(const IntPoly&) const = default;

    /// Human-readable form, highest power first: "x^3 - 6x^2 + 9x - 4".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const BigInt& c = coeffs_[k];
            if (c == 0) continue;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            if (mag != 1 || k == 0) os << mag;
            if (k >= 1) os << 'x';
            if (k >= 2) os << '^' << k;
            first = false;
        }
        return os.str();
    }

    /// Decimal strings, lowest power first.
    std::vector<std::string> to_decimal_strings() const {
        std::vector<std::string> out;
        for (const auto& c : coeffs_) out.push_back(c.str());
        return out;
    }

    static IntPoly from_decimal_strings(const std::vector<std::string>& s) {
        std::vector<BigInt> v;
        for (const auto& x : s) v.emplace_back(x);
        return IntPoly(std::move(v));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

} // namespace slc
