#pragma once

#include "curvelab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace curvelab {

/// Dense univariate polynomial over the rationals; index = exponent.
/// Trailing zeros are never stored, so the zero polynomial is empty.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const Rat& a) { return UPoly(std::vector<Rat>{a}); }
    static UPoly monomial(const Rat& a, std::size_t k) {
        std::vector<Rat> c(k + 1);
        c[k] = a;
        return UPoly(std::move(c));
    }
    static UPoly variable() { return monomial(Rat(1), 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& lead() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

    /// Lowest exponent with nonzero coefficient; nullopt for zero.
    std::optional<std::size_t> order() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return k;
        return std::nullopt;
    }

    Rat operator()(const Rat& t) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rat> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
        return UPoly(std::move(d));
    }

    UPoly monic() const {
        if (is_zero()) return {};
        UPoly r = *this;
        Rat l = lead();
        for (auto& a : r.c_) a /= l;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a) {
        UPoly r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const Rat& s, const UPoly& a) {
        if (s == 0) return {};
        UPoly r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; b must be nonzero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        std::vector<Rat> rem = a.c_;
        long db = b.degree();
        if (a.degree() < db) return {UPoly{}, a};
        std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
        for (long k = a.degree(); k >= db; --k) {
            const Rat& top = rem[static_cast<std::size_t>(k)];
            if (top == 0) continue;
            Rat f = top / b.lead();
            q[static_cast<std::size_t>(k - db)] = f;
            for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
        return {UPoly(std::move(q)), UPoly(std::move(rem))};
    }

    /// Truncate to exponents < n.
    UPoly truncated(std::size_t n) const {
        if (c_.size() <= n) return *this;
        return UPoly(std::vector<Rat>(c_.begin(), c_.begin() + static_cast<long>(n)));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Monic gcd over the rationals (zero if both inputs are zero).
inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto r = UPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Power-series inverse of a unit u (u(0) != 0) modulo t^n.
inline UPoly series_inverse(const UPoly& u, std::size_t n) {
    std::vector<Rat> inv(n);
    if (n == 0) return {};
    Rat u0 = u.coeff(0);
    inv[0] = 1 / u0;
    for (std::size_t k = 1; k < n; ++k) {
        Rat acc(0);
        for (std::size_t j = 1; j <= k && j < u.coeffs().size(); ++j) acc += u.coeffs()[j] * inv[k - j];
        inv[k] = -acc / u0;
    }
    return UPoly(std::move(inv));
}

/// Rational roots with multiplicities, plus the cofactor with no rational roots.
struct RationalRoots {
    std::vector<std::pair<Rat, unsigned>> roots;
    UPoly remainder;
};

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
    n = abs(n);
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace detail

/// Rational root test on a nonzero polynomial. Coefficients are scaled to
/// integers first; candidate roots are p/q with p | a_low and q | a_high.
inline RationalRoots rational_roots(const UPoly& p) {
    RationalRoots out;
    UPoly rest = p.monic();
    if (rest.is_zero()) return out;
    // Zero as a root.
    if (auto o = rest.order(); o && *o > 0) {
        out.roots.emplace_back(Rat(0), static_cast<unsigned>(*o));
        std::vector<Rat> c(rest.coeffs().begin() + static_cast<long>(*o), rest.coeffs().end());
        rest = UPoly(std::move(c));
    }
    if (rest.degree() <= 0) {
        out.remainder = rest;
        return out;
    }
    BigInt lcm_den = 1;
    for (const auto& a : rest.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), a.get_den().get_mpz_t());
    std::vector<BigInt> ints;
    for (const auto& a : rest.coeffs()) ints.push_back(BigInt(a * Rat(lcm_den)));
    auto ps = detail::positive_divisors(ints.front());
    auto qs = detail::positive_divisors(ints.back());
    std::vector<Rat> candidates;
    for (const auto& num : ps)
        for (const auto& den : qs) {
            candidates.push_back(make_rat(num, den));
            candidates.push_back(make_rat(BigInt(-num), den));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        unsigned mult = 0;
        UPoly lin(std::vector<Rat>{-r, Rat(1)});
        while (rest.degree() >= 1 && rest(r) == 0) {
            rest = UPoly::divmod(rest, lin).first;
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(r, mult);
    }
    out.remainder = rest;
    return out;
}

/// Exact k-th root of a rational if it exists in Q.
inline std::optional<Rat> rational_root_of(const Rat& a, unsigned k) {
    if (k == 1) return a;
    if (a == 0) return Rat(0);
    if (a < 0 && k % 2 == 0) return std::nullopt;
    BigInt num = abs(a.get_num());
    BigInt den = a.get_den();
    BigInt rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return std::nullopt;
    Rat r = make_rat(rn, rd);
    if (a < 0) r = -r;
    return r;
}

} // namespace curvelab
