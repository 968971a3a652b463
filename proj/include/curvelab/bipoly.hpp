#pragma once

#include "curvelab/error.hpp"
#include "curvelab/rational.hpp"
#include "curvelab/upoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvelab {

enum class Var { X, Y };

/// Exponent pair of x^i y^j.
struct Monomial {
    unsigned i = 0;
    unsigned j = 0;

    unsigned degree() const { return i + j; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order, x before y: lower total degree first, then higher x-power.
/// This is also the canonical printing order.
struct GradedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.i > b.i;
    }
};

/// Sparse bivariate polynomial with rational coefficients. Zero
/// coefficients are never stored.
class BiPoly {
public:
    using TermMap = std::map<Monomial, Rat, GradedOrder>;

    BiPoly() = default;

    static BiPoly constant(const Rat& a) { return monomial(a, 0, 0); }
    static BiPoly monomial(const Rat& a, unsigned i, unsigned j) {
        BiPoly p;
        if (a != 0) p.terms_.emplace(Monomial{i, j}, a);
        return p;
    }
    static BiPoly x() { return monomial(Rat(1), 1, 0); }
    static BiPoly y() { return monomial(Rat(1), 0, 1); }
    static BiPoly from_terms(const std::vector<std::pair<Monomial, Rat>>& ts) {
        BiPoly p;
        for (const auto& [m, a] : ts) p.add_term(m, a);
        return p;
    }
    /// p(x) as a bivariate polynomial, in x or in y.
    static BiPoly from_upoly(const UPoly& u, Var v) {
        BiPoly p;
        for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
            unsigned e = static_cast<unsigned>(k);
            p.add_term(v == Var::X ? Monomial{e, 0} : Monomial{0, e}, u.coeffs()[k]);
        }
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rat coeff(unsigned i, unsigned j) const {
        auto it = terms_.find(Monomial{i, j});
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat constant_term() const { return coeff(0, 0); }

    /// Total degree; -1 for zero.
    long total_degree() const { return is_zero() ? -1 : static_cast<long>(terms_.rbegin()->first.degree()); }
    /// Lowest total degree of a term; -1 for zero.
    long low_degree() const { return is_zero() ? -1 : static_cast<long>(terms_.begin()->first.degree()); }

    long degree_in(Var v) const {
        long d = -1;
        for (const auto& [m, a] : terms_) d = std::max<long>(d, v == Var::X ? m.i : m.j);
        return d;
    }

    void add_term(const Monomial& m, const Rat& a) {
        if (a == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, a);
        if (!inserted) {
            it->second += a;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [m, a] : o.terms_) add_term(m, a);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [m, a] : o.terms_) add_term(m, -a);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
        return r;
    }
    friend BiPoly operator*(const Rat& s, const BiPoly& a) {
        BiPoly r;
        if (s == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, s * c);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) { return multiply(a, b, std::nullopt); }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    /// Product with every term of total degree > max_degree dropped.
    static BiPoly multiply(const BiPoly& a, const BiPoly& b, std::optional<unsigned> max_degree) {
        BiPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ma, ca] : a.terms_) {
            if (max_degree && ma.degree() > *max_degree) break;
            for (const auto& [mb, cb] : b.terms_) {
                if (max_degree && ma.degree() + mb.degree() > *max_degree) break;
                r.add_term(Monomial{ma.i + mb.i, ma.j + mb.j}, ca * cb);
            }
        }
        return r;
    }

    BiPoly pow(unsigned n) const {
        BiPoly r = constant(Rat(1));
        BiPoly base = *this;
        while (n) {
            if (n & 1u) r *= base;
            n >>= 1u;
            if (n) base *= base;
        }
        return r;
    }

    /// Multiply by x^a y^b.
    BiPoly shifted(unsigned a, unsigned b) const {
        BiPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.i + a, m.j + b}, c);
        return r;
    }

    BiPoly derivative(Var v) const {
        BiPoly r;
        for (const auto& [m, c] : terms_) {
            if (v == Var::X && m.i > 0) r.add_term(Monomial{m.i - 1, m.j}, c * m.i);
            if (v == Var::Y && m.j > 0) r.add_term(Monomial{m.i, m.j - 1}, c * m.j);
        }
        return r;
    }

    /// Terms of total degree exactly d.
    BiPoly homogeneous_part(unsigned d) const {
        BiPoly r;
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) r.terms_.emplace(m, c);
        return r;
    }

    /// Drop terms of total degree > d.
    BiPoly truncated(unsigned d) const {
        BiPoly r;
        for (const auto& [m, c] : terms_) {
            if (m.degree() > d) break;
            r.terms_.emplace_hint(r.terms_.end(), m, c);
        }
        return r;
    }

    Rat evaluate(const Rat& x, const Rat& y) const {
        Rat acc(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (unsigned k = 0; k < m.i; ++k) t *= x;
            for (unsigned k = 0; k < m.j; ++k) t *= y;
            acc += t;
        }
        return acc;
    }

    /// f(x,0) (v == X) or f(0,y) (v == Y) as a univariate polynomial.
    UPoly restrict_to_axis(Var v) const {
        std::vector<Rat> c;
        for (const auto& [m, a] : terms_) {
            unsigned other = v == Var::X ? m.j : m.i;
            unsigned e = v == Var::X ? m.i : m.j;
            if (other != 0) continue;
            if (c.size() <= e) c.resize(e + 1);
            c[e] = a;
        }
        return UPoly(std::move(c));
    }

    /// f(X(x,y), Y(x,y)) for polynomial substitutions.
    BiPoly substitute(const BiPoly& X, const BiPoly& Y, std::optional<unsigned> max_degree = std::nullopt) const {
        std::vector<BiPoly> xp{constant(Rat(1))}, yp{constant(Rat(1))};
        BiPoly r;
        for (const auto& [m, c] : terms_) {
            while (xp.size() <= m.i) xp.push_back(multiply(xp.back(), X, max_degree));
            while (yp.size() <= m.j) yp.push_back(multiply(yp.back(), Y, max_degree));
            r += c * multiply(xp[m.i], yp[m.j], max_degree);
        }
        return r;
    }

    /// f(y, x).
    BiPoly swapped() const {
        BiPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.j, m.i}, c);
        return r;
    }

    /// Scale so the first term in printing order has coefficient 1.
    BiPoly normalized() const {
        if (is_zero()) return {};
        return (1 / terms_.begin()->second) * *this;
    }

private:
    TermMap terms_;
};

/// Coefficients of f as a polynomial in y over Q[x]: result[j] = coeff of y^j.
inline std::vector<UPoly> coefficients_in_y(const BiPoly& f) {
    long dy = f.degree_in(Var::Y);
    std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(dy + 1));
    for (const auto& [m, c] : f.terms()) {
        auto& v = raw[m.j];
        if (v.size() <= m.i) v.resize(m.i + 1);
        v[m.i] = c;
    }
    std::vector<UPoly> out;
    out.reserve(raw.size());
    for (auto& v : raw) out.emplace_back(std::move(v));
    return out;
}

inline BiPoly from_coefficients_in_y(const std::vector<UPoly>& cs) {
    BiPoly f;
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (std::size_t i = 0; i < cs[j].coeffs().size(); ++i)
            f.add_term(Monomial{static_cast<unsigned>(i), static_cast<unsigned>(j)}, cs[j].coeffs()[i]);
    return f;
}

namespace detail {

inline std::string monomial_string(const Monomial& m, char vx, char vy) {
    std::string s;
    auto var = [&](char v, unsigned e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) s += '^' + std::to_string(e);
    };
    var(vx, m.i);
    var(vy, m.j);
    return s;
}

} // namespace detail

/// Canonical rendering, e.g. "x^2 - 3/2*x*y + y^3". Reparses to the same
/// polynomial.
inline std::string to_string(const BiPoly& f, char vx = 'x', char vy = 'y') {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        a = abs(a);
        std::string mono = detail::monomial_string(m, vx, vy);
        if (mono.empty()) {
            out += a.get_str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.get_str() + "*" + mono;
        }
        first = false;
    }
    return out;
}

/// Exact quotient a / b, or nullopt if b does not divide a. Division by
/// leading terms in lexicographic order (y major).
inline std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) fail(Errc::InvalidArgument, "division by the zero polynomial");
    auto lex_lead = [](const BiPoly& p) {
        auto best = p.terms().begin();
        for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
            const auto& m = it->first;
            const auto& bm = best->first;
            if (m.j > bm.j || (m.j == bm.j && m.i > bm.i)) best = it;
        }
        return *best;
    };
    auto [lb, cb] = lex_lead(b);
    BiPoly rem = a;
    BiPoly q;
    while (!rem.is_zero()) {
        auto [lr, cr] = lex_lead(rem);
        if (lr.i < lb.i || lr.j < lb.j) return std::nullopt;
        BiPoly t = BiPoly::monomial(cr / cb, lr.i - lb.i, lr.j - lb.j);
        q += t;
        rem -= t * b;
    }
    return q;
}

} // namespace curvelab
