#pragma once

#include "curvelab/bipoly.hpp"
#include "curvelab/error.hpp"
#include "curvelab/rational.hpp"
#include "curvelab/upoly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace curvelab {

inline constexpr unsigned kDefaultPrecision = 64;
inline constexpr unsigned kPrecisionCap = 4096;

struct IdenticallyZero {
    friend bool operator==(IdenticallyZero, IdenticallyZero) { return true; }
};

/// Result of an order query: a natural number, or the exact zero series.
using SeriesOrder = std::variant<unsigned, IdenticallyZero>;

/// Univariate power series in t known modulo t^precision, or exactly when
/// `exact` is set (then precision is meaningless and reported as infinite).
class TruncSeries {
public:
    static constexpr unsigned kInfinite = std::numeric_limits<unsigned>::max();

    TruncSeries() : exact_(true) {}

    static TruncSeries exact_poly(const std::map<unsigned, Rat>& c) {
        TruncSeries s;
        for (const auto& [e, a] : c)
            if (a != 0) s.c_[e] = a;
        return s;
    }
    static TruncSeries exact_poly(const UPoly& p) {
        TruncSeries s;
        for (std::size_t k = 0; k < p.coeffs().size(); ++k)
            if (p.coeffs()[k] != 0) s.c_[static_cast<unsigned>(k)] = p.coeffs()[k];
        return s;
    }
    static TruncSeries monomial(const Rat& a, unsigned e) { return exact_poly(std::map<unsigned, Rat>{{e, a}}); }
    static TruncSeries truncated(const std::map<unsigned, Rat>& c, unsigned precision) {
        TruncSeries s;
        s.exact_ = false;
        s.precision_ = precision;
        for (const auto& [e, a] : c)
            if (a != 0 && e < precision) s.c_[e] = a;
        return s;
    }

    bool exact() const { return exact_; }
    /// kInfinite when exact.
    unsigned precision() const { return exact_ ? kInfinite : precision_; }
    const std::map<unsigned, Rat>& coeffs() const { return c_; }

    Rat coeff(unsigned e) const {
        if (!exact_ && e >= precision_)
            fail(Errc::PrecisionExhausted, "coefficient of t^" + std::to_string(e) + " beyond precision " +
                                               std::to_string(precision_));
        auto it = c_.find(e);
        return it == c_.end() ? Rat(0) : it->second;
    }

    bool is_known_zero() const { return exact_ && c_.empty(); }

    /// Lowest exponent that might be nonzero: the first stored exponent, or
    /// the precision when nothing nonzero is known.
    unsigned low_bound() const {
        if (!c_.empty()) return c_.begin()->first;
        return precision();
    }

    SeriesOrder order() const {
        if (!c_.empty()) return c_.begin()->first;
        if (exact_) return IdenticallyZero{};
        fail(Errc::PrecisionExhausted, "all coefficients below t^" + std::to_string(precision_) + " vanish");
    }

    /// Order as a number; throws PrecisionExhausted, and returns nullopt for
    /// the exact zero series.
    std::optional<unsigned> finite_order() const {
        auto o = order();
        if (std::holds_alternative<IdenticallyZero>(o)) return std::nullopt;
        return std::get<unsigned>(o);
    }

    TruncSeries derivative() const {
        TruncSeries r;
        r.exact_ = exact_;
        r.precision_ = exact_ ? 0 : (precision_ == 0 ? 0 : precision_ - 1);
        for (const auto& [e, a] : c_)
            if (e > 0) r.c_[e - 1] = a * e;
        return r;
    }

    TruncSeries with_precision(unsigned p) const {
        if (exact_) {
            if (p == kInfinite) return *this;
            return truncated(c_, p);
        }
        return truncated(c_, std::min(p, precision_));
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r;
        r.exact_ = a.exact_ && b.exact_;
        r.precision_ = std::min(a.precision(), b.precision());
        r.c_ = a.c_;
        for (const auto& [e, v] : b.c_) {
            Rat& slot = r.c_[e];
            slot += v;
            if (slot == 0) r.c_.erase(e);
        }
        r.drop_unknown();
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a) {
        TruncSeries r = a;
        for (auto& [e, v] : r.c_) v = -v;
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
    friend TruncSeries operator*(const Rat& s, const TruncSeries& a) {
        TruncSeries r = a;
        if (s == 0) {
            r.c_.clear();
            return r;
        }
        for (auto& [e, v] : r.c_) v *= s;
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r;
        r.exact_ = a.exact_ && b.exact_;
        if (!r.exact_) {
            // Error terms: a known mod t^pa times b of order >= low(b), and symmetrically.
            auto bound = [](unsigned p, unsigned low) -> unsigned {
                if (p == kInfinite || low == kInfinite) return kInfinite;
                return p + low;
            };
            unsigned la = a.is_known_zero() ? kInfinite : a.low_bound();
            unsigned lb = b.is_known_zero() ? kInfinite : b.low_bound();
            r.precision_ = std::min(bound(a.precision(), lb), bound(b.precision(), la));
            if (r.precision_ == kInfinite) {
                // One factor is exactly zero.
                r.exact_ = true;
                return r;
            }
        }
        for (const auto& [ea, va] : a.c_) {
            if (!r.exact_ && ea >= r.precision_) break;
            for (const auto& [eb, vb] : b.c_) {
                if (!r.exact_ && ea + eb >= r.precision_) break;
                Rat& slot = r.c_[ea + eb];
                slot += va * vb;
            }
        }
        r.drop_zeros();
        return r;
    }

    TruncSeries pow(unsigned n) const {
        TruncSeries r = monomial(Rat(1), 0);
        for (unsigned k = 0; k < n; ++k) r = r * *this;
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.exact_ == b.exact_ && a.precision() == b.precision() && a.c_ == b.c_;
    }

    /// Composition s(u(t)) for u with u(0) = 0.
    TruncSeries substitute(const TruncSeries& u) const {
        TruncSeries r;
        r.exact_ = exact_ && u.exact_;
        if (!r.exact_) {
            unsigned lu = u.is_known_zero() ? kInfinite : u.low_bound();
            // s known mod t^p gives s(u) known mod t^(p*low(u)); u's own error enters at least at precision(u).
            unsigned p1 = exact_ ? kInfinite : (lu == kInfinite ? kInfinite : precision_ * lu);
            r.precision_ = std::min(p1, u.precision());
        }
        TruncSeries power = monomial(Rat(1), 0);
        unsigned last = 0;
        for (const auto& [e, a] : c_) {
            while (last < e) {
                power = power * u;
                ++last;
            }
            r = r + a * power;
        }
        if (!r.exact_) r = r.with_precision(r.precision_);
        return r;
    }

    /// Render as a polynomial in t with a trailing O(t^p) when truncated.
    std::string to_string() const {
        BiPoly p;
        for (const auto& [e, a] : c_) p.add_term(Monomial{e, 0}, a);
        std::string s = curvelab::to_string(p, 't', 'y');
        if (!exact_) s += (p.is_zero() ? "O(t^" : " + O(t^") + std::to_string(precision_) + ")";
        return s;
    }

private:
    void drop_zeros() {
        for (auto it = c_.begin(); it != c_.end();) it = it->second == 0 ? c_.erase(it) : std::next(it);
    }
    void drop_unknown() {
        if (exact_) return;
        c_.erase(c_.lower_bound(precision_), c_.end());
    }

    std::map<unsigned, Rat> c_;
    unsigned precision_ = 0;
    bool exact_ = true;
};

/// f(x(t), y(t)). Requires x(0) = y(0) = 0.
inline TruncSeries compose(const BiPoly& f, const TruncSeries& x, const TruncSeries& y) {
    auto vanishes = [](const TruncSeries& s) {
        auto it = s.coeffs().find(0);
        return it == s.coeffs().end() && (s.exact() || s.precision() > 0);
    };
    if (!vanishes(x) || !vanishes(y)) fail(Errc::InvalidArgument, "compose: series must vanish at t = 0");
    unsigned prec = TruncSeries::kInfinite;
    if (!x.exact() || !y.exact()) prec = std::min(x.precision(), y.precision());
    std::vector<TruncSeries> xp{TruncSeries::monomial(Rat(1), 0)}, yp{TruncSeries::monomial(Rat(1), 0)};
    auto cap = [&](const TruncSeries& s) { return prec == TruncSeries::kInfinite ? s : s.with_precision(prec); };
    std::map<unsigned, Rat> acc;
    for (const auto& [m, c] : f.terms()) {
        while (xp.size() <= m.i) xp.push_back(cap(xp.back() * x));
        while (yp.size() <= m.j) yp.push_back(cap(yp.back() * y));
        TruncSeries term = cap(xp[m.i] * yp[m.j]);
        for (const auto& [e, a] : term.coeffs()) {
            if (prec != TruncSeries::kInfinite && e >= prec) continue;
            acc[e] += c * a;
        }
    }
    if (prec == TruncSeries::kInfinite) return TruncSeries::exact_poly(acc);
    return TruncSeries::truncated(acc, prec);
}

inline SeriesOrder series_order(const TruncSeries& s) { return s.order(); }

} // namespace curvelab
