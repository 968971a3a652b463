#pragma once

#include "curvelab/bipoly.hpp"
#include "curvelab/bipoly_gcd.hpp"
#include "curvelab/error.hpp"
#include "curvelab/upoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace curvelab {

/// nat | Infinite, used by every count in the library.
struct Infinite {
    friend bool operator==(const Infinite&, const Infinite&) = default;
};

class Count {
public:
    Count(unsigned n) : v_(n) {}
    Count(Infinite) : v_(Infinite{}) {}

    bool finite() const { return std::holds_alternative<unsigned>(v_); }
    unsigned value() const {
        if (!finite()) fail(Errc::Internal, "value() on an infinite count");
        return std::get<unsigned>(v_);
    }
    std::string to_string() const { return finite() ? std::to_string(value()) : "infinite"; }

    friend bool operator==(const Count&, const Count&) = default;

private:
    std::variant<unsigned, Infinite> v_;
};

/// Local intersection number at the origin. Infinite results carry the
/// common component through the origin as certificate.
struct InterResult {
    Count value;
    std::optional<BiPoly> certificate;

    bool finite() const { return value.finite(); }
};

inline void require_through_origin(const BiPoly& f, const char* what) {
    if (f.is_zero()) fail(Errc::InvalidArgument, std::string(what) + ": zero polynomial");
    if (f.constant_term() != 0) fail(Errc::NotThroughOrigin, std::string(what) + ": f(0,0) != 0");
}

/// mult(f): least total degree of a nonzero term.
inline unsigned multiplicity(const BiPoly& f) {
    require_through_origin(f, "multiplicity");
    return static_cast<unsigned>(f.low_degree());
}

/// Lowest-degree homogeneous part F_r.
inline BiPoly tangent_cone(const BiPoly& f) { return f.homogeneous_part(multiplicity(f)); }

namespace detail {

/// f scaled by a rational constant to integer coefficients with gcd 1.
inline BiPoly primitive_integer_part(const BiPoly& f) {
    if (f.is_zero()) return f;
    BigInt num(0), den(1);
    for (const auto& [m, c] : f.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return Rat(den, num) * f;
}

/// m(f, g) computed on D-jets, where D = cap. Returns the value when it is
/// <= cap and nullopt otherwise. Every step uses only
///   m(f, g + h f) = m(f, g),   m(f, y h) = m(f, y) + m(f, h),   m(y, g) = ord g(x, 0),
/// and the fact that m(f, g) <= D forces m to depend only on the D-jets.
inline std::optional<unsigned> capped_multiplicity(BiPoly f, BiPoly g, unsigned cap) {
    unsigned acc = 0;
    for (;;) {
        f = f.truncated(cap);
        g = g.truncated(cap);
        if (f.constant_term() != 0 || g.constant_term() != 0) return acc;
        if (f.is_zero() || g.is_zero() || cap == 0) return std::nullopt;
        UPoly f0 = f.restrict_to_axis(Var::X), g0 = g.restrict_to_axis(Var::X);
        auto r = f0.order(), s = g0.order();
        if (!r && !s) return std::nullopt; // y divides both jets
        if (!r || (s && *r > *s)) {
            std::swap(f, g);
            std::swap(f0, g0);
            std::swap(r, s);
        }
        // Now r is finite and r <= s (s may be infinite).
        if (s) {
            // Kill g(x, 0) without division: g <- u g - x^(s-r) v f, where
            // f(x, 0) = x^r u and g(x, 0) = x^s v; u is a unit so m is unchanged.
            UPoly u(std::vector<Rat>(f0.coeffs().begin() + static_cast<long>(*r), f0.coeffs().end()));
            UPoly v(std::vector<Rat>(g0.coeffs().begin() + static_cast<long>(*s), g0.coeffs().end()));
            BiPoly ug = BiPoly::multiply(BiPoly::from_upoly(u, Var::X), g, cap);
            BiPoly vf = BiPoly::multiply(BiPoly::from_upoly(v, Var::X).shifted(*s - *r, 0), f, cap);
            g = primitive_integer_part(ug - vf);
        }
        // g(x, 0) vanishes on the jet, so g = y * h and m(f, g) = m(f, y) + m(f, h) = r + m(f, h).
        BiPoly h;
        for (const auto& [m, c] : g.terms()) {
            if (m.j == 0) fail(Errc::Internal, "capped_multiplicity: reduction left an x-term");
            h.add_term(Monomial{m.i, m.j - 1}, c);
        }
        if (*r > cap) return std::nullopt;
        acc += *r;
        cap -= *r;
        g = std::move(h);
    }
}

} // namespace detail

/// m(f, g) at the origin. Infinite iff f and g share a component through the
/// origin; the gcd is returned as certificate.
inline InterResult intersection_multiplicity(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero()) {
        const BiPoly& other = f.is_zero() ? g : f;
        if (!other.is_zero() && other.constant_term() != 0) return {Count(0u), std::nullopt};
        BiPoly cert = other.is_zero() ? BiPoly::x() : other.normalized();
        return {Count(Infinite{}), cert};
    }
    if (f.constant_term() != 0 || g.constant_term() != 0) return {Count(0u), std::nullopt};
    BiPoly d = gcd(f, g);
    if (d.total_degree() > 0 && d.constant_term() == 0) return {Count(Infinite{}), d};
    unsigned cap = 16;
    for (;;) {
        if (auto v = detail::capped_multiplicity(f, g, cap)) return {Count(*v), std::nullopt};
        if (cap > (1u << 20)) fail(Errc::NonConvergent, "intersection multiplicity exceeds jet cap");
        cap *= 2;
    }
}

/// m(f, g) when it is already known that f and g have no common component
/// through the origin.
inline unsigned intersection_multiplicity_finite(const BiPoly& f, const BiPoly& g) {
    if (f.constant_term() != 0 || g.constant_term() != 0) return 0;
    for (unsigned cap = 16;; cap *= 2) {
        if (auto v = detail::capped_multiplicity(f, g, cap)) return *v;
        if (cap > (1u << 20)) fail(Errc::NonConvergent, "intersection multiplicity exceeds jet cap");
    }
}

/// mu(f) = m(f_x, f_y); Infinite for non-isolated singularities.
inline Count milnor_number(const BiPoly& f) {
    if (f.constant_term() != 0) fail(Errc::NotThroughOrigin, "milnor_number: f(0,0) != 0");
    return intersection_multiplicity(f.derivative(Var::X), f.derivative(Var::Y)).value;
}

/// Both sides of m(f, f_y) = mu(f) + m(f(0,y), x) - 1.
struct TeissierValue {
    unsigned lhs;        // m(f, f_y)
    unsigned milnor;
    unsigned axis_order; // ord_y f(0, y)
    bool holds() const { return lhs + 1 == milnor + axis_order; }
};

inline TeissierValue teissier_value(const BiPoly& f) {
    require_through_origin(f, "teissier_value");
    auto axis = f.restrict_to_axis(Var::Y).order();
    if (!axis) fail(Errc::NotYGeneral, "f(0, y) vanishes identically");
    auto lhs = intersection_multiplicity(f, f.derivative(Var::Y));
    auto mu = milnor_number(f);
    if (!lhs.finite() || !mu.finite()) fail(Errc::NonIsolated, "teissier_value: non-isolated singularity");
    TeissierValue t{lhs.value.value(), mu.value(), static_cast<unsigned>(*axis)};
    if (!t.holds())
        fail(Errc::HypothesisViolated, "m(f, f_y) = " + std::to_string(t.lhs) + " but mu + m - 1 = " +
                                           std::to_string(t.milnor + t.axis_order - 1));
    return t;
}

} // namespace curvelab
