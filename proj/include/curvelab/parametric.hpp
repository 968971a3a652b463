#pragma once

#include "curvelab/error.hpp"
#include "curvelab/intersection.hpp"
#include "curvelab/rational.hpp"
#include "curvelab/series.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <string>

namespace curvelab {

/// A parametrized germ t -> (x(t), y(t)) through the origin.
class Param {
public:
    /// Validates x(0) = y(0) = 0, that not both are zero, and primitivity
    /// (the gcd of all exponents that occur is 1). A truncated germ can only
    /// be rejected once its known exponents fix the gcd.
    Param(TruncSeries x, TruncSeries y) : x_(std::move(x)), y_(std::move(y)) {
        auto vanishes = [](const TruncSeries& s) { return s.coeffs().find(0) == s.coeffs().end(); };
        if (!vanishes(x_) || !vanishes(y_)) fail(Errc::InvalidArgument, "parametrization must vanish at t = 0");
        if (x_.is_known_zero() && y_.is_known_zero()) fail(Errc::InvalidArgument, "both components are zero");
        unsigned g = 0;
        for (const auto* s : {&x_, &y_})
            for (const auto& [e, a] : s->coeffs()) g = std::gcd(g, e);
        if (g > 1 && x_.exact() && y_.exact())
            fail(Errc::NotPrimitive, "all exponents are divisible by " + std::to_string(g) +
                                         " (reparametrization in t^" + std::to_string(g) + ")");
    }

    static Param polynomial(const UPoly& x, const UPoly& y) {
        return Param(TruncSeries::exact_poly(x), TruncSeries::exact_poly(y));
    }

    const TruncSeries& x() const { return x_; }
    const TruncSeries& y() const { return y_; }
    bool exact() const { return x_.exact() && y_.exact(); }

    std::string to_string() const { return "(" + x_.to_string() + ", " + y_.to_string() + ")"; }

private:
    TruncSeries x_;
    TruncSeries y_;
};

/// i_gamma = x'y'' - y'x''.
inline TruncSeries inflection_series(const Param& g) {
    TruncSeries x1 = g.x().derivative(), y1 = g.y().derivative();
    return x1 * y1.derivative() - y1 * x1.derivative();
}

/// v_gamma = (x'^2 + y'^2)(x'y''' - x'''y') + 3(x'x'' + y'y'')(x''y' - x'y'').
inline TruncSeries vertex_series(const Param& g) {
    TruncSeries x1 = g.x().derivative(), y1 = g.y().derivative();
    TruncSeries x2 = x1.derivative(), y2 = y1.derivative();
    TruncSeries x3 = x2.derivative(), y3 = y2.derivative();
    TruncSeries speed = x1 * x1 + y1 * y1;
    TruncSeries third = x1 * y3 - x3 * y1;
    TruncSeries dot = x1 * x2 + y1 * y2;
    TruncSeries wr = x2 * y1 - x1 * y2;
    return speed * third + Rat(3) * (dot * wr);
}

namespace detail {

inline Count order_count(const TruncSeries& s) {
    auto o = s.finite_order();
    return o ? Count(*o) : Count(Infinite{});
}

} // namespace detail

/// I_gamma = ord i_gamma; Infinite when the image is a line.
inline Count inflection_order(const Param& g) { return detail::order_count(inflection_series(g)); }

/// V_gamma = ord v_gamma; Infinite when the image is a line or a circle.
inline Count vertex_order(const Param& g) { return detail::order_count(vertex_series(g)); }

/// Normal form data (t^m, a t^n + ...), n > m.
struct NormalForm {
    unsigned m;
    std::optional<unsigned> n; // empty when y = 0 exactly
    Rat a;
};

inline NormalForm normal_form(const Param& g) {
    const auto& xc = g.x().coeffs();
    if (!g.x().exact() || xc.size() != 1 || xc.begin()->second != 1)
        fail(Errc::NotNormalForm, "x(t) must be exactly t^m, got " + g.x().to_string());
    NormalForm nf{xc.begin()->first, std::nullopt, Rat(0)};
    if (g.y().is_known_zero()) return nf;
    unsigned n = *g.y().finite_order();
    if (n <= nf.m)
        fail(Errc::NotNormalForm, "ord y(t) = " + std::to_string(n) + " must exceed m = " + std::to_string(nf.m));
    nf.n = n;
    nf.a = g.y().coeff(n);
    return nf;
}

/// beta: the smallest exponent of y(t) not divisible by m.
inline unsigned first_puiseux_exponent(const Param& g) {
    NormalForm nf = normal_form(g);
    if (nf.m < 2) fail(Errc::Smooth, "first Puiseux exponent needs a singular branch (m >= 2)");
    for (const auto& [e, a] : g.y().coeffs())
        if (e % nf.m != 0) return e;
    fail(Errc::PrecisionExhausted, "no exponent prime to m below precision " + std::to_string(g.y().precision()));
}

/// A(x^2 + y^2) + 2Bx + 2Cy = 0; A = 0 is a line.
struct CircleCoeffs {
    Rat A;
    Rat B;
    Rat C;
};

struct OsculatingData {
    CircleCoeffs circle;
    unsigned lambda;
    bool degenerate;               // the circle is x^2 + y^2 = 0
    unsigned tangent_line_contact; // order of contact with y = 0
};

namespace detail {

/// s / t^k for a series with no terms below t^k.
inline TruncSeries shift_down(const TruncSeries& s, unsigned k) {
    std::map<unsigned, Rat> c;
    for (const auto& [e, a] : s.coeffs()) {
        if (e < k) fail(Errc::Internal, "shift_down: term below t^" + std::to_string(k));
        c[e - k] = a;
    }
    if (s.exact()) return TruncSeries::exact_poly(c);
    return TruncSeries::truncated(c, s.precision() - k);
}

} // namespace detail

/// The circle of maximal contact and its order lambda, for a singular
/// parametrization in normal form (t^m, a t^n + ...).
inline OsculatingData osculating_circle(const Param& g) {
    NormalForm nf = normal_form(g);
    if (nf.m < 2) fail(Errc::Smooth, "osculating_circle: smooth branch (m = 1)");
    if (!nf.n) fail(Errc::NotNormalForm, "y(t) vanishes identically");
    unsigned m = nf.m, n = *nf.n;
    if (n < 2 * m) return {{Rat(1), Rat(0), Rat(0)}, 2 * m, true, n};
    if (n > 2 * m) return {{Rat(1), Rat(0), Rat(-1, 2)}, 2 * m, false, n};
    // n = 2m: y = t^(2m)(a + y1), residual a t^(2m)(a + y1)^2 - y1.
    const Rat& a = nf.a;
    TruncSeries y1 = detail::shift_down(g.y(), 2 * m) - TruncSeries::monomial(a, 0);
    TruncSeries base = TruncSeries::monomial(a, 0) + y1;
    TruncSeries residual = TruncSeries::monomial(a, 2 * m) * base * base - y1;
    auto o = residual.finite_order();
    if (!o) fail(Errc::Internal, "osculating_circle: residual series vanishes identically");
    Rat c = -1 / (2 * a);
    c.canonicalize();
    return {{Rat(1), Rat(0), c}, 2 * m + *o, false, n};
}

/// Both sides of V_gamma = I_gamma + lambda - 3.
struct LambdaRelation {
    Count inflections;
    Count vertices;
    unsigned lambda;

    bool holds() const {
        return inflections.finite() && vertices.finite() &&
               vertices.value() + 3 == inflections.value() + lambda;
    }
};

inline LambdaRelation lambda_relation(const Param& g) {
    auto osc = osculating_circle(g);
    return {inflection_order(g), vertex_order(g), osc.lambda};
}

inline bool verify_lambda_relation(const Param& g) { return lambda_relation(g).holds(); }

} // namespace curvelab
