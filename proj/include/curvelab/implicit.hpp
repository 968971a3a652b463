#pragma once

#include "curvelab/bipoly.hpp"
#include "curvelab/bipoly_gcd.hpp"
#include "curvelab/error.hpp"
#include "curvelab/intersection.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace curvelab {

/// i_f = f_y^2 f_xx - 2 f_x f_y f_xy + f_x^2 f_yy
inline BiPoly inflection_polynomial(const BiPoly& f) {
    BiPoly fx = f.derivative(Var::X), fy = f.derivative(Var::Y);
    BiPoly fxx = fx.derivative(Var::X), fxy = fx.derivative(Var::Y), fyy = fy.derivative(Var::Y);
    return fy * fy * fxx - Rat(2) * (fx * fy * fxy) + fx * fx * fyy;
}

/// v_f = (f_x^2 + f_y^2)(f_x^3 f_yyy - 3 f_x^2 f_y f_xyy + 3 f_x f_y^2 f_xxy - f_y^3 f_xxx)
///       - 3((f_x^2 - f_y^2) f_xy - f_x f_y (f_xx - f_yy)) i_f
inline BiPoly vertex_polynomial(const BiPoly& f) {
    BiPoly fx = f.derivative(Var::X), fy = f.derivative(Var::Y);
    BiPoly fxx = fx.derivative(Var::X), fxy = fx.derivative(Var::Y), fyy = fy.derivative(Var::Y);
    BiPoly fxxx = fxx.derivative(Var::X), fxxy = fxx.derivative(Var::Y);
    BiPoly fxyy = fxy.derivative(Var::Y), fyyy = fyy.derivative(Var::Y);
    BiPoly fx2 = fx * fx, fy2 = fy * fy;
    BiPoly third = fx2 * fx * fyyy - Rat(3) * (fx2 * fy * fxyy) + Rat(3) * (fx * fy2 * fxxy) - fy2 * fy * fxxx;
    BiPoly inf = fy2 * fxx - Rat(2) * (fx * fy * fxy) + fx2 * fyy;
    BiPoly mixed = (fx2 - fy2) * fxy - fx * fy * (fxx - fyy);
    return (fx2 + fy2) * third - Rat(3) * (mixed * inf);
}

/// A count that is either finite or infinite with the forcing component.
struct CertifiedCount {
    Count value;
    std::optional<BiPoly> certificate;

    bool finite() const { return value.finite(); }
};

namespace detail {

inline CertifiedCount count_against(const BiPoly& f, const BiPoly& aux) {
    auto r = intersection_multiplicity(f, aux);
    return {r.value, r.certificate};
}

/// Tries m(f, aux(f)) on D-jets for D = 16, 32, 64, where the D-jet of
/// aux(f) depends only on the (D + loss)-jet of f. A value <= D is exact.
template <class Aux>
std::optional<unsigned> count_on_jets(const BiPoly& f, Aux aux, unsigned loss) {
    for (unsigned D = 16; D <= 64; D *= 2) {
        BiPoly a = aux(f.truncated(D + loss)).truncated(D);
        if (auto v = capped_multiplicity(f.truncated(D), a, D)) return v;
        if (f.total_degree() <= static_cast<long>(D)) break;
    }
    return std::nullopt;
}

} // namespace detail

/// I_f = m(f, i_f).
inline CertifiedCount inflection_count(const BiPoly& f) {
    require_through_origin(f, "inflection_count");
    if (auto v = detail::count_on_jets(f, inflection_polynomial, 2)) return {Count(*v), std::nullopt};
    return detail::count_against(f, inflection_polynomial(f));
}

/// V_f = m(f, v_f).
inline CertifiedCount vertex_count(const BiPoly& f) {
    require_through_origin(f, "vertex_count");
    if (auto v = detail::count_on_jets(f, vertex_polynomial, 3)) return {Count(*v), std::nullopt};
    return detail::count_against(f, vertex_polynomial(f));
}

inline bool is_ordinary_inflection(const BiPoly& f) {
    auto c = inflection_count(f);
    return c.finite() && c.value.value() == 1;
}

inline bool is_ordinary_vertex(const BiPoly& f) {
    auto c = vertex_count(f);
    return c.finite() && c.value.value() == 1;
}

enum class CountKind { Inflection, Vertex };

/// Sum of per-factor counts plus 6 (inflections) or 12 (vertices) times the
/// pairwise intersection numbers.
inline Count count_from_factors(const std::vector<BiPoly>& factors, CountKind kind) {
    if (factors.empty()) fail(Errc::InvalidArgument, "count_from_factors: no factors");
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (!intersection_multiplicity(factors[i], factors[j]).finite())
                fail(Errc::SharedComponent, "factors " + std::to_string(i) + " and " + std::to_string(j) +
                                                " share a component through the origin");
    unsigned total = 0;
    bool infinite = false;
    for (const auto& g : factors) {
        if (g.constant_term() != 0) continue; // a unit factor contributes nothing
        auto c = kind == CountKind::Inflection ? inflection_count(g) : vertex_count(g);
        if (!c.finite()) infinite = true;
        else total += c.value.value();
    }
    if (infinite) return Count(Infinite{});
    unsigned weight = kind == CountKind::Inflection ? 6 : 12;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            total += weight * intersection_multiplicity(factors[i], factors[j]).value.value();
    return Count(total);
}

/// Weights (w1, w2) for x and y with weighted degree d.
struct Weights {
    unsigned w1;
    unsigned w2;
    unsigned degree;
};

/// Splits f into its weighted-initial part of degree `w.degree` and the rest,
/// checking that nothing has lower weight.
struct QuasiHomogeneousSplit {
    BiPoly principal;
    BiPoly rest;
};

inline QuasiHomogeneousSplit split_by_weight(const BiPoly& f, const Weights& w) {
    QuasiHomogeneousSplit s;
    for (const auto& [m, c] : f.terms()) {
        unsigned wt = m.i * w.w1 + m.j * w.w2;
        if (wt < w.degree)
            fail(Errc::HypothesisViolated, "term " + to_string(BiPoly::monomial(c, m.i, m.j)) +
                                               " has weight below " + std::to_string(w.degree));
        (wt == w.degree ? s.principal : s.rest).add_term(m, c);
    }
    return s;
}

/// Closed form d(3d - 2w1 - 2w2)/(w1 w2) for semi-quasihomogeneous f, cross-checked
/// against the general engine. `relaxed` skips the "neither weight is 1" test.
struct QuasiHomogeneousResult {
    unsigned closed_form;
    unsigned engine;
};

inline QuasiHomogeneousResult quasihomogeneous_inflection_count(const BiPoly& f, const Weights& w,
                                                                 bool relaxed = false) {
    if (w.w1 == 0 || w.w2 == 0 || w.degree == 0) fail(Errc::HypothesisViolated, "weights must be positive");
    if (std::gcd(w.w1, w.w2) != 1) fail(Errc::HypothesisViolated, "weights are not coprime");
    if (!relaxed && (w.w1 == 1 || w.w2 == 1))
        fail(Errc::HypothesisViolated, "a weight equals 1 (principal part may be homogeneous)");
    auto split = split_by_weight(f, w);
    const BiPoly& g = split.principal;
    if (g.is_zero()) fail(Errc::HypothesisViolated, "no terms of weighted degree " + std::to_string(w.degree));
    bool x_divides = true, y_divides = true;
    for (const auto& [m, c] : g.terms()) {
        if (m.i == 0) x_divides = false;
        if (m.j == 0) y_divides = false;
    }
    if (x_divides) fail(Errc::HypothesisViolated, "x divides the principal part");
    if (y_divides) fail(Errc::HypothesisViolated, "y divides the principal part");
    long d = w.degree;
    long num = d * (3 * d - 2 * static_cast<long>(w.w1) - 2 * static_cast<long>(w.w2));
    long den = static_cast<long>(w.w1) * static_cast<long>(w.w2);
    if (num <= 0 || num % den != 0)
        fail(Errc::HypothesisViolated, "closed form " + std::to_string(num) + "/" + std::to_string(den) +
                                           " is not a positive integer");
    unsigned closed = static_cast<unsigned>(num / den);
    auto engine = inflection_count(f);
    if (!engine.finite()) fail(Errc::ClosedFormMismatch, "engine reports an infinite inflection count");
    if (engine.value.value() != closed)
        fail(Errc::ClosedFormMismatch, "closed form " + std::to_string(closed) + " but engine gives " +
                                           engine.value.to_string());
    return {closed, engine.value.value()};
}

} // namespace curvelab
