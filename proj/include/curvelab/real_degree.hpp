#pragma once

#include "curvelab/bipoly.hpp"
#include "curvelab/error.hpp"
#include "curvelab/implicit.hpp"
#include "curvelab/parametric.hpp"
#include "curvelab/rational.hpp"
#include "curvelab/upoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace curvelab {

enum class MapKind { InflectionPair, VertexPair, Custom };

inline std::string_view map_kind_name(MapKind k) {
    switch (k) {
    case MapKind::InflectionPair: return "inflection_pair";
    case MapKind::VertexPair: return "vertex_pair";
    case MapKind::Custom: return "custom";
    }
    return "custom";
}

struct DegreeReport {
    MapKind map_kind = MapKind::Custom;
    Rat radius;
    long degree = 0;
    unsigned samples_used = 0;
};

namespace detail {

/// Distinct real roots of p in [a, b] by a Sturm sequence.
inline unsigned sturm_count(const UPoly& p, const Rat& a, const Rat& b) {
    if (p.degree() <= 0) return 0;
    std::vector<UPoly> seq{p, p.derivative()};
    while (seq.back().degree() > 0) {
        UPoly r = UPoly::divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    auto changes = [&](const Rat& t) {
        unsigned n = 0;
        int last = 0;
        for (const auto& q : seq) {
            int s = sgn(q(t));
            if (s == 0) continue;
            if (last != 0 && s != last) ++n;
            last = s;
        }
        return n;
    };
    unsigned at_a = p(a) == 0 ? 1 : 0;
    return changes(a) - changes(b) + at_a;
}

/// P on one half of the circle of radius r, times (1 + s^2)^d:
/// (x, y) = sign * r((1 - s^2), 2s) / (1 + s^2), s in [-1, 1].
inline UPoly circle_chart(const BiPoly& P, const Rat& r, int sign, unsigned d) {
    const UPoly s = UPoly::variable();
    const UPoly one = UPoly::constant(Rat(1));
    const UPoly X = Rat(sign) * r * (one - s * s);
    const UPoly Y = Rat(sign) * r * (Rat(2) * s);
    const UPoly W = one + s * s;
    std::vector<UPoly> xp{one}, yp{one}, wp{one};
    for (unsigned k = 1; k <= d; ++k) {
        xp.push_back(xp.back() * X);
        yp.push_back(yp.back() * Y);
        wp.push_back(wp.back() * W);
    }
    UPoly out;
    for (const auto& [m, c] : P.terms()) out = out + c * (xp[m.i] * yp[m.j] * wp[d - m.degree()]);
    return out;
}

/// Upper bound for |h'| on [-R, R].
inline Rat derivative_bound(const UPoly& h, const Rat& R) {
    Rat L(0), pw(1);
    for (std::size_t k = 1; k < h.coeffs().size(); ++k) {
        L += abs(h.coeffs()[k]) * static_cast<unsigned long>(k) * pw;
        pw *= R;
    }
    return L;
}

struct Vec {
    Rat x;
    Rat y;
};

/// Signed crossings of the positive x-axis by the segment a -> b.
inline long ray_crossing(const Vec& a, const Vec& b) {
    Rat cross = a.x * b.y - a.y * b.x;
    if (a.y <= 0 && b.y > 0 && cross > 0) return 1;
    if (a.y > 0 && b.y <= 0 && cross < 0) return -1;
    return 0;
}

/// Winding of s -> (p(s), q(s)) over [-1, 1]; arcs are refined until each
/// lies in the open half-plane facing its midpoint value.
class ArcWinder {
public:
    ArcWinder(UPoly p, UPoly q, unsigned max_samples) : p_(std::move(p)), q_(std::move(q)), cap_(max_samples) {}

    long run() {
        Vec a = at(Rat(-1)), b = at(Rat(1));
        return arc(Rat(-1), a, Rat(1), b);
    }
    unsigned samples() const { return samples_; }

private:
    Vec at(const Rat& s) {
        ++samples_;
        if (samples_ > cap_) fail(Errc::NonConvergent, "winding subdivision exceeded " + std::to_string(cap_) + " samples");
        return {p_(s), q_(s)};
    }

    long arc(const Rat& a, const Vec& va, const Rat& b, const Vec& vb) {
        Rat m = (a + b) / 2;
        Vec vm = at(m);
        if (vm.x == 0 && vm.y == 0) fail(Errc::ZeroOnCircle, "the map vanishes at a sample point");
        UPoly h = vm.x * p_ + vm.y * q_;
        Rat R = std::max(abs(a), abs(b));
        Rat half = (b - a) / 2;
        if (h(m) > derivative_bound(h, R) * half) return ray_crossing(va, vb);
        return arc(a, va, m, vm) + arc(m, vm, b, vb);
    }

    UPoly p_;
    UPoly q_;
    unsigned cap_;
    unsigned samples_ = 0;
};

} // namespace detail

/// Winding number of (P, Q) along the circle of the given radius about the origin.
inline DegreeReport winding_degree(const BiPoly& P, const BiPoly& Q, const Rat& radius, MapKind kind = MapKind::Custom,
                                   unsigned max_samples = 1u << 20) {
    if (radius <= 0) fail(Errc::InvalidArgument, "radius must be positive");
    unsigned d = std::max(P.total_degree(), Q.total_degree());
    DegreeReport rep{kind, radius, 0, 0};
    for (int sign : {1, -1}) {
        UPoly p = detail::circle_chart(P, radius, sign, d);
        UPoly q = detail::circle_chart(Q, radius, sign, d);
        UPoly g = gcd(p, q);
        if (p.is_zero() && q.is_zero()) fail(Errc::ZeroOnCircle, "the map vanishes on the whole circle");
        if (detail::sturm_count(g, Rat(-1), Rat(1)) > 0)
            fail(Errc::ZeroOnCircle, "P and Q have a common zero on the circle of radius " + to_string(radius));
        detail::ArcWinder w(std::move(p), std::move(q), max_samples);
        rep.degree += w.run();
        rep.samples_used += w.samples();
    }
    return rep;
}

inline DegreeReport inflection_degree(const BiPoly& f, const Rat& radius) {
    return winding_degree(f, inflection_polynomial(f), radius, MapKind::InflectionPair);
}

inline DegreeReport vertex_degree(const BiPoly& f, const Rat& radius) {
    return winding_degree(f, vertex_polynomial(f), radius, MapKind::VertexPair);
}

enum class VertexKind { Inward, Outward };

inline std::string_view vertex_kind_name(VertexKind k) { return k == VertexKind::Inward ? "inward" : "outward"; }

namespace detail {

/// Curvature data at t0 for a polynomial parametrization: N = x'y'' - y'x''
/// (sign of kappa), S = x'^2 + y'^2, and W = S N' - 3(x'x'' + y'y'')N, which
/// vanishes exactly where kappa' does.
struct CurvatureJets {
    Rat N;
    Rat S;
    Rat W;
    Rat dW;
};

inline UPoly as_poly(const TruncSeries& s) {
    if (!s.exact()) fail(Errc::InvalidArgument, "a real parametrization must be polynomial");
    std::vector<Rat> c;
    for (const auto& [e, a] : s.coeffs()) {
        if (c.size() <= e) c.resize(e + 1);
        c[e] = a;
    }
    return UPoly(std::move(c));
}

inline CurvatureJets curvature_jets(const Param& g, const Rat& t0) {
    UPoly x1 = as_poly(g.x()).derivative(), y1 = as_poly(g.y()).derivative();
    UPoly x2 = x1.derivative(), y2 = y1.derivative();
    UPoly N = x1 * y2 - y1 * x2;
    UPoly S = x1 * x1 + y1 * y1;
    UPoly W = S * N.derivative() - Rat(3) * ((x1 * x2 + y1 * y2) * N);
    return {N(t0), S(t0), W(t0), W.derivative()(t0)};
}

} // namespace detail

/// Inward iff kappa * kappa'' > 0 at the vertex t0.
inline VertexKind vertex_orientation(const Param& g, const Rat& t0) {
    auto j = detail::curvature_jets(g, t0);
    if (j.S == 0) fail(Errc::InvalidArgument, "the parametrization is singular at t0");
    if (j.N == 0) fail(Errc::NotAVertex, "curvature vanishes at t0 (inflection)");
    if (j.W != 0) fail(Errc::NotAVertex, "curvature is not stationary at t0");
    if (j.dW == 0) fail(Errc::DegenerateVertex, "kappa'' vanishes at t0");
    return sgn(j.N) * sgn(j.dW) > 0 ? VertexKind::Inward : VertexKind::Outward;
}

struct IndexReport {
    VertexKind kind;
    int kappa_sign;
    long predicted;
    DegreeReport computed;
    BiPoly local_equation;

    bool pass() const { return predicted == computed.degree; }
};

namespace detail {

/// Equation of the curve near g(t0), moved to the origin, with its gradient
/// on the right of the direction of travel.
inline BiPoly local_equation(const Param& g, const Rat& t0) {
    UPoly X = as_poly(g.x()), Y = as_poly(g.y());
    auto recentre = [&](const UPoly& p) {
        UPoly s = UPoly::constant(t0) + UPoly::variable();
        UPoly out;
        UPoly pw = UPoly::constant(Rat(1));
        for (const auto& c : p.coeffs()) {
            out = out + c * pw;
            pw = pw * s;
        }
        return out - UPoly::constant(p(t0));
    };
    UPoly xr = recentre(X), yr = recentre(Y);
    auto graph = [](const UPoly& lin, const UPoly& other, Var dep) {
        // other(u / a) as a polynomial in u, where lin = a t.
        Rat a = lin.coeff(1);
        Rat inv = 1 / a, pw(1);
        std::vector<Rat> c;
        for (const auto& k : other.coeffs()) {
            c.push_back(k * pw);
            pw *= inv;
        }
        BiPoly h = BiPoly::from_upoly(UPoly(std::move(c)), dep == Var::Y ? Var::X : Var::Y);
        BiPoly v = dep == Var::Y ? BiPoly::y() : BiPoly::x();
        return std::pair<BiPoly, Rat>(v - h, a);
    };
    if (xr.degree() == 1) {
        auto [f, a] = graph(xr, yr, Var::Y); // f = y - h(x), gradient (-h', 1)
        return a > 0 ? Rat(-1) * f : f;
    }
    if (yr.degree() == 1) {
        auto [f, a] = graph(yr, xr, Var::X); // f = x - h(y), gradient (1, -h')
        return a > 0 ? f : Rat(-1) * f;
    }
    fail(Errc::InvalidArgument, "index_consistency needs x(t) or y(t) of degree 1 about t0");
}

} // namespace detail

/// Index of (f, v_f) at an ordinary vertex against the sign predicted from
/// the vertex kind and the sign of kappa.
inline IndexReport index_consistency(const Param& g, const Rat& t0, const Rat& radius) {
    VertexKind kind = vertex_orientation(g, t0);
    int ks = sgn(detail::curvature_jets(g, t0).N);
    BiPoly f = detail::local_equation(g, t0);
    long predicted = (kind == VertexKind::Inward ? 1 : -1) * ks;
    return {kind, ks, predicted, vertex_degree(f, radius), f};
}

} // namespace curvelab
