#pragma once

#include "curvelab/bipoly.hpp"
#include "curvelab/error.hpp"
#include "curvelab/intersection.hpp"
#include "curvelab/parametric.hpp"
#include "curvelab/series.hpp"
#include "curvelab/upoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace curvelab {

/// A compact edge of the local Newton polygon, listed from the end nearest
/// the y-exponent axis. slope = (change in x-exponent) / (change in y-exponent).
struct NewtonEdge {
    Monomial from;
    Monomial to;
    Rat slope;
    unsigned length; // lattice length

    /// q/p = |slope|: the roots attached to this edge behave like y ~ c x^(q/p).
    Rat ratio() const { return abs(slope); }
};

namespace detail {

inline std::vector<NewtonEdge> newton_edges(const BiPoly& f) {
    // Lowest j for each i, then the lower convex hull.
    std::map<unsigned, unsigned> lowest;
    for (const auto& [m, c] : f.terms()) {
        auto it = lowest.find(m.i);
        if (it == lowest.end() || m.j < it->second) lowest[m.i] = m.j;
    }
    std::vector<Monomial> pts;
    for (const auto& [i, j] : lowest) pts.push_back(Monomial{i, j});
    auto cross = [](const Monomial& o, const Monomial& a, const Monomial& b) {
        long ax = static_cast<long>(a.i) - o.i, ay = static_cast<long>(a.j) - o.j;
        long bx = static_cast<long>(b.i) - o.i, by = static_cast<long>(b.j) - o.j;
        return ax * by - ay * bx;
    };
    std::vector<Monomial> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    std::vector<NewtonEdge> edges;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const auto& a = hull[k];
        const auto& b = hull[k + 1];
        if (b.j >= a.j) break; // the rest is non-compact
        long di = static_cast<long>(b.i) - a.i, dj = static_cast<long>(b.j) - a.j;
        unsigned len = std::gcd(static_cast<unsigned>(di), static_cast<unsigned>(-dj));
        edges.push_back({a, b, Rat(di, dj), len});
    }
    for (auto& e : edges) e.slope.canonicalize();
    return edges;
}

} // namespace detail

inline std::vector<NewtonEdge> newton_polygon(const BiPoly& f) {
    require_through_origin(f, "newton_polygon");
    return detail::newton_edges(f);
}

/// Direction [a:b] of a tangent line, normalized to [1:c] or [0:1].
struct Direction {
    Rat a;
    Rat b;

    bool vertical() const { return a == 0; }
    friend bool operator==(const Direction&, const Direction&) = default;
    std::string to_string() const { return "[" + a.get_str() + ":" + b.get_str() + "]"; }
};

/// Linear frame in which a branch is tangent to the first axis:
/// Shear with c means (u, v) = (x, y - c x); Swap means (u, v) = (y, x).
/// `flip` additionally replaces u by -u.
struct Frame {
    enum class Kind { Shear, Swap };
    Kind kind = Kind::Shear;
    Rat c;
    bool flip = false;

    /// f expressed in frame coordinates (u, v).
    BiPoly apply(const BiPoly& f) const {
        BiPoly u = flip ? -BiPoly::x() : BiPoly::x();
        if (kind == Kind::Swap) return f.substitute(BiPoly::y(), u);
        if (c == 0 && !flip) return f;
        return f.substitute(u, BiPoly::y() + c * u);
    }
    /// A frame parametrization (u(t), v(t)) in original coordinates.
    Param to_original(const Param& g) const {
        TruncSeries u = flip ? -g.x() : g.x();
        if (kind == Kind::Swap) return Param(g.y(), u);
        return Param(u, g.y() + c * u);
    }
    Direction direction() const { return kind == Kind::Swap ? Direction{Rat(0), Rat(1)} : Direction{Rat(1), c}; }
};

struct BranchData {
    unsigned m;
    std::optional<unsigned> beta; // empty for smooth branches
    Direction tangent;
    Frame frame;
    Param normal;                 // (t^m, v(t)) in frame coordinates
    Param param;                  // the same branch in original coordinates

    bool smooth() const { return m == 1; }
};

namespace detail {

/// G(s^p, s^q (c + w)) / s^N with N the least weight p i + q j.
inline BiPoly puiseux_substitute(const BiPoly& G, unsigned p, unsigned q, const Rat& c) {
    unsigned N = ~0u;
    for (const auto& [m, a] : G.terms()) N = std::min(N, p * m.i + q * m.j);
    BiPoly r;
    std::vector<BiPoly> pw{BiPoly::constant(Rat(1))};
    BiPoly lin = BiPoly::constant(c) + BiPoly::y();
    for (const auto& [m, a] : G.terms()) {
        while (pw.size() <= m.j) pw.push_back(pw.back() * lin);
        r += (a * pw[m.j]).shifted(p * m.i + q * m.j - N, 0);
    }
    return r;
}

/// Sum over terms a s^i W(s)^j modulo s^n.
inline UPoly eval_series(const BiPoly& G, const UPoly& W, std::size_t n) {
    std::vector<UPoly> pw{UPoly::constant(Rat(1))};
    std::vector<Rat> acc(n);
    for (const auto& [m, a] : G.terms()) {
        if (m.i >= n) continue;
        while (pw.size() <= m.j) pw.push_back((pw.back() * W).truncated(n));
        const auto& c = pw[m.j].coeffs();
        for (std::size_t k = 0; k < c.size() && k + m.i < n; ++k) acc[k + m.i] += a * c[k];
    }
    return UPoly(std::move(acc));
}

/// The unique series W with W(0) = 0 and G(s, W(s)) = 0, modulo s^n, by
/// Newton iteration. Requires G(0,0) = 0 and G_w(0,0) != 0.
inline UPoly implicit_root(const BiPoly& G, std::size_t n) {
    BiPoly Gw = G.derivative(Var::Y);
    if (Gw.constant_term() == 0) fail(Errc::Internal, "implicit_root: singular point");
    UPoly W;
    for (std::size_t k = 1; k < n;) {
        k = std::min(n, 2 * k);
        UPoly val = eval_series(G, W, k);
        UPoly der = eval_series(Gw, W, k);
        W = (W - (val * series_inverse(der, k)).truncated(k)).truncated(k);
    }
    return W;
}

struct PuiseuxState {
    unsigned P = 1;          // u = s^P
    std::map<unsigned, Rat> V; // v = V(s) + s^E w
    unsigned E = 0;
    bool flip = false;         // u = -s^P instead
};

/// G(-s, w).
inline BiPoly flip_first(const BiPoly& G) {
    BiPoly r;
    for (const auto& [m, a] : G.terms()) r.add_term(m, m.i % 2 ? Rat(-a) : a);
    return r;
}

class PuiseuxExpander {
public:
    PuiseuxExpander(const Frame& frame, unsigned precision) : frame_(frame), precision_(precision) {}

    void expand(BiPoly G, const PuiseuxState& st, bool top, unsigned depth) {
        if (depth > 4096) fail(Errc::Internal, "Newton-Puiseux recursion does not terminate");
        if (G.restrict_to_axis(Var::X).is_zero()) {
            emit_exact(st);
            BiPoly h;
            for (const auto& [m, c] : G.terms()) h.add_term(Monomial{m.i, m.j - 1}, c);
            G = std::move(h);
            if (G.restrict_to_axis(Var::X).is_zero())
                fail(Errc::NonIsolated, "repeated component through the origin");
        }
        if (G.constant_term() != 0) return;
        for (const auto& e : newton_edges(G)) {
            Rat ratio = e.ratio();
            if (top && ratio <= 1) continue;
            unsigned q = static_cast<unsigned>(ratio.get_num().get_ui());
            unsigned p = static_cast<unsigned>(ratio.get_den().get_ui());
            // Edge polynomial in z = c^p.
            std::vector<Rat> psi((e.from.j - e.to.j) / p + 1);
            for (const auto& [m, a] : G.terms())
                if (p * m.i + q * m.j == p * e.from.i + q * e.from.j) psi[(m.j - e.to.j) / p] = a;
            UPoly psi_poly(std::move(psi));
            auto rr = rational_roots(psi_poly);
            if (rr.remainder.degree() > 0)
                fail(Errc::ExtensionRequired, "edge polynomial factor " + to_string(BiPoly::from_upoly(rr.remainder, Var::X), 'z') +
                                                  " has no rational roots");
            for (const auto& [z, k] : rr.roots) {
                if (z == 0) continue;
                const BiPoly* base = &G;
                PuiseuxState from = st;
                BiPoly flipped;
                auto c = rational_root_of(z, p);
                if (!c && st.P == 1 && !st.flip) {
                    // Before any ramification u = -s is still available; it
                    // turns the edge roots into (-1)^q z.
                    c = rational_root_of(q % 2 ? Rat(-z) : z, p);
                    if (c) {
                        flipped = flip_first(G);
                        base = &flipped;
                        from.flip = true;
                        for (auto& [ex, a] : from.V)
                            if (ex % 2) a = -a;
                    }
                }
                if (!c)
                    fail(Errc::ExtensionRequired, "coefficient needs a " + std::to_string(p) + "-th root of " + z.get_str() +
                                                      " (polynomial z^" + std::to_string(p) + " - " + z.get_str() + ")");
                PuiseuxState next;
                next.P = from.P * p;
                next.flip = from.flip;
                for (const auto& [ex, a] : from.V) next.V[ex * p] = a;
                next.E = from.E * p + q;
                next.V[next.E] += *c;
                BiPoly G2 = puiseux_substitute(*base, p, q, *c);
                if (k == 1) solve_simple(G2, next);
                else expand(std::move(G2), next, false, depth + 1);
            }
        }
    }

    std::vector<BranchData> take() { return std::move(out_); }

private:
    void emit_exact(const PuiseuxState& st) {
        std::map<unsigned, Rat> v;
        for (const auto& [e, a] : st.V)
            if (a != 0) v[e] = a;
        emit(TruncSeries::exact_poly(v), st);
    }

    void solve_simple(const BiPoly& G, const PuiseuxState& st) {
        std::size_t n = precision_;
        UPoly W = implicit_root(G, n);
        bool exact = false;
        if (W.degree() < static_cast<long>(n / 2)) {
            BiPoly Ws = BiPoly::from_upoly(W, Var::X);
            exact = G.substitute(BiPoly::x(), Ws).is_zero();
        }
        std::map<unsigned, Rat> v;
        for (const auto& [e, a] : st.V)
            if (a != 0) v[e] = a;
        for (std::size_t k = 0; k < W.coeffs().size(); ++k)
            if (W.coeffs()[k] != 0) v[st.E + static_cast<unsigned>(k)] += W.coeffs()[k];
        if (exact) emit(TruncSeries::exact_poly(v), st);
        else emit(TruncSeries::truncated(v, st.E + static_cast<unsigned>(n)), st);
    }

    void emit(const TruncSeries& v, const PuiseuxState& st) {
        Param normal(TruncSeries::monomial(Rat(1), st.P), v);
        std::optional<unsigned> beta;
        if (st.P >= 2) beta = first_puiseux_exponent(normal);
        Frame fr = frame_;
        fr.flip = st.flip;
        out_.push_back(BranchData{st.P, beta, fr.direction(), fr, normal, fr.to_original(normal)});
    }

    Frame frame_;
    unsigned precision_;
    std::vector<BranchData> out_;
};

/// Rational linear factors of the tangent cone as frames, with the
/// multiplicity of each line.
inline std::vector<std::pair<Frame, unsigned>> tangent_frames(const BiPoly& f) {
    BiPoly cone = tangent_cone(f);
    unsigned r = multiplicity(f);
    // cone(1, s) = prod (s - c_k) * rest; the x-multiplicity drop is the vertical part.
    std::vector<Rat> coeffs(r + 1);
    for (const auto& [m, a] : cone.terms()) coeffs[m.j] = a;
    UPoly slope_poly(std::move(coeffs));
    auto rr = rational_roots(slope_poly);
    if (rr.remainder.degree() > 0)
        fail(Errc::ExtensionRequired, "tangent cone factor " + to_string(BiPoly::from_upoly(rr.remainder, Var::X), 's') +
                                          " (in the slope s = y/x) has no rational roots");
    std::vector<std::pair<Frame, unsigned>> out;
    for (const auto& [c, k] : rr.roots) out.push_back({Frame{Frame::Kind::Shear, c}, k});
    unsigned vertical = r - static_cast<unsigned>(slope_poly.degree());
    if (vertical > 0) out.push_back({Frame{Frame::Kind::Swap, Rat(0)}, vertical});
    return out;
}

} // namespace detail

/// One entry per branch through the origin, grouped by tangent direction
/// (sorted by slope, vertical last). Throws ExtensionRequired when an
/// expansion step leaves the rationals.
inline std::vector<BranchData> rational_branches(const BiPoly& f, unsigned precision = kDefaultPrecision) {
    require_through_origin(f, "rational_branches");
    if (!milnor_number(f).finite()) fail(Errc::NonIsolated, "f has a non-isolated singularity at the origin");
    std::vector<BranchData> all;
    for (const auto& [frame, k] : detail::tangent_frames(f)) {
        detail::PuiseuxExpander ex(frame, precision);
        ex.expand(frame.apply(f), detail::PuiseuxState{}, true, 0);
        auto bs = ex.take();
        unsigned total = 0;
        for (const auto& b : bs) total += b.m;
        if (total != k)
            fail(Errc::Internal, "branch multiplicities along " + frame.direction().to_string() + " sum to " +
                                     std::to_string(total) + ", tangent cone gives " + std::to_string(k));
        all.insert(all.end(), bs.begin(), bs.end());
    }
    return all;
}

/// The defining polynomial of (t^m, y(t)): the characteristic polynomial
/// of multiplication by y(t) on Q[x][t]/(t^m - x), monic in y.
inline BiPoly implicitize(const Param& g) {
    const auto& xc = g.x().coeffs();
    if (!g.x().exact() || xc.size() != 1 || xc.begin()->second != 1)
        fail(Errc::NotNormalForm, "implicitize: x(t) must be exactly t^m");
    if (!g.y().exact()) fail(Errc::NotNormalForm, "implicitize: y(t) must be a polynomial");
    const unsigned m = xc.begin()->first;
    using Matrix = std::vector<std::vector<UPoly>>;
    Matrix A(m, std::vector<UPoly>(m));
    for (const auto& [k, a] : g.y().coeffs())
        for (unsigned j = 0; j < m; ++j) {
            unsigned e = j + k;
            A[e % m][j] = A[e % m][j] + UPoly::monomial(a, e / m);
        }
    auto mul = [m](const Matrix& X, const Matrix& Y) {
        Matrix Z(m, std::vector<UPoly>(m));
        for (unsigned i = 0; i < m; ++i)
            for (unsigned l = 0; l < m; ++l) {
                if (X[i][l].is_zero()) continue;
                for (unsigned j = 0; j < m; ++j) Z[i][j] = Z[i][j] + X[i][l] * Y[l][j];
            }
        return Z;
    };
    // Faddeev-LeVerrier: c_m = 1, M_k = A M_{k-1} + c_{m-k+1} I, c_{m-k} = -tr(A M_k) / k.
    std::vector<UPoly> c(m + 1);
    c[m] = UPoly::constant(Rat(1));
    Matrix M(m, std::vector<UPoly>(m));
    for (unsigned k = 1; k <= m; ++k) {
        M = mul(A, M);
        for (unsigned i = 0; i < m; ++i) M[i][i] = M[i][i] + c[m - k + 1];
        Matrix AM = mul(A, M);
        UPoly tr;
        for (unsigned i = 0; i < m; ++i) tr = tr + AM[i][i];
        c[m - k] = Rat(-1, k) * tr;
    }
    BiPoly f;
    for (unsigned k = 0; k <= m; ++k) f += BiPoly::from_upoly(c[k], Var::X).shifted(0, k);
    if (!compose(f, g.x(), g.y()).is_known_zero()) fail(Errc::Internal, "implicitize: result does not vanish on the curve");
    return f;
}

/// delta = mu / 2 for an irreducible germ.
inline unsigned delta_invariant(const BiPoly& f) {
    auto bs = rational_branches(f);
    if (bs.size() != 1) fail(Errc::NotIrreducible, std::to_string(bs.size()) + " branches through the origin");
    Count mu = milnor_number(f);
    if (!mu.finite()) fail(Errc::NonIsolated, "infinite Milnor number");
    if (mu.value() % 2 != 0) fail(Errc::OddMilnor, "mu = " + mu.to_string() + " is odd");
    return mu.value() / 2;
}

} // namespace curvelab
