#pragma once

#include "curvelab/bipoly.hpp"
#include "curvelab/upoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace curvelab {

namespace detail {

// Arithmetic modulo a 31-bit prime, used only to certify coprimality quickly.
inline constexpr std::uint64_t kGcdPrime = 2147483629ULL;

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::optional<std::uint64_t> rat_mod(const Rat& a, std::uint64_t p) {
    BigInt pz(static_cast<unsigned long>(p));
    BigInt n = a.get_num() % pz;
    if (n < 0) n += pz;
    BigInt d = a.get_den() % pz;
    if (d == 0) return std::nullopt;
    std::uint64_t nn = n.get_ui(), dd = d.get_ui();
    return nn * mod_pow(dd, p - 2, p) % p;
}

inline long modp_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        std::uint64_t inv = mod_pow(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            std::uint64_t f = a.back() * inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = (a[shift + k] + p - f * b[k] % p) % p;
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<long>(a.size()) - 1;
}

/// Evaluate f at x = a modulo p, as a polynomial in y. Empty optional when a
/// denominator vanishes mod p.
inline std::optional<std::vector<std::uint64_t>> eval_x_modp(const BiPoly& f, std::uint64_t a, std::uint64_t p) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(f.degree_in(Var::Y) + 1), 0);
    for (const auto& [m, c] : f.terms()) {
        auto cm = rat_mod(c, p);
        if (!cm) return std::nullopt;
        out[m.j] = (out[m.j] + *cm * mod_pow(a, m.i, p)) % p;
    }
    return out;
}

/// True only if deg_y gcd(f, g) = 0 is certified by a modular evaluation.
inline bool certified_y_coprime(const BiPoly& f, const BiPoly& g) {
    long df = f.degree_in(Var::Y), dg = g.degree_in(Var::Y);
    if (df <= 0 || dg <= 0) return true;
    auto cf = coefficients_in_y(f), cg = coefficients_in_y(g);
    const std::uint64_t p = kGcdPrime;
    for (std::uint64_t a = 2; a < 40; ++a) {
        auto lf = rat_mod(cf.back()(Rat(static_cast<unsigned long>(a))), p);
        auto lg = rat_mod(cg.back()(Rat(static_cast<unsigned long>(a))), p);
        if (!lf || !lg || *lf == 0 || *lg == 0) continue;
        auto fa = eval_x_modp(f, a, p);
        auto ga = eval_x_modp(g, a, p);
        if (!fa || !ga) continue;
        return modp_gcd_degree(*fa, *ga, p) == 0;
    }
    return false;
}

inline UPoly content_in_y(const std::vector<UPoly>& cs) {
    UPoly g;
    for (const auto& c : cs) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

inline std::vector<UPoly> divide_coeffs(const std::vector<UPoly>& cs, const UPoly& d) {
    std::vector<UPoly> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(UPoly::divmod(c, d).first);
    return out;
}

inline std::vector<UPoly> primitive_part(const std::vector<UPoly>& cs) {
    UPoly c = content_in_y(cs);
    if (c.is_zero()) return cs;
    return divide_coeffs(cs, c);
}

inline void trim(std::vector<UPoly>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

/// Pseudo-remainder of a by b as polynomials in y over Q[x].
inline std::vector<UPoly> pseudo_remainder(std::vector<UPoly> a, const std::vector<UPoly>& b) {
    trim(a);
    const UPoly& lb = b.back();
    std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        UPoly la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c = lb * c;
        for (std::size_t k = 0; k <= db; ++k) a[shift + k] = a[shift + k] - la * b[k];
        trim(a);
        a = primitive_part(a);
    }
    return a;
}

} // namespace detail

/// gcd over Q of two bivariate polynomials, normalized by BiPoly::normalized().
inline BiPoly gcd(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    auto cf = coefficients_in_y(f), cg = coefficients_in_y(g);
    UPoly cont = gcd(detail::content_in_y(cf), detail::content_in_y(cg));
    if (detail::certified_y_coprime(f, g)) return BiPoly::from_upoly(cont, Var::X).normalized();
    auto a = detail::primitive_part(cf), b = detail::primitive_part(cg);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty() && b.size() > 1) {
        auto r = detail::pseudo_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // b is empty (a is the gcd) or a nonzero constant in y (coprime).
    std::vector<UPoly> pp = b.empty() ? detail::primitive_part(a) : std::vector<UPoly>{UPoly::constant(Rat(1))};
    BiPoly result = from_coefficients_in_y(pp) * BiPoly::from_upoly(cont, Var::X);
    return result.normalized();
}

} // namespace curvelab
