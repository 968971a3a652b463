#pragma once

#include "curvelab/bipoly.hpp"
#include "curvelab/branches.hpp"
#include "curvelab/error.hpp"
#include "curvelab/implicit.hpp"
#include "curvelab/intersection.hpp"
#include "curvelab/parametric.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace curvelab {

/// One checked identity. `lhs` and `rhs` are rendered values; a check whose
/// sides involve an infinite count is vacuous and passes with a note.
struct Check {
    std::string id;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string note;
};

struct Report {
    std::string name;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
    void add(Check c) { checks.push_back(std::move(c)); }
    void append(const Report& r) {
        checks.insert(checks.end(), r.checks.begin(), r.checks.end());
        notes.insert(notes.end(), r.notes.begin(), r.notes.end());
    }
};

namespace detail {

inline Check equality(std::string id, const std::string& lhs_label, const Count& lhs, const std::string& rhs_label,
                      const std::vector<Count>& parts, const std::vector<long>& weights, long constant = 0) {
    Check c;
    c.id = std::move(id);
    c.lhs = lhs_label + " = " + lhs.to_string();
    bool finite = lhs.finite();
    long total = constant;
    std::string expr;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (!parts[k].finite()) finite = false;
        else total += weights[k] * static_cast<long>(parts[k].value());
    }
    c.rhs = rhs_label;
    if (!finite) {
        c.rhs += " = infinite";
        c.pass = true;
        c.note = "vacuous: an infinite count is involved";
        return c;
    }
    c.rhs += " = " + std::to_string(total);
    c.pass = static_cast<long>(lhs.value()) == total;
    return c;
}

inline Check inequality(std::string id, long low, const std::string& label, long value, long high) {
    Check c;
    c.id = std::move(id);
    c.lhs = label + " = " + std::to_string(value);
    c.rhs = "[" + std::to_string(low) + ", " + std::to_string(high) + "]";
    c.pass = low <= value && value <= high;
    return c;
}

/// True when f(gamma(t)) vanishes exactly or to the known precision.
inline bool parametrizes(const BiPoly& f, const Param& g) {
    TruncSeries s = compose(f, g.x(), g.y());
    return s.coeffs().empty();
}

} // namespace detail

/// I_f = I_gamma + 3 mu and V_f = V_gamma + 6 mu for an irreducible f
/// parametrized by g, every quantity from its own engine.
inline Report verify_bridge(const BiPoly& f, const Param& g) {
    require_through_origin(f, "verify_bridge");
    if (!detail::parametrizes(f, g))
        fail(Errc::NotAParametrization, to_string(f) + " does not vanish along " + g.to_string());
    Report r;
    r.name = "bridge";
    Count If = inflection_count(f).value, Vf = vertex_count(f).value, mu = milnor_number(f);
    Count Ig = inflection_order(g), Vg = vertex_order(g);
    r.add(detail::equality("bridge.inflections", "I_f", If, "I_gamma + 3 mu", {Ig, mu}, {1, 3}));
    r.add(detail::equality("bridge.vertices", "V_f", Vf, "V_gamma + 6 mu", {Vg, mu}, {1, 6}));
    return r;
}

/// Multi-branch identities for f = f_1 ... f_n with parametrized branches:
/// I_f = sum I_gamma_i + 3(mu + n - 1), V_f = sum V_gamma_i + 6(mu + n - 1),
/// mu = sum mu_i + 2 sum m(f_i, f_j) - n + 1, and the factor formulas.
inline Report verify_multibranch(const BiPoly& f, const std::vector<std::pair<Param, BiPoly>>& branches) {
    if (branches.empty()) fail(Errc::InvalidArgument, "verify_multibranch: no branches");
    if (branches.size() == 1) {
        if (!divide_exact(f, branches[0].second).has_value() ||
            divide_exact(f, branches[0].second)->total_degree() != 0)
            fail(Errc::InvalidArgument, "the branch polynomial does not equal f up to a constant");
        Report r = verify_bridge(f, branches[0].first);
        r.name = "multibranch";
        return r;
    }
    BiPoly prod = BiPoly::constant(Rat(1));
    for (const auto& [g, fi] : branches) {
        if (!detail::parametrizes(fi, g))
            fail(Errc::NotAParametrization, to_string(fi) + " does not vanish along " + g.to_string());
        prod *= fi;
    }
    auto q = divide_exact(f, prod);
    if (!q || q->total_degree() != 0)
        fail(Errc::InvalidArgument, "branch polynomials do not multiply to f up to a constant");
    const long n = static_cast<long>(branches.size());
    Report r;
    r.name = "multibranch";
    Count If = inflection_count(f).value, Vf = vertex_count(f).value, mu = milnor_number(f);
    std::vector<Count> Ig, Vg, mus, pair;
    std::vector<BiPoly> factors;
    for (const auto& [g, fi] : branches) {
        Ig.push_back(inflection_order(g));
        Vg.push_back(vertex_order(g));
        mus.push_back(milnor_number(fi));
        factors.push_back(fi);
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            pair.push_back(intersection_multiplicity(factors[i], factors[j]).value);

    auto with = [](std::vector<Count> a, const Count& extra) {
        a.push_back(extra);
        return a;
    };
    std::vector<long> ones(static_cast<std::size_t>(n), 1);
    auto weights = [&](long w) {
        auto v = ones;
        v.push_back(w);
        return v;
    };
    r.add(detail::equality("multibranch.inflections", "I_f", If, "sum I_gamma_i + 3(mu + n - 1)", with(Ig, mu),
                           weights(3), 3 * (n - 1)));
    r.add(detail::equality("multibranch.vertices", "V_f", Vf, "sum V_gamma_i + 6(mu + n - 1)", with(Vg, mu),
                           weights(6), 6 * (n - 1)));
    {
        std::vector<Count> parts = mus;
        std::vector<long> w(mus.size(), 1);
        for (const auto& c : pair) {
            parts.push_back(c);
            w.push_back(2);
        }
        r.add(detail::equality("multibranch.milnor", "mu", mu, "sum mu_i + 2 sum m(f_i, f_j) - n + 1", parts, w,
                               1 - n));
    }
    Count If_factors = count_from_factors(factors, CountKind::Inflection);
    Count Vf_factors = count_from_factors(factors, CountKind::Vertex);
    r.add(detail::equality("multibranch.inflections_from_factors", "I_f", If, "sum I_f_i + 6 sum m(f_i, f_j)",
                           {If_factors}, {1}));
    r.add(detail::equality("multibranch.vertices_from_factors", "V_f", Vf, "sum V_f_i + 12 sum m(f_i, f_j)",
                           {Vf_factors}, {1}));
    return r;
}

/// I_f and V_f bounds for an irreducible singular germ. The I bounds are
/// min{2m, beta} + m + 3mu - 3 <= I_f <= beta + m + 3mu - 3. V_f is bounded
/// through V_f = V_gamma + 6mu and V_gamma = m + n + lambda - 6, with
/// min{2m, beta} <= n <= beta and 2m <= lambda <= max{2m, beta}.
inline Report bounds_check(const BiPoly& f, const BranchData& branch) {
    if (!branch.beta) fail(Errc::InvalidBranch, "bounds_check needs a singular branch");
    Report r;
    r.name = "bounds";
    Count If = inflection_count(f).value, Vf = vertex_count(f).value, mu = milnor_number(f);
    if (!If.finite() || !Vf.finite() || !mu.finite())
        fail(Errc::NonIsolated, "bounds_check: infinite count for an irreducible germ");
    const long m = branch.m, beta = *branch.beta, M = mu.value();
    const long nmin = std::min(2 * m, beta);
    r.add(detail::inequality("bounds.inflections", nmin + m + 3 * M - 3, "I_f", If.value(), beta + m + 3 * M - 3));
    r.add(detail::inequality("bounds.vertices", m + nmin + 2 * m - 6 + 6 * M, "V_f", Vf.value(),
                             m + beta + std::max(2 * m, beta) - 6 + 6 * M));
    r.notes.push_back("stated vertex bounds [" + std::to_string(2 * nmin + 6 * M + m - 2) + ", " +
                      std::to_string(2 * beta + 6 * M + m - 2) + "] are shown for reference only");
    return r;
}

/// V_f = I_f + 3 mu + lambda - 3 for an irreducible germ with a normal-form branch.
inline Report verify_lambda_identity(const BiPoly& f, const Param& normal) {
    Report r;
    r.name = "lambda";
    Count If = inflection_count(f).value, Vf = vertex_count(f).value, mu = milnor_number(f);
    unsigned lambda = osculating_circle(normal).lambda;
    r.add(detail::equality("lambda.vertices", "V_f", Vf, "I_f + 3 mu + lambda - 3", {If, mu, Count(lambda)},
                           {1, 3, 1}, -3));
    return r;
}

namespace detail {

/// Random polynomial map with invertible linear part: degree 1..max_degree
/// (uniform), integer coefficients of absolute value <= height.
struct RandomChange {
    BiPoly X;
    BiPoly Y;
    BiPoly unit;
};

inline RandomChange random_change(std::mt19937_64& rng, unsigned max_degree, int height) {
    std::uniform_int_distribution<int> coef(-height, height);
    std::uniform_int_distribution<unsigned> deg(1, max_degree);
    RandomChange ch;
    for (;;) {
        Rat a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
        if (a * d - b * c == 0) continue;
        ch.X = a * BiPoly::x() + b * BiPoly::y();
        ch.Y = c * BiPoly::x() + d * BiPoly::y();
        break;
    }
    unsigned D = deg(rng);
    for (unsigned e = 2; e <= D; ++e)
        for (unsigned i = 0; i <= e; ++i) {
            ch.X.add_term(Monomial{i, e - i}, Rat(coef(rng)));
            ch.Y.add_term(Monomial{i, e - i}, Rat(coef(rng)));
        }
    Rat u0;
    do u0 = coef(rng);
    while (u0 == 0);
    ch.unit = BiPoly::constant(u0);
    if (D >= 2)
        for (unsigned e = 1; e <= 2; ++e)
            for (unsigned i = 0; i <= e; ++i) ch.unit.add_term(Monomial{i, e - i}, Rat(coef(rng)));
    return ch;
}

} // namespace detail

struct ConstancyResult {
    Report report;
    std::set<unsigned> values;
    bool saw_infinite = false;
};

/// Samples I_f over random contact changes u * (f o Phi). A singleton is
/// required when beta < 2m; otherwise the observed spread is reported.
inline ConstancyResult constancy_probe(const BiPoly& f, unsigned trials, std::uint64_t seed = 1) {
    ConstancyResult out;
    out.report.name = "constancy";
    if (trials == 0) return out;
    auto bs = rational_branches(f);
    if (bs.size() != 1) fail(Errc::NotIrreducible, "constancy_probe needs an irreducible germ");
    const auto& b = bs.front();
    std::mt19937_64 rng(seed);
    for (unsigned k = 0; k < trials; ++k) {
        auto ch = detail::random_change(rng, 4, 5);
        BiPoly g = ch.unit * f.substitute(ch.X, ch.Y);
        Count c = inflection_count(g).value;
        if (c.finite()) out.values.insert(c.value());
        else out.saw_infinite = true;
    }
    std::string observed = "{";
    for (unsigned v : out.values) observed += (observed.size() > 1 ? ", " : "") + std::to_string(v);
    observed += out.saw_infinite ? (out.values.empty() ? "infinite}" : ", infinite}") : "}";
    Check c;
    c.id = "constancy.inflections";
    c.lhs = "observed I_f = " + observed;
    bool constant_expected = b.beta && *b.beta < 2 * b.m;
    if (constant_expected) {
        c.rhs = "a single value (beta < 2m)";
        c.pass = out.values.size() + (out.saw_infinite ? 1 : 0) == 1;
    } else {
        c.rhs = "any set (beta >= 2m or smooth)";
        c.pass = true;
        c.note = out.values.size() >= 2 ? "non-constancy witnessed" : "non-constancy not witnessed";
    }
    out.report.add(std::move(c));
    return out;
}

/// (m, beta, mu) of one branch; beta is empty for a smooth branch.
struct BranchSummary {
    unsigned m;
    std::optional<unsigned> beta;
    unsigned mu;
};

struct MinimalValues {
    unsigned inflections;
    unsigned vertices;
};

/// Generic (minimal) I_f and V_f from branch data and pairwise intersection numbers.
inline MinimalValues minimal_values(const std::vector<BranchSummary>& branches,
                                    const std::vector<std::vector<unsigned>>& pairwise) {
    if (pairwise.size() != branches.size()) fail(Errc::InvalidArgument, "pairwise matrix size mismatch");
    long I0 = 0, V0 = 0;
    for (const auto& b : branches) {
        if (b.m == 0) fail(Errc::InvalidBranch, "multiplicity 0");
        if (b.m == 1) continue; // a generic smooth branch has neither
        if (!b.beta) fail(Errc::InvalidBranch, "singular branch without beta");
        long m = b.m, n = std::min<long>(2 * b.m, *b.beta);
        if (n == 2 * m)
            fail(Errc::DegenerateCase, "min{2m, beta} = 2m for m = " + std::to_string(m) +
                                           "; the n = 2m vertex count carries an extra order term");
        I0 += m + n - 3 + 3 * static_cast<long>(b.mu);
        V0 += 3 * m + n - 6 + 6 * static_cast<long>(b.mu);
    }
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (pairwise[i].size() != branches.size()) fail(Errc::InvalidArgument, "pairwise matrix is not square");
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            I0 += 6 * static_cast<long>(pairwise[i][j]);
            V0 += 12 * static_cast<long>(pairwise[i][j]);
        }
    }
    return {static_cast<unsigned>(I0), static_cast<unsigned>(V0)};
}

/// Admissible values from the table of simple singularities.
struct Admissible {
    std::set<unsigned> exact;             // explicit finite values
    std::optional<unsigned> at_least;     // every p >= bound, including infinite

    bool admits(const Count& c) const {
        if (!c.finite()) return at_least.has_value();
        return exact.count(c.value()) > 0 || (at_least && c.value() >= *at_least);
    }
    std::string to_string() const {
        std::string s;
        for (unsigned v : exact) s += (s.empty() ? "" : " or ") + std::to_string(v);
        if (at_least) s += (s.empty() ? "" : " or ") + std::string(">= ") + std::to_string(*at_least);
        return s;
    }
};

struct Table1Row {
    std::string name;
    BiPoly f;
    Admissible inflections;
    Admissible vertices;
};

inline std::vector<Table1Row> table1_rows() {
    const BiPoly x = BiPoly::x(), y = BiPoly::y();
    std::vector<Table1Row> rows;
    for (unsigned k = 1; k <= 8; ++k) {
        Table1Row r{"A" + std::to_string(k), x.pow(2) + y.pow(k + 1), {}, {}};
        if (k % 2 == 0) {
            unsigned K = k / 2;
            for (unsigned j = 2; j <= K; ++j) {
                r.inflections.exact.insert(6 * K + 2 * j - 1);
                r.vertices.exact.insert(12 * K + 2 * j);
            }
            r.inflections.exact.insert(8 * K);
            r.vertices.exact.insert(14 * K + 1);
        } else {
            unsigned K = (k - 1) / 2;
            r.inflections.at_least = 6 * K + 6;
            r.vertices.at_least = 12 * K + 12;
        }
        rows.push_back(std::move(r));
    }
    for (unsigned k = 4; k <= 7; ++k) {
        Table1Row r{"D" + std::to_string(k), x.pow(2) * y + y.pow(k - 1), {}, {}};
        if (k % 2 == 0) {
            unsigned K = k / 2;
            r.inflections.at_least = 6 * K + 6;
            r.vertices.at_least = 12 * K + 12;
        } else {
            unsigned K = (k - 1) / 2;
            r.inflections.at_least = 6 * K + 9;
            r.vertices.at_least = 12 * K + 16;
        }
        rows.push_back(std::move(r));
    }
    rows.push_back({"E6", x.pow(3) + y.pow(4), {{22}, std::nullopt}, {{43}, std::nullopt}});
    rows.push_back({"E7", x.pow(3) + x * y.pow(3), {{}, 26u}, {{}, 51u}});
    rows.push_back({"E8", x.pow(3) + y.pow(5), {{29}, std::nullopt}, {{56}, std::nullopt}});
    return rows;
}

/// I_f and V_f on the simple normal forms against the admissible ranges.
inline Report table1_suite() {
    Report r;
    r.name = "table1";
    for (const auto& row : table1_rows()) {
        auto I = inflection_count(row.f);
        auto V = vertex_count(row.f);
        for (int kind = 0; kind < 2; ++kind) {
            const auto& c = kind == 0 ? I : V;
            const auto& adm = kind == 0 ? row.inflections : row.vertices;
            Check ch;
            ch.id = "table1." + row.name + (kind == 0 ? ".inflections" : ".vertices");
            ch.lhs = std::string(kind == 0 ? "I_f" : "V_f") + " = " + c.value.to_string();
            ch.rhs = adm.to_string();
            ch.pass = adm.admits(c.value);
            if (c.certificate) ch.note = "certificate " + to_string(*c.certificate);
            r.add(std::move(ch));
        }
    }
    return r;
}

} // namespace curvelab
