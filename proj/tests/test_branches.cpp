#include "curvelab/branches.hpp"
#include "curvelab/parse.hpp"

#include <gtest/gtest.h>

using namespace curvelab;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

template <class F>
Errc error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::Internal;
}

void expect_on_curve(const BiPoly& f, const std::vector<BranchData>& bs) {
    for (const auto& b : bs) {
        auto s = compose(f, b.param.x(), b.param.y());
        EXPECT_TRUE(s.coeffs().empty()) << to_string(f) << " along " << b.param.to_string();
    }
}

} // namespace

TEST(NewtonPolygon, EdgesAndSlopes) {
    auto edges = newton_polygon(X.pow(3) + X * Y.pow(2) + Y.pow(5));
    ASSERT_EQ(edges.size(), 2u);
    EXPECT_TRUE(newton_polygon(X * Y).empty());
    auto single = newton_polygon(X.pow(2) + Y.pow(3));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].length, 1u);
}

TEST(Branches, Cusp) {
    BiPoly f = X.pow(2) - Y.pow(3);
    auto bs = rational_branches(f);
    ASSERT_EQ(bs.size(), 1u);
    EXPECT_EQ(bs[0].m, 2u);
    EXPECT_EQ(*bs[0].beta, 3u);
    expect_on_curve(f, bs);
}

TEST(Branches, EAndDForms) {
    struct Case {
        BiPoly f;
        std::vector<std::pair<unsigned, std::optional<unsigned>>> want;
    };
    std::vector<Case> cases{
        {X.pow(3) + Y.pow(4), {{3, 4}}},
        {X.pow(3) + Y.pow(5), {{3, 5}}},
        {X.pow(2) * Y - Y.pow(3), {{1, std::nullopt}, {1, std::nullopt}, {1, std::nullopt}}},
        {X.pow(2) - Y.pow(4), {{1, std::nullopt}, {1, std::nullopt}}},
    };
    for (const auto& c : cases) {
        auto bs = rational_branches(c.f);
        ASSERT_EQ(bs.size(), c.want.size()) << to_string(c.f);
        std::multiset<std::pair<unsigned, unsigned>> got, want;
        for (const auto& b : bs) got.insert({b.m, b.beta.value_or(0)});
        for (const auto& [m, beta] : c.want) want.insert({m, beta.value_or(0)});
        EXPECT_EQ(got, want) << to_string(c.f);
        expect_on_curve(c.f, bs);
    }
}

TEST(Branches, E7IsLinePlusCusp) {
    BiPoly f = X.pow(3) + X * Y.pow(3);
    auto bs = rational_branches(f);
    ASSERT_EQ(bs.size(), 2u);
    unsigned total = bs[0].m + bs[1].m;
    EXPECT_EQ(total, 3u);
    expect_on_curve(f, bs);
}

TEST(Branches, SignFlipBeforeRamification) {
    // x^2 + y^3 needs x = t^3, y = -t^2.
    for (const BiPoly& f : {X.pow(2) + Y.pow(3), X.pow(4) - Y.pow(6), X.pow(2) + Y.pow(5)}) {
        auto bs = rational_branches(f);
        expect_on_curve(f, bs);
        unsigned total = 0;
        for (const auto& b : bs) total += b.m;
        EXPECT_EQ(total, multiplicity(f));
    }
}

TEST(Branches, IrrationalDataIsReported) {
    EXPECT_EQ(error_of([] { rational_branches(X.pow(2) + Y.pow(2)); }), Errc::ExtensionRequired);
    EXPECT_EQ(error_of([] { rational_branches(X.pow(2) - Rat(2) * Y.pow(3)); }), Errc::ExtensionRequired);
    EXPECT_EQ(error_of([] { rational_branches(X.pow(2)); }), Errc::NonIsolated);
}

TEST(Implicitize, KnownEquations) {
    EXPECT_EQ(implicitize(parse_param("t^2, t^3")), Y.pow(2) - X.pow(3));
    BiPoly f = implicitize(parse_param("t^4, t^6 + t^7"));
    EXPECT_EQ(f, parse_poly("y^4 - 2x^3y^2 + x^6 - 4x^5y - x^7"));
    EXPECT_EQ(error_of([] { implicitize(parse_param("t^2 + t^3, t^5")); }), Errc::NotNormalForm);
}

TEST(Implicitize, RoundTripThroughBranches) {
    for (const char* s : {"t^3, t^4 + t^5", "t^2, t^4 + t^5", "t^3, t^5 + t^7", "t^4, t^6 + t^9"}) {
        Param g = parse_param(s);
        BiPoly f = implicitize(g);
        auto bs = rational_branches(f);
        ASSERT_EQ(bs.size(), 1u) << s;
        EXPECT_EQ(bs[0].m, normal_form(g).m);
        EXPECT_EQ(*bs[0].beta, first_puiseux_exponent(g));
    }
}

TEST(Delta, HalfMilnorForIrreducible) {
    EXPECT_EQ(delta_invariant(X.pow(3) + Y.pow(4)), 3u);
    EXPECT_EQ(delta_invariant(X.pow(2) - Y.pow(5)), 2u);
    EXPECT_EQ(error_of([] { delta_invariant(X * Y); }), Errc::NotIrreducible);
}
