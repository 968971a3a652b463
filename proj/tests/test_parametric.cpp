#include "curvelab/parametric.hpp"
#include "curvelab/parse.hpp"

#include <gtest/gtest.h>

using namespace curvelab;

namespace {

Param P(const char* s) { return parse_param(s); }

template <class F>
Errc error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::Internal;
}

} // namespace

TEST(Param, Validation) {
    EXPECT_EQ(error_of([] { Param(TruncSeries::exact_poly(std::map<unsigned, Rat>{{0, Rat(1)}, {1, Rat(1)}}), TruncSeries::monomial(Rat(1), 1)); }),
              Errc::InvalidArgument);
    EXPECT_EQ(error_of([] { P("t^2, t^4"); }), Errc::NotPrimitive);
    EXPECT_EQ(error_of([] { P("0, 0"); }), Errc::InvalidArgument);
    EXPECT_TRUE(P("t^2, t^3").exact());
    EXPECT_FALSE(P("t^2, t^3 + O(t^9)").exact());
}

// For (t^m, t^n): i = mn(n - m) t^(m+n-3), so I = m + n - 3.
TEST(ParametricCounts, MonomialCurves) {
    for (unsigned m = 1; m <= 5; ++m)
        for (unsigned n = m + 1; n <= 11; ++n) {
            if (std::gcd(m, n) != 1) continue;
            Param g(TruncSeries::monomial(Rat(1), m), TruncSeries::monomial(Rat(1), n));
            EXPECT_EQ(inflection_order(g).value(), m + n - 3);
        }
}

TEST(ParametricCounts, WorkedValues) {
    EXPECT_EQ(inflection_order(P("t^2, t^3")).value(), 2u);
    EXPECT_EQ(vertex_order(P("t^2, t^3")).value(), 3u);
    EXPECT_EQ(inflection_order(P("t^2, t^4 + t^5")).value(), 3u);
    EXPECT_EQ(vertex_order(P("t^2, t^4 + t^5")).value(), 5u);
    EXPECT_EQ(inflection_order(P("t, t^2")).value(), 0u);
    EXPECT_EQ(vertex_order(P("t, t^2")).value(), 1u);
    EXPECT_FALSE(inflection_order(P("t, 2t")).finite());
    EXPECT_FALSE(vertex_order(P("t, 2t")).finite());
}

TEST(NormalForm, FieldsAndErrors) {
    auto nf = normal_form(P("t^3, 2t^5 + t^7"));
    EXPECT_EQ(nf.m, 3u);
    EXPECT_EQ(*nf.n, 5u);
    EXPECT_EQ(nf.a, Rat(2));
    EXPECT_EQ(error_of([] { normal_form(P("t^2 + t^3, t^5")); }), Errc::NotNormalForm);
    EXPECT_EQ(error_of([] { normal_form(P("t^3, t^2")); }), Errc::NotNormalForm);
    EXPECT_EQ(first_puiseux_exponent(P("t^4, t^6 + t^7")), 6u);
    EXPECT_EQ(first_puiseux_exponent(P("t^3, t^6 + t^7")), 7u);
    EXPECT_EQ(error_of([] { first_puiseux_exponent(P("t, t^2")); }), Errc::Smooth);
    EXPECT_EQ(error_of([] { first_puiseux_exponent(P("t^2, t^4 + O(t^5)")); }), Errc::PrecisionExhausted);
}

TEST(OsculatingCircle, ThreeRegimes) {
    auto low = osculating_circle(P("t^2, t^3"));
    EXPECT_TRUE(low.degenerate);
    EXPECT_EQ(low.lambda, 4u);
    EXPECT_EQ(low.tangent_line_contact, 3u);

    auto high = osculating_circle(P("t^2, t^5"));
    EXPECT_FALSE(high.degenerate);
    EXPECT_EQ(high.circle.C, Rat(-1, 2));
    EXPECT_EQ(high.lambda, 4u);

    // n = 2m: circle x^2 + y^2 - y/a = 0 with a = 1.
    auto eq = osculating_circle(P("t^2, t^4 + t^5"));
    EXPECT_EQ(eq.circle.C, Rat(-1, 2));
    EXPECT_EQ(eq.lambda, 5u);
    auto eq2 = osculating_circle(P("t^2, 3t^4 + t^7"));
    EXPECT_EQ(eq2.circle.C, Rat(-1, 6));
    EXPECT_EQ(eq2.lambda, 7u);
}

TEST(OsculatingCircle, ContactOrderByDirectSubstitution) {
    // lambda = ord of A(x^2 + y^2) + 2Bx + 2Cy along the curve.
    for (const char* s : {"t^2, t^4 + t^5", "t^2, 3t^4 + t^7", "t^3, t^6 - t^8", "t^2, t^5", "t^3, t^7"}) {
        Param g = P(s);
        auto osc = osculating_circle(g);
        TruncSeries x = g.x(), y = g.y();
        TruncSeries circ = osc.circle.A * (x * x + y * y) + Rat(2) * osc.circle.B * x + Rat(2) * osc.circle.C * y;
        EXPECT_EQ(*circ.finite_order(), osc.lambda) << s;
    }
}

TEST(OsculatingCircle, Errors) {
    EXPECT_EQ(error_of([] { osculating_circle(P("t, t^2")); }), Errc::Smooth);
    EXPECT_EQ(error_of([] { osculating_circle(P("t^2 + t^3, t^5")); }), Errc::NotNormalForm);
}

TEST(LambdaRelation, HoldsOnNormalForms) {
    for (const char* s : {"t^2, t^3", "t^2, t^5", "t^2, t^7", "t^3, t^4", "t^3, t^5", "t^3, t^7", "t^4, t^5",
                          "t^2, t^4 + t^5", "t^3, t^4 + t^5", "t^3, t^5 + t^7", "t^4, t^6 + t^7", "t^4, t^6 + t^9",
                          "t^2, 3t^4 + t^7", "t^3, t^6 - t^8", "t^3, -2t^6 + t^7"})
        EXPECT_TRUE(verify_lambda_relation(P(s))) << s;
}
