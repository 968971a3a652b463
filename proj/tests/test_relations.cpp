#include "curvelab/parse.hpp"
#include "curvelab/relations.hpp"

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

} // namespace

TEST(Bridge, IrreducibleGerms) {
    for (const char* s : {"t^2, t^3", "t^2, t^5", "t^3, t^4", "t^2, t^4 + t^5", "t^3, t^5 + t^7"}) {
        Param g = parse_param(s);
        Report r = verify_bridge(implicitize(g), g);
        EXPECT_TRUE(r.passed()) << s;
        EXPECT_EQ(r.checks.size(), 2u);
    }
}

TEST(Bridge, RotatedCusp) {
    // The rotation (x, y) -> (3x - 4y, 4x + 3y)/5 applied to (t^2, t^3) and y^2 - x^3.
    Param g = parse_param("3/5 t^2 - 4/5 t^3, 4/5 t^2 + 3/5 t^3");
    BiPoly u = Rat(3, 5) * X + Rat(4, 5) * Y, v = Rat(-4, 5) * X + Rat(3, 5) * Y;
    BiPoly f = (Y.pow(2) - X.pow(3)).substitute(u, v);
    Report r = verify_bridge(f, g);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks[0].lhs, "I_f = 8");
    EXPECT_EQ(r.checks[1].lhs, "V_f = 15");
}

TEST(Bridge, RejectsNonParametrization) {
    EXPECT_EQ(error_of([] { verify_bridge(Y.pow(2) - X.pow(3), parse_param("t^2, t^5")); }), Errc::NotAParametrization);
}

TEST(Bridge, InfiniteCountIsVacuous) {
    Report r = verify_bridge(Y, parse_param("t, 0"));
    EXPECT_TRUE(r.passed());
    EXPECT_FALSE(r.checks[0].note.empty());
}

TEST(Multibranch, TangentParabolas) {
    BiPoly f = (Y - X.pow(2)) * (Y + X.pow(2));
    Report r = verify_multibranch(f, {{parse_param("t, t^2"), Y - X.pow(2)}, {parse_param("t, -t^2"), Y + X.pow(2)}});
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks.size(), 5u);
}

TEST(Multibranch, TwoCusps) {
    BiPoly f = X.pow(4) - Y.pow(6);
    Report r = verify_multibranch(f, {{parse_param("t^3, t^2"), X.pow(2) - Y.pow(3)},
                                      {parse_param("t^3, -t^2"), X.pow(2) + Y.pow(3)}});
    EXPECT_TRUE(r.passed());
}

TEST(Multibranch, SingleBranchReducesToBridge) {
    Report r = verify_multibranch(Y.pow(2) - X.pow(3), {{parse_param("t^2, t^3"), Y.pow(2) - X.pow(3)}});
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks.size(), 2u);
}

TEST(Multibranch, ProductMustMatch) {
    EXPECT_EQ(error_of([] {
                  verify_multibranch(X * Y, {{parse_param("t, 0"), Y}, {parse_param("t, t^2"), Y - X.pow(2)}});
              }),
              Errc::InvalidArgument);
}

TEST(Bounds, WithinCorrectedRanges) {
    for (const BiPoly& f : {Y.pow(2) - X.pow(3), Y.pow(2) - X.pow(5), Y.pow(3) - X.pow(4), Y.pow(2) - X.pow(7)}) {
        auto bs = rational_branches(f);
        Report r = bounds_check(f, bs[0]);
        EXPECT_TRUE(r.passed()) << to_string(f);
    }
    auto bs = rational_branches(Y.pow(2) - X.pow(5));
    Report r = bounds_check(Y.pow(2) - X.pow(5), bs[0]);
    EXPECT_EQ(r.checks[0].rhs, "[15, 16]");
}

TEST(LambdaIdentity, ImplicitForm) {
    for (const char* s : {"t^2, t^3", "t^2, t^5", "t^2, t^4 + t^5", "t^3, t^4 + t^5", "t^4, t^6 + t^9"}) {
        Param g = parse_param(s);
        EXPECT_TRUE(verify_lambda_identity(implicitize(g), g).passed()) << s;
    }
}

TEST(Constancy, SingletonWhenBetaBelowTwiceM) {
    auto r = constancy_probe(Y.pow(2) - X.pow(3), 30, 3);
    EXPECT_TRUE(r.report.passed());
    EXPECT_EQ(r.values, std::set<unsigned>{8});
}

TEST(Constancy, SpreadWhenBetaAboveTwiceM) {
    auto r = constancy_probe(Y.pow(2) - X.pow(5), 60, 5);
    EXPECT_TRUE(r.report.passed());
    EXPECT_GE(r.values.size(), 2u);
    for (unsigned v : r.values) EXPECT_TRUE(v == 15 || v == 16) << v;
}

TEST(Constancy, ZeroTrials) {
    auto r = constancy_probe(Y.pow(2) - X.pow(3), 0);
    EXPECT_TRUE(r.report.checks.empty());
    EXPECT_TRUE(r.values.empty());
}

TEST(MinimalValues, Formulas) {
    auto one = minimal_values({{2, 3, 2}}, {{0}});
    EXPECT_EQ(one.inflections, 8u);
    EXPECT_EQ(one.vertices, 15u);
    auto two = minimal_values({{2, 3, 2}, {2, 3, 2}}, {{0, 4}, {4, 0}});
    EXPECT_EQ(two.inflections, 8u + 8u + 24u);
    EXPECT_EQ(two.vertices, 15u + 15u + 48u);
    EXPECT_EQ(error_of([] { minimal_values({{2, 5, 4}}, {{0}}); }), Errc::DegenerateCase);
    auto smooth = minimal_values({{1, std::nullopt, 0}, {1, std::nullopt, 0}}, {{0, 1}, {1, 0}});
    EXPECT_EQ(smooth.inflections, 6u);
    EXPECT_EQ(smooth.vertices, 12u);
}

TEST(ReferenceTable, SuiteIsGreen) {
    Report r = table1_suite();
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks.size(), 2u * 15u);
}
