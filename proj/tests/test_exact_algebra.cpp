#include "curvelab/bipoly.hpp"
#include "curvelab/bipoly_gcd.hpp"
#include "curvelab/series.hpp"
#include "curvelab/upoly.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace curvelab;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

TruncSeries poly(std::map<unsigned, Rat> c) { return TruncSeries::exact_poly(c); }

} // namespace

TEST(Rational, ArithmeticIsExactAndCanonical) {
    Rat a = make_rat(6, 4);
    EXPECT_EQ(a, Rat(3, 2));
    EXPECT_EQ(to_string(a), "3/2");
    EXPECT_EQ(a * make_rat(2, 3), Rat(1));
    EXPECT_TRUE(is_integer(a * 2));
}

TEST(UPoly, DivisionAndGcd) {
    UPoly t = UPoly::variable(), one = UPoly::constant(Rat(1));
    UPoly a = (t - one) * (t + one) * (t + one), b = (t + one) * (t * t + one);
    auto [q, r] = UPoly::divmod(a, t + one);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, (t - one) * (t + one));
    EXPECT_EQ(gcd(a, b).monic(), t + one);
}

TEST(UPoly, RationalRootsWithMultiplicity) {
    UPoly t = UPoly::variable(), one = UPoly::constant(Rat(1));
    UPoly p = (Rat(2) * t - one) * (Rat(2) * t - one) * (t + UPoly::constant(Rat(3))) * (t * t + one);
    auto rr = rational_roots(p);
    ASSERT_EQ(rr.roots.size(), 2u);
    std::map<Rat, unsigned> roots(rr.roots.begin(), rr.roots.end());
    EXPECT_EQ(roots[Rat(1, 2)], 2u);
    EXPECT_EQ(roots[Rat(-3)], 1u);
    EXPECT_EQ(rr.remainder.degree(), 2);
}

TEST(UPoly, SeriesInverse) {
    UPoly t = UPoly::variable(), one = UPoly::constant(Rat(1));
    UPoly inv = series_inverse(one - t, 6);
    EXPECT_EQ(((one - t) * inv).truncated(6), one);
}

TEST(BiPoly, ExpansionAndCanonicalPrinting) {
    BiPoly p = (X - Y.pow(2)) * (X + Y.pow(2));
    EXPECT_EQ(p, X.pow(2) - Y.pow(4));
    EXPECT_EQ(to_string(p), "x^2 - y^4");
    EXPECT_EQ(to_string(Rat(-3, 2) * X * Y + Y.pow(3)), "-3/2*x*y + y^3");
    EXPECT_EQ(to_string(BiPoly()), "0");
}

TEST(BiPoly, DerivativesAndSubstitution) {
    BiPoly f = X.pow(3) + X * Y.pow(2);
    EXPECT_EQ(f.derivative(Var::X), Rat(3) * X.pow(2) + Y.pow(2));
    EXPECT_EQ(f.derivative(Var::Y), Rat(2) * X * Y);
    EXPECT_EQ(f.substitute(Y, X), Y.pow(3) + Y * X.pow(2));
    EXPECT_EQ(f.homogeneous_part(3), f);
    EXPECT_EQ(f.truncated(2), BiPoly());
}

TEST(BiPoly, ExactDivisionAndGcd) {
    BiPoly a = (X - Y.pow(2)) * (X + Y), b = (X + Y) * (X.pow(2) + Y);
    auto q = divide_exact(a, X + Y);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, X - Y.pow(2));
    EXPECT_FALSE(divide_exact(a, X.pow(2) + Y));
    BiPoly g = gcd(a, b);
    EXPECT_EQ(g.normalized(), (X + Y).normalized());
}

TEST(BiPoly, RandomRingLaws) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        BiPoly a = oracle::random_poly(rng, 4, 4, 3, 0), b = oracle::random_poly(rng, 4, 4, 3, 0),
               c = oracle::random_poly(rng, 4, 4, 3, 0);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a * b).derivative(Var::X), a.derivative(Var::X) * b + a * b.derivative(Var::X));
        if (!b.is_zero()) {
            auto q = divide_exact(a * b, b);
            ASSERT_TRUE(q);
            EXPECT_EQ(*q, a);
        }
    }
}

TEST(TruncSeries, OrderIsAdditiveUnderProduct) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<unsigned> low(0, 6);
    for (int k = 0; k < 200; ++k) {
        std::map<unsigned, Rat> a, b;
        unsigned oa = low(rng), ob = low(rng);
        a[oa] = Rat(coef(rng) == 0 ? 1 : coef(rng) | 1);
        b[ob] = Rat(coef(rng) == 0 ? 2 : coef(rng) | 1);
        for (unsigned e = 1; e < 5; ++e) {
            a[oa + e] = Rat(coef(rng));
            b[ob + e] = Rat(coef(rng));
        }
        auto sa = TruncSeries::truncated(a, 30), sb = TruncSeries::truncated(b, 30);
        EXPECT_EQ(*(sa * sb).finite_order(), *sa.finite_order() + *sb.finite_order());
    }
}

TEST(TruncSeries, DerivativeLowersOrderByOne) {
    for (unsigned n = 1; n < 12; ++n) {
        auto s = poly({{n, Rat(3)}, {n + 2, Rat(-1)}});
        EXPECT_EQ(*s.derivative().finite_order(), n - 1);
    }
}

TEST(TruncSeries, PrecisionTracking) {
    auto a = TruncSeries::truncated({{1, Rat(1)}}, 10);
    auto b = TruncSeries::truncated({{2, Rat(1)}}, 6);
    EXPECT_EQ((a + b).precision(), 6u);
    EXPECT_EQ((a * b).precision(), 7u);
    EXPECT_FALSE((a * b).exact());
    EXPECT_TRUE((poly({{1, Rat(1)}}) * poly({{2, Rat(1)}})).exact());
    auto z = TruncSeries::truncated({}, 8);
    try {
        (void)z.finite_order();
        ADD_FAILURE() << "expected PrecisionExhausted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::PrecisionExhausted);
    }
}

TEST(TruncSeries, ComposeMatchesDirectExpansion) {
    auto x = poly({{2, Rat(1)}}), y = poly({{3, Rat(1)}});
    EXPECT_TRUE(compose(Y.pow(2) - X.pow(3), x, y).is_known_zero());
    auto s = compose(X * Y + Y.pow(2), x, y);
    EXPECT_EQ(s, poly({{5, Rat(1)}, {6, Rat(1)}}));
}
