#include "curvelab/intersection.hpp"
#include "curvelab/branches.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace curvelab;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

unsigned m(const BiPoly& f, const BiPoly& g) {
    auto r = intersection_multiplicity(f, g);
    EXPECT_TRUE(r.finite()) << to_string(f) << " , " << to_string(g);
    return r.finite() ? r.value.value() : 0;
}

} // namespace

TEST(Intersection, WorkedValues) {
    EXPECT_EQ(m(X, Y), 1u);
    EXPECT_EQ(m(Y - X.pow(2), Y), 2u);
    EXPECT_EQ(m(Y.pow(2) - X.pow(3), Y.pow(3) - X.pow(2)), 4u);
    EXPECT_EQ(m(X.pow(2) + Y.pow(5), Y.pow(2) + X.pow(5)), 4u);
    EXPECT_EQ(m(Y.pow(2) - X.pow(3), Y), 3u);
    EXPECT_EQ(m(Y.pow(2) - X.pow(3), Y.pow(2) - X.pow(3) + X.pow(4)), 8u);
}

TEST(Intersection, InfiniteWithCertificate) {
    BiPoly f = (X - Y) * (X + Y.pow(2)), g = (X - Y) * (Y + X.pow(3));
    auto r = intersection_multiplicity(f, g);
    EXPECT_FALSE(r.finite());
    ASSERT_TRUE(r.certificate);
    EXPECT_TRUE(divide_exact(f, *r.certificate).has_value());
    EXPECT_TRUE(divide_exact(g, *r.certificate).has_value());
    EXPECT_GT(r.certificate->total_degree(), 0);
}

TEST(Intersection, UnitsGiveZero) {
    EXPECT_EQ(m(X + BiPoly::constant(Rat(1)), Y), 0u);
    EXPECT_EQ(m(X.pow(3), BiPoly::constant(Rat(2))), 0u);
}

TEST(Intersection, MatchesDimensionOracle) {
    std::mt19937_64 rng(2024);
    int compared = 0;
    for (int k = 0; k < 120; ++k) {
        BiPoly f = oracle::random_poly(rng, 4, 4), g = oracle::random_poly(rng, 4, 4);
        if (f.is_zero() || g.is_zero()) continue;
        auto r = intersection_multiplicity(f, g);
        auto d = oracle::local_dim(f, g, 24);
        if (!r.finite()) {
            EXPECT_FALSE(d.has_value()) << to_string(f) << " , " << to_string(g);
            continue;
        }
        ASSERT_TRUE(d.has_value()) << to_string(f) << " , " << to_string(g);
        EXPECT_EQ(r.value.value(), *d) << to_string(f) << " , " << to_string(g);
        ++compared;
    }
    EXPECT_GT(compared, 60);
}

// Axioms: symmetry, affine invariance (linear part), m = 0 off the curve,
// m(f, g + a f) = m(f, g), additivity m(f, gh) = m(f, g) + m(f, h), and
// m(x, y) = 1, checked on 1000 random instances in total.
TEST(Intersection, Axioms) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    int checked = 0;
    for (int k = 0; k < 200; ++k) {
        BiPoly f = oracle::random_poly(rng, 3, 3), g = oracle::random_poly(rng, 3, 3),
               h = oracle::random_poly(rng, 3, 3);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        auto fg = intersection_multiplicity(f, g), fh = intersection_multiplicity(f, h);
        if (!fg.finite() || !fh.finite()) continue;
        unsigned a = fg.value.value(), b = fh.value.value();
        EXPECT_EQ(intersection_multiplicity(g, f).value, fg.value);
        EXPECT_EQ(intersection_multiplicity(f, g * h).value.value(), a + b);
        BiPoly lin = oracle::random_poly(rng, 2, 3, 3, 0);
        EXPECT_EQ(intersection_multiplicity(f, g + lin * f).value, fg.value);
        Rat p = coef(rng), q = coef(rng), r = coef(rng), s = coef(rng);
        if (p * s - q * r != 0) {
            BiPoly U = p * X + q * Y, V = r * X + s * Y;
            EXPECT_EQ(intersection_multiplicity(f.substitute(U, V), g.substitute(U, V)).value, fg.value);
        }
        EXPECT_EQ(intersection_multiplicity(f + BiPoly::constant(Rat(1)), g).value.value(), 0u);
        checked += 5;
    }
    EXPECT_GE(checked, 500);
    EXPECT_EQ(m(X, Y), 1u);
}

TEST(Intersection, TransverseProductRule) {
    // Germs with transverse tangent cones meet with multiplicity mult f * mult g.
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        unsigned a = 1 + k % 3, b = 1 + (k / 3) % 3;
        BiPoly f = X.pow(a) + oracle::random_poly(rng, a + 3, 3, 3, a + 1);
        BiPoly g = Y.pow(b) + oracle::random_poly(rng, b + 3, 3, 3, b + 1);
        EXPECT_EQ(m(f, g), a * b) << to_string(f) << " , " << to_string(g);
    }
}

TEST(Milnor, SimpleSingularities) {
    for (unsigned k = 1; k <= 8; ++k) EXPECT_EQ(milnor_number(X.pow(2) + Y.pow(k + 1)).value(), k);
    for (unsigned k = 4; k <= 7; ++k) EXPECT_EQ(milnor_number(X.pow(2) * Y + Y.pow(k - 1)).value(), k);
    EXPECT_EQ(milnor_number(X.pow(3) + Y.pow(4)).value(), 6u);
    EXPECT_EQ(milnor_number(X.pow(3) + X * Y.pow(3)).value(), 7u);
    EXPECT_EQ(milnor_number(X.pow(3) + Y.pow(5)).value(), 8u);
    EXPECT_FALSE(milnor_number(X.pow(2)).finite());
}

TEST(Milnor, MatchesDimensionOracle) {
    for (const BiPoly& f : {X.pow(3) + Y.pow(4), X.pow(4) + Y.pow(5) + X.pow(2) * Y.pow(3), X.pow(2) * Y + Y.pow(6)}) {
        auto d = oracle::local_dim(f.derivative(Var::X), f.derivative(Var::Y));
        ASSERT_TRUE(d);
        EXPECT_EQ(milnor_number(f).value(), *d);
    }
}

TEST(Intersection, EqualsSumOfOrdersAlongBranches) {
    BiPoly f = (Y.pow(2) - X.pow(3)) * (X - Y.pow(2));
    auto bs = rational_branches(f);
    ASSERT_EQ(bs.size(), 2u);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 30; ++k) {
        BiPoly g = oracle::random_poly(rng, 5, 4);
        if (g.is_zero()) continue;
        auto r = intersection_multiplicity(f, g);
        unsigned sum = 0;
        bool infinite = false;
        for (const auto& b : bs) {
            auto s = compose(g, b.param.x(), b.param.y());
            if (s.is_known_zero()) infinite = true;
            else sum += *s.finite_order();
        }
        EXPECT_EQ(r.finite(), !infinite);
        if (r.finite()) {
            EXPECT_EQ(r.value.value(), sum) << to_string(g);
        }
    }
}

TEST(Intersection, RejectsGermsAwayFromOrigin) {
    try {
        milnor_number(X + BiPoly::constant(Rat(1)));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotThroughOrigin);
    }
}
