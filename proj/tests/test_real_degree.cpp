#include "curvelab/implicit.hpp"
#include "curvelab/parse.hpp"
#include "curvelab/real_degree.hpp"
#include "oracles.hpp"

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

// Real and imaginary parts of (x + iy)^k.
std::pair<BiPoly, BiPoly> power_map(unsigned k) {
    BiPoly re = BiPoly::constant(Rat(1)), im;
    for (unsigned j = 0; j < k; ++j) {
        BiPoly r = re * X - im * Y, i = re * Y + im * X;
        re = r;
        im = i;
    }
    return {re, im};
}

} // namespace

TEST(WindingDegree, ComplexPowers) {
    for (unsigned k = 1; k <= 6; ++k) {
        auto [p, q] = power_map(k);
        EXPECT_EQ(winding_degree(p, q, Rat(1, 2)).degree, static_cast<long>(k));
        EXPECT_EQ(winding_degree(p, Rat(-1) * q, Rat(1, 2)).degree, -static_cast<long>(k));
    }
}

TEST(WindingDegree, RadiusIndependence) {
    auto [p, q] = power_map(3);
    BiPoly P = p + X.pow(4), Q = q - Y.pow(5);
    long d = winding_degree(P, Q, Rat(1, 8)).degree;
    EXPECT_EQ(d, 3);
    EXPECT_EQ(winding_degree(P, Q, Rat(1, 16)).degree, d);
}

TEST(WindingDegree, ZeroOnCircle) {
    EXPECT_EQ(error_of([] { winding_degree(X - BiPoly::constant(Rat(1, 2)), Y, Rat(1, 2)); }), Errc::ZeroOnCircle);
}

TEST(WindingDegree, ReportFields) {
    auto r = inflection_degree(Y.pow(2) - X.pow(3), Rat(1, 8));
    EXPECT_EQ(r.map_kind, MapKind::InflectionPair);
    EXPECT_EQ(map_kind_name(r.map_kind), "inflection_pair");
    EXPECT_EQ(r.radius, Rat(1, 8));
    EXPECT_GT(r.samples_used, 0u);
}

// Preimages of (0, c) for small c > 0 counted along explicit real branches.
TEST(WindingDegree, AgreesWithSignedPreimages) {
    const unsigned prec = 24;
    TruncSeries t = TruncSeries::truncated({{1, Rat(1)}}, prec);
    // x^2 - y^2 + x^4: y = +-t sqrt(1 + t^2).
    BiPoly node = X.pow(2) - Y.pow(2) + X.pow(4);
    TruncSeries root = oracle::sqrt_one_plus(t * t, prec);
    std::vector<std::pair<TruncSeries, TruncSeries>> node_branches{{t, t * root}, {t, Rat(-1) * (t * root)}};
    // y^2 - x^3: (t^2, t^3).
    BiPoly cusp = Y.pow(2) - X.pow(3);
    std::vector<std::pair<TruncSeries, TruncSeries>> cusp_branches{{t * t, t * t * t}};

    for (const auto& [f, branches] : {std::pair{node, node_branches}, std::pair{cusp, cusp_branches}}) {
        long wi = inflection_degree(f, Rat(1, 16)).degree;
        long wv = vertex_degree(f, Rat(1, 16)).degree;
        EXPECT_EQ(wi, oracle::signed_preimages(f, inflection_polynomial(f), branches)) << to_string(f);
        EXPECT_EQ(wv, oracle::signed_preimages(f, vertex_polynomial(f), branches)) << to_string(f);
    }
    EXPECT_EQ(vertex_degree(node, Rat(1, 16)).degree, 2);
    EXPECT_EQ(vertex_degree(cusp, Rat(1, 16)).degree, 1);
}

TEST(WindingDegree, SignOfF) {
    // i_f is cubic in f and v_f is of degree six, so f -> -f keeps the
    // inflection degree and reverses the vertex degree.
    for (const BiPoly& f : {X.pow(2) - Y.pow(2) + X.pow(4), Y.pow(2) - X.pow(3)}) {
        BiPoly g = Rat(-1) * f;
        EXPECT_EQ(inflection_degree(g, Rat(1, 16)).degree, inflection_degree(f, Rat(1, 16)).degree);
        EXPECT_EQ(vertex_degree(g, Rat(1, 16)).degree, -vertex_degree(f, Rat(1, 16)).degree);
    }
}

TEST(WindingDegree, SimilarityInvariance) {
    BiPoly f = X.pow(2) - Y.pow(2) + X.pow(4);
    long base = vertex_degree(f, Rat(1, 16)).degree;
    BiPoly rot = f.substitute(Rat(3, 5) * X - Rat(4, 5) * Y, Rat(4, 5) * X + Rat(3, 5) * Y);
    EXPECT_EQ(vertex_degree(rot, Rat(1, 16)).degree, base);
    BiPoly scaled = f.substitute(Rat(2) * X, Rat(2) * Y);
    EXPECT_EQ(vertex_degree(scaled, Rat(1, 32)).degree, base);
}

// Along y = x^2 + a x^4 the curvature at 0 is 2 with kappa'' = 24(a - 1).
TEST(VertexOrientation, Kinds) {
    EXPECT_EQ(vertex_orientation(parse_param("t, t^2"), Rat(0)), VertexKind::Outward);
    EXPECT_EQ(vertex_orientation(parse_param("t, t^2 + 2t^4"), Rat(0)), VertexKind::Inward);
    EXPECT_EQ(vertex_orientation(parse_param("t, t^2 - 2t^4"), Rat(0)), VertexKind::Outward);
    EXPECT_EQ(vertex_orientation(parse_param("t, -t^2 - 2t^4"), Rat(0)), VertexKind::Inward);
    EXPECT_EQ(error_of([] { vertex_orientation(parse_param("t, t^2 + t^4"), Rat(0)); }), Errc::DegenerateVertex);
    EXPECT_EQ(error_of([] { vertex_orientation(parse_param("t, t^3"), Rat(0)); }), Errc::NotAVertex);
    EXPECT_EQ(error_of([] { vertex_orientation(parse_param("t, t^2 + t^3"), Rat(0)); }), Errc::NotAVertex);
}

TEST(IndexConsistency, PredictedMatchesComputed) {
    for (const char* s : {"t, t^2", "t, -t^2", "-t, t^2", "t^2, t", "t, t^2 - 2t^4", "t, t^2 + 2t^4",
                          "t, -t^2 - 2t^4", "t, 3t^2 + t^5", "-2t, t^2 + t^5"}) {
        auto r = index_consistency(parse_param(s), Rat(0), Rat(1, 16));
        EXPECT_TRUE(r.pass()) << s << ": predicted " << r.predicted << " computed " << r.computed.degree;
    }
}

TEST(IndexConsistency, NeedsALinearCoordinate) {
    EXPECT_EQ(error_of([] { index_consistency(parse_param("t + t^3, t^2"), Rat(0), Rat(1, 16)); }), Errc::InvalidArgument);
}

TEST(IndexConsistency, ReflectionFlipsIndex) {
    auto a = index_consistency(parse_param("t, t^2 - 2t^4"), Rat(0), Rat(1, 16));
    auto b = index_consistency(parse_param("t, -t^2 + 2t^4"), Rat(0), Rat(1, 16));
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.kappa_sign, -b.kappa_sign);
    EXPECT_EQ(a.computed.degree, -b.computed.degree);
}
