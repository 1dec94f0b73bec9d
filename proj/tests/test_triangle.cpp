#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "lobachevsky/sampling.hpp"
#include "lobachevsky/solvers.hpp"
#include "lobachevsky/triangle.hpp"

using namespace lob;

namespace {

const Curvature H = Curvature::hyperbolic();
const Curvature S = Curvature::spherical();
const Curvature E = Curvature::euclidean();

}  // namespace

TEST(Relations, NamesAreStable) {
    EXPECT_EQ(to_string(RelationId::Hyperbolic1), "hyperbolic_1");
    EXPECT_EQ(to_string(RelationId::SphericalRight3), "spherical_right_3");
    EXPECT_EQ(to_string(RelationId::EuclideanCosines), "euclidean_cosines");
}

TEST(Relations, VanishOnModelTriangles) {
    for (double k : {0.5, 1.0, 4.0}) {
        for (std::uint64_t i = 0; i < 2000; ++i) {
            CounterRng rng(11, i);
            EXPECT_LT(max_abs(spherical_residuals(sample_triangle(Curvature::spherical(k), rng))), 1e-9);
            EXPECT_LT(max_abs(hyperbolic_residuals(
                          sample_triangle(Curvature::hyperbolic(k), rng, {1e-3, 10.0 * k, 1000}))),
                      1e-9);
        }
    }
    for (std::uint64_t i = 0; i < 2000; ++i) {
        CounterRng rng(12, i);
        EXPECT_LT(max_abs(euclidean_residuals(sample_triangle(E, rng))), 1e-9);
    }
}

TEST(Relations, DetectPerturbedAngles) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        CounterRng rng(13, i);
        auto h = sample_triangle(H, rng, {0.1, 5.0, 1000});
        auto s = sample_triangle(S, rng, {0.1, 3.0, 1000});
        h.A += 1e-4;
        s.B += 1e-4;
        EXPECT_GT(max_abs(hyperbolic_residuals(h)), 1e-7);
        EXPECT_GT(max_abs(spherical_residuals(s)), 1e-7);
    }
}

TEST(Relations, WrongGeometryIsDomainError) {
    const auto t = solve_from_sss(H, Length(1), Length(1), Length(1));
    EXPECT_THROW(spherical_residuals(t), Error);
    EXPECT_THROW(euclidean_residuals(t), Error);
    EXPECT_THROW(hyperbolic_residuals(solve_from_sss(E, Length(1), Length(1), Length(1))), Error);
}

TEST(Relations, ZeroSideNamesTheRelation) {
    TriangleData t = solve_from_sss(H, Length(1), Length(1), Length(1));
    t.a = 0.0;
    try {
        hyperbolic_residuals(t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Domain);
        EXPECT_NE(std::string(e.what()).find("hyperbolic_4"), std::string::npos);
    }
}

TEST(RightSpherical, OctantAndQuarterLegs) {
    const auto octant = solve_from_sss(S, Length(half_pi), Length(half_pi), Length(half_pi));
    EXPECT_LT(max_abs(spherical_right_residuals(octant)), 1e-15);
    const auto t = solve_from_sas(S, Length(pi / 4), Angle(half_pi), Length(pi / 4));
    // relabel so the right angle is at C
    TriangleData r{t.b, t.c, t.a, t.B, t.C, t.A, S};
    EXPECT_LT(max_abs(spherical_right_residuals(r)), 1e-15);
    EXPECT_NEAR(r.A, 0.955316618124509278163857102516, 1e-14);
}

TEST(RightSpherical, NeedsRightAngleAtC) {
    const auto t = solve_from_sss(S, Length(1), Length(1), Length(1));
    try {
        spherical_right_residuals(t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    }
}

TEST(Validate, Invariants) {
    EXPECT_NO_THROW(validate(solve_from_sss(H, Length(1), Length(2), Length(2.5))));
    TriangleData bad = solve_from_sss(E, Length(3), Length(4), Length(5));
    bad.c = 8.0;
    EXPECT_THROW(validate(bad), Error);
    bad = solve_from_sss(E, Length(3), Length(4), Length(5));
    bad.A = pi;
    EXPECT_THROW(validate(bad), Error);
    bad = solve_from_sss(S, Length(1), Length(1), Length(1));
    bad.a = bad.b = bad.c = 2.2;
    EXPECT_THROW(validate(bad), Error);
}

TEST(Excess, ScalesWithArea) {
    // excess = K * area: a spherical octant has excess pi/2 at k = 1
    const auto t = solve_from_sss(Curvature::spherical(2.0), Length(pi), Length(pi), Length(pi));
    EXPECT_NEAR(angle_excess(t), half_pi, 1e-14);
}
