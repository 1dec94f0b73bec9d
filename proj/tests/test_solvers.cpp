#include <cmath>

#include <gtest/gtest.h>

#include "lobachevsky/sampling.hpp"
#include "lobachevsky/solvers.hpp"

using namespace lob;

namespace {

constexpr double acosh_2 = 1.31695789692481670862504634731;
constexpr double acos_two_thirds = 0.841068670567930255776525031826;
constexpr double equilateral_excess = -0.6183866418860024711330682878;
constexpr double quarter_pi_side = 1.52857091948099816127245618479;
constexpr double angle_345_a = 0.643501108793284386802809228717;
constexpr double angle_345_b = 0.927295218001612232428512462922;

const Curvature H = Curvature::hyperbolic();
const Curvature S = Curvature::spherical();
const Curvature E = Curvature::euclidean();

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::Domain;
}

void expect_same(const TriangleData& x, const TriangleData& y, double tol) {
    EXPECT_NEAR(x.a, y.a, tol);
    EXPECT_NEAR(x.b, y.b, tol);
    EXPECT_NEAR(x.c, y.c, tol);
    EXPECT_NEAR(x.A, y.A, tol);
    EXPECT_NEAR(x.B, y.B, tol);
    EXPECT_NEAR(x.C, y.C, tol);
}

}  // namespace

TEST(Sss, HyperbolicEquilateral) {
    const auto t = solve_from_sss(H, Length(acosh_2), Length(acosh_2), Length(acosh_2));
    EXPECT_NEAR(t.A, acos_two_thirds, 1e-15);
    EXPECT_NEAR(t.B, acos_two_thirds, 1e-15);
    EXPECT_NEAR(t.C, acos_two_thirds, 1e-15);
    EXPECT_NEAR(angle_excess(t), equilateral_excess, 1e-14);
}

TEST(Sss, SphericalOctant) {
    const auto t = solve_from_sss(S, Length(half_pi), Length(half_pi), Length(half_pi));
    EXPECT_NEAR(t.A, half_pi, 1e-15);
    EXPECT_NEAR(t.B, half_pi, 1e-15);
    EXPECT_NEAR(t.C, half_pi, 1e-15);
    EXPECT_NEAR(angle_excess(t), half_pi, 1e-14);
}

TEST(Sss, Euclidean345) {
    const auto t = solve_from_sss(E, Length(3), Length(4), Length(5));
    EXPECT_NEAR(t.A, angle_345_a, 1e-15);
    EXPECT_NEAR(t.B, angle_345_b, 1e-15);
    EXPECT_NEAR(t.C, half_pi, 1e-15);
    EXPECT_NEAR(angle_excess(t), 0.0, 1e-15);
}

TEST(Sss, ScaleCarriesThrough) {
    const auto t = solve_from_sss(Curvature::hyperbolic(3.0), Length(3 * acosh_2), Length(3 * acosh_2),
                                  Length(3 * acosh_2));
    EXPECT_NEAR(t.A, acos_two_thirds, 1e-15);
}

TEST(Sss, Errors) {
    EXPECT_EQ(kind_of([] { solve_from_sss(H, Length(1), Length(1), Length(3)); }), ErrorKind::Infeasible);
    EXPECT_EQ(kind_of([] { solve_from_sss(E, Length(1), Length(2), Length(3)); }), ErrorKind::Infeasible);
    EXPECT_EQ(kind_of([] { solve_from_sss(E, Length(0), Length(1), Length(1)); }), ErrorKind::Domain);
    EXPECT_EQ(kind_of([] { solve_from_sss(S, Length(3.0), Length(3.0), Length(0.5)); }), ErrorKind::Domain);
}

TEST(Aaa, HyperbolicQuarterPi) {
    const double q = pi / 4;
    const auto t = solve_from_aaa(H, Angle(q), Angle(q), Angle(q));
    EXPECT_NEAR(t.a, quarter_pi_side, 1e-14);
    EXPECT_NEAR(t.b, quarter_pi_side, 1e-14);
    EXPECT_NEAR(t.c, quarter_pi_side, 1e-14);
    EXPECT_NEAR(std::cosh(t.a), 1.0 + std::sqrt(2.0), 1e-14);
}

TEST(Aaa, SphericalNeedleIsFeasible) {
    // angle sum above pi and every polar inequality holds
    const auto t = solve_from_aaa(S, Angle(3.0), Angle(0.1), Angle(0.1));
    EXPECT_LT(max_abs(spherical_residuals(t)), 1e-9);
}

TEST(Aaa, SphericalOctant) {
    const auto t = solve_from_aaa(S, Angle(half_pi), Angle(half_pi), Angle(half_pi));
    EXPECT_NEAR(t.a, half_pi, 1e-15);
    EXPECT_NEAR(t.c, half_pi, 1e-15);
}

TEST(Aaa, Errors) {
    const double q = pi / 3;
    EXPECT_EQ(kind_of([] { solve_from_aaa(E, Angle(1), Angle(1), Angle(1)); }), ErrorKind::Similarity);
    EXPECT_EQ(kind_of([&] { solve_from_aaa(H, Angle(q), Angle(q), Angle(q)); }), ErrorKind::Degenerate);
    EXPECT_EQ(kind_of([] { solve_from_aaa(H, Angle(1.2), Angle(1.2), Angle(1.2)); }), ErrorKind::Infeasible);
    EXPECT_EQ(kind_of([] { solve_from_aaa(S, Angle(0.5), Angle(0.5), Angle(0.5)); }), ErrorKind::Infeasible);
    EXPECT_EQ(kind_of([] { solve_from_aaa(S, Angle(3.0), Angle(1.5), Angle(0.1)); }), ErrorKind::Infeasible);
    EXPECT_EQ(kind_of([] { solve_from_aaa(H, Angle(0.0), Angle(1), Angle(1)); }), ErrorKind::Domain);
}

TEST(Sas, SphericalRightIsoscelesLegs) {
    // legs pi/4 around a right angle: hypotenuse pi/3, the other angles atan(sqrt 2)
    const auto t = solve_from_sas(S, Length(pi / 4), Angle(half_pi), Length(pi / 4));
    EXPECT_NEAR(t.a, pi / 3, 1e-15);
    EXPECT_NEAR(t.B, 0.955316618124509278163857102516, 1e-14);
    EXPECT_NEAR(t.C, 0.955316618124509278163857102516, 1e-14);
}

TEST(Asa, InfeasibleAnglePairs) {
    EXPECT_EQ(kind_of([] { solve_from_asa(E, Angle(2.0), Length(1), Angle(1.5)); }), ErrorKind::Infeasible);
    // in H, B + C near pi with a long side has no triangle
    EXPECT_EQ(kind_of([] { solve_from_asa(H, Angle(1.5), Length(5), Angle(1.5)); }), ErrorKind::Infeasible);
}

class RoundTrip : public ::testing::TestWithParam<GeometryKind> {};

TEST_P(RoundTrip, SasAsaAaaReproduceSss) {
    const Curvature geo = Curvature::of(GetParam(), 1.7);
    for (std::uint64_t i = 0; i < 2000; ++i) {
        CounterRng rng(7, i);
        const auto t = sample_triangle(geo, rng, {0.05, geo.is_euclidean() ? 10.0 : 5.0 * 1.7, 1000});
        SCOPED_TRACE(i);
        expect_same(solve_from_sss(geo, Length(t.a), Length(t.b), Length(t.c)), t, 1e-9);
        expect_same(solve_from_sas(geo, Length(t.b), Angle(t.A), Length(t.c)), t, 1e-9);
        expect_same(solve_from_asa(geo, Angle(t.B), Length(t.a), Angle(t.C)), t, 1e-9);
        if (!geo.is_euclidean() && std::fabs(angle_excess(t)) > 1e-3)
            expect_same(solve_from_aaa(geo, Angle(t.A), Angle(t.B), Angle(t.C)), t, 1e-7);
    }
}

INSTANTIATE_TEST_SUITE_P(AllGeometries, RoundTrip,
                         ::testing::Values(GeometryKind::Spherical, GeometryKind::Euclidean, GeometryKind::Hyperbolic),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Excess, SignMatchesGeometry) {
    for (std::uint64_t i = 0; i < 500; ++i) {
        CounterRng rng(3, i);
        EXPECT_GT(angle_excess(sample_triangle(S, rng)), 0.0);
        EXPECT_LT(angle_excess(sample_triangle(H, rng)), 0.0);
        EXPECT_NEAR(angle_excess(sample_triangle(E, rng)), 0.0, 1e-12);
    }
}
