#include <cmath>

#include <gtest/gtest.h>

#include "lobachevsky/correspondence.hpp"
#include "lobachevsky/sampling.hpp"

using namespace lob;

namespace {

const Curvature H = Curvature::hyperbolic();
const Curvature S = Curvature::spherical();
const std::array<double, 3> equilateral{pi / 3, pi / 3, pi / 3};

}  // namespace

TEST(Substitution, VanishesOnHyperbolicTriangles) {
    for (double k : {0.5, 1.0, 3.0}) {
        for (std::uint64_t i = 0; i < 2000; ++i) {
            CounterRng rng(41, i);
            const TriangleData t = sample_triangle(Curvature::hyperbolic(k), rng, {1e-3, 10.0 * k, 1000});
            for (const auto& r : imaginary_substitution_residuals(t)) EXPECT_LT(std::abs(r.residual), 1e-9);
        }
    }
}

TEST(Substitution, CosineRuleBecomesTheHyperbolicOne) {
    // cos(ix) = cosh x and sin(ix) = i sinh x, so the second relation turns real
    const TriangleData t = solve_from_sss(H, Length(0.7), Length(1.1), Length(1.4));
    const double raw = std::cosh(1.1) - std::cosh(0.7) * std::cosh(1.4) + std::sinh(0.7) * std::sinh(1.4) * std::cos(t.B);
    const auto r = imaginary_substitution_residual(RelationId::Spherical2, t);
    EXPECT_NEAR(r.residual.imag(), 0.0, 1e-15);
    EXPECT_NEAR(r.residual.real() * std::max({1.0, std::cosh(1.1), std::cosh(0.7) * std::cosh(1.4),
                                             std::sinh(0.7) * std::sinh(1.4) * std::fabs(std::cos(t.B))}),
                raw, 1e-14);
}

TEST(Substitution, FailsOnRealSphericalAngles) {
    // feeding a spherical triangle's angles with its own sides breaks the identity
    const TriangleData s = solve_from_sss(S, Length(0.7), Length(1.1), Length(1.4));
    TriangleData h = s;
    h.geometry = H;
    EXPECT_GT(std::abs(imaginary_substitution_residual(RelationId::Spherical4, h).residual), 1e-3);
}

TEST(Substitution, Errors) {
    const TriangleData t = solve_from_sss(H, Length(1), Length(1), Length(1));
    EXPECT_THROW(imaginary_substitution_residual(RelationId::Hyperbolic1, t), Error);
    EXPECT_THROW(imaginary_substitution_residual(RelationId::Spherical1,
                                                 solve_from_sss(S, Length(1), Length(1), Length(1))),
                 Error);
}

TEST(Limit, ExcessVanishesQuadratically) {
    for (const Curvature geo : {H, S, Curvature::hyperbolic(2.5)}) {
        const LimitFit fit = euclidean_limit_slope(geo, equilateral, {1e-1, 1e-2, 1e-3});
        EXPECT_NEAR(fit.slope, 2.0, 0.1);
        ASSERT_EQ(fit.residual_norms.size(), 3u);
        for (double r : fit.law_of_cosines_residuals) EXPECT_LT(r, 1.0);
        // excess ~ |K| * area: sqrt(3)/4 for the unit equilateral
        EXPECT_NEAR(fit.residual_norms.back() / 1e-6, std::sqrt(3.0) / 4.0, 1e-3);
    }
}

TEST(Limit, TinyTrianglesAreNearlyFlat) {
    const LimitFit fit = euclidean_limit_slope(H, {0.4, 1.1, pi - 1.5}, {1e-4, 1e-6});
    EXPECT_LT(fit.residual_norms.back(), 1e-12);
}

TEST(Limit, Errors) {
    EXPECT_THROW(euclidean_limit_slope(Curvature::euclidean(), equilateral, {1e-1, 1e-3}), Error);
    EXPECT_THROW(euclidean_limit_slope(H, {1.0, 1.0, 1.0}, {1e-1, 1e-3}), Error);
    EXPECT_THROW(euclidean_limit_slope(H, equilateral, {1e-3, 1e-1}), Error);
    EXPECT_THROW(euclidean_limit_slope(H, equilateral, {1e-1, 1e-2}), Error);
    EXPECT_THROW(euclidean_limit_slope(H, equilateral, {2.0, 1e-3}), Error);
    EXPECT_THROW(euclidean_limit_slope(H, equilateral, {1e-1}), Error);
}

TEST(Rescaling, AnglesDependOnlyOnSidesOverK) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        CounterRng rng(42, i);
        const double lambda = std::exp(rng.uniform(std::log(1e-3), std::log(1e6)));
        EXPECT_TRUE(rescaling_check(sample_triangle(H, rng), lambda).passed);
        EXPECT_TRUE(rescaling_check(sample_triangle(S, rng), lambda).passed);
    }
    EXPECT_THROW(rescaling_check(solve_from_sss(H, Length(1), Length(1), Length(1)), 0.0), Error);
}

TEST(Loglog, ExactPowerLaw) {
    EXPECT_NEAR(loglog_slope({1, 10, 100}, {3, 300, 30000}), 2.0, 1e-14);
}
