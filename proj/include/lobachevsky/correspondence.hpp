#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "core.hpp"
#include "error.hpp"
#include "solvers.hpp"
#include "triangle.hpp"

namespace lob {

using Complex = std::complex<double>;

struct ComplexResidual {
    RelationId relation;
    Complex residual;
};

/// Spherical relation evaluated with sides i a/k, i b/k, i c/k and the real angles
/// of a hyperbolic triangle. The raw difference of the two sides grows like
/// cosh a cosh c, so it is divided by max(1, largest term modulus); for relation 2
/// that is the same normalisation that turns it into hyperbolic_2.
inline ComplexResidual imaginary_substitution_residual(RelationId id, const TriangleData& t) {
    detail::require_kind(t, GeometryKind::Hyperbolic, "imaginary_substitution_residual");
    detail::require_finite(t);
    const double k = t.geometry.scale();
    const Complex I(0.0, 1.0);
    const Complex a = I * (t.a / k), b = I * (t.b / k), c = I * (t.c / k);
    const double sA = std::sin(t.A), sB = std::sin(t.B), sC = std::sin(t.C);
    const double cA = std::cos(t.A), cB = std::cos(t.B), cC = std::cos(t.C);
    auto cot = [](Complex x) { return std::cos(x) / std::sin(x); };

    std::array<Complex, 3> terms{};
    switch (id) {
        case RelationId::Spherical1:
            terms = {std::sin(a) * sB, -std::sin(b) * sA, 0.0};
            break;
        case RelationId::Spherical2:
            terms = {std::cos(b), -std::cos(a) * std::cos(c), -std::sin(a) * std::sin(c) * cB};
            break;
        case RelationId::Spherical3:
            terms = {cot(a) * std::sin(b), -(cA / sA) * sC, -std::cos(b) * cC};
            break;
        case RelationId::Spherical4:
            terms = {std::cos(a) * sB * sC, -cB * cC, -cA};
            break;
        default:
            fail(ErrorKind::Domain, "imaginary substitution applies to the four general spherical relations");
    }
    double scale = 1.0;
    for (const auto& x : terms) scale = std::max(scale, std::abs(x));
    return {id, (terms[0] + terms[1] + terms[2]) / scale};
}

inline std::array<ComplexResidual, 4> imaginary_substitution_residuals(const TriangleData& t) {
    return {imaginary_substitution_residual(RelationId::Spherical1, t),
            imaginary_substitution_residual(RelationId::Spherical2, t),
            imaginary_substitution_residual(RelationId::Spherical3, t),
            imaginary_substitution_residual(RelationId::Spherical4, t)};
}

/// Scale sweep toward the Euclidean limit.
struct LimitFit {
    std::vector<double> scales;
    std::vector<double> residual_norms;          ///< |angle excess| at each scale
    std::vector<double> law_of_cosines_residuals;///< Euclidean law of cosines on the curved triangle, over eps^2
    double slope = 0.0;                          ///< log-log regression exponent of excess against scale
};

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

/// Shrinks the triangle with the given Euclidean angles by each factor eps (sides
/// eps * k * (a, b, c) with the longest side 1) and records how fast the curved
/// triangle's excess vanishes.
inline LimitFit euclidean_limit_slope(const Curvature& geometry, const std::array<double, 3>& shape_angles,
                                      const std::vector<double>& scales) {
    if (geometry.is_euclidean()) fail(ErrorKind::Domain, "the limit is taken from a curved geometry");
    const auto [A, B, C] = shape_angles;
    if (!(A > 0 && B > 0 && C > 0) || std::fabs(A + B + C - pi) > 1e-9)
        fail(ErrorKind::Domain, "shape angles must be positive and sum to pi");
    if (scales.size() < 2) fail(ErrorKind::Domain, "at least two scales are needed");
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (!(scales[i] > 0.0 && scales[i] <= 1.0)) fail(ErrorKind::Domain, "scales must lie in (0, 1]");
        if (i > 0 && !(scales[i] < scales[i - 1])) fail(ErrorKind::Domain, "scales must be strictly decreasing");
    }
    if (scales.front() / scales.back() < 100.0 * (1.0 - 1e-12)) fail(ErrorKind::Domain, "scales must span two decades");

    const double longest = std::max({std::sin(A), std::sin(B), std::sin(C)});
    const std::array<double, 3> unit{std::sin(A) / longest, std::sin(B) / longest, std::sin(C) / longest};
    const double k = geometry.scale();

    LimitFit fit;
    fit.scales = scales;
    for (double eps : scales) {
        TriangleData t;
        try {
            t = solve_from_sss(geometry, Length(eps * k * unit[0]), Length(eps * k * unit[1]), Length(eps * k * unit[2]));
        } catch (const Error& e) {
            fail(ErrorKind::Domain, std::string("degenerate shape: ") + e.what());
        }
        const double excess = std::fabs(angle_excess(t));
        if (!(excess > 0.0)) fail(ErrorKind::Domain, "excess underflowed; shape too degenerate for this scale");
        fit.residual_norms.push_back(excess);
        const double x = t.a / k, y = t.b / k, z = t.c / k;
        fit.law_of_cosines_residuals.push_back(std::fabs(x * x - (y * y + z * z - 2.0 * y * z * std::cos(t.A))) /
                                               (eps * eps));
    }
    fit.slope = loglog_slope(fit.scales, fit.residual_norms);
    return fit;
}

struct RescalingReport {
    double lambda = 1.0;
    std::array<double, 3> deviations{};
    bool passed = true;
};

/// Solves the same triangle at (k, sides) and (lambda k, lambda sides) and compares angles.
inline RescalingReport rescaling_check(const TriangleData& t, double lambda, double tol = 1e-12) {
    if (t.geometry.is_euclidean()) fail(ErrorKind::Domain, "rescaling_check needs a curved geometry");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) fail(ErrorKind::Domain, "lambda must be positive");
    const TriangleData base = solve_from_sss(t.geometry, Length(t.a), Length(t.b), Length(t.c));
    const TriangleData big = solve_from_sss(t.geometry.rescaled(lambda), Length(lambda * t.a), Length(lambda * t.b),
                                            Length(lambda * t.c));
    RescalingReport r;
    r.lambda = lambda;
    r.deviations = {std::fabs(base.A - big.A), std::fabs(base.B - big.B), std::fabs(base.C - big.C)};
    r.passed = std::all_of(r.deviations.begin(), r.deviations.end(), [&](double d) { return d < tol; });
    return r;
}

}  // namespace lob
