#pragma once

#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include "core.hpp"
#include "error.hpp"

namespace lob {

/// Side x is opposite vertex angle X. Sides are lengths in units of the
/// curvature scale's length unit; angles are radians.
struct TriangleData {
    double a = 0, b = 0, c = 0;
    double A = 0, B = 0, C = 0;
    Curvature geometry = Curvature::euclidean();

    std::array<double, 3> sides() const { return {a, b, c}; }
    std::array<double, 3> angles() const { return {A, B, C}; }
};

enum class RelationId {
    SphericalRight1,  // sin A sin c = sin a
    SphericalRight2,  // cos b sin A = cos B
    SphericalRight3,  // cos a cos b = cos c
    Spherical1,       // sin a sin B = sin b sin A
    Spherical2,       // cos b - cos a cos c = sin a sin c cos B
    Spherical3,       // cot a sin b = cot A sin C + cos b cos C
    Spherical4,       // cos a sin B sin C = cos B cos C + cos A
    Hyperbolic1,      // sin A tan Pi(a) = sin B tan Pi(b)
    Hyperbolic2,      // 1 - cos Pi(b) cos Pi(c) cos A = sin Pi(b) sin Pi(c) / sin Pi(a)
    Hyperbolic3,      // cos A + cos B cos C = sin B sin C / sin Pi(a)
    Hyperbolic4,      // cot A sin C sin Pi(b) + cos C = cos Pi(b) / cos Pi(a)
    EuclideanSines,   // a sin B = b sin A
    EuclideanCosines, // a^2 = b^2 + c^2 - 2bc cos A
};

inline constexpr std::string_view to_string(RelationId id) noexcept {
    switch (id) {
        case RelationId::SphericalRight1: return "spherical_right_1";
        case RelationId::SphericalRight2: return "spherical_right_2";
        case RelationId::SphericalRight3: return "spherical_right_3";
        case RelationId::Spherical1: return "spherical_1";
        case RelationId::Spherical2: return "spherical_2";
        case RelationId::Spherical3: return "spherical_3";
        case RelationId::Spherical4: return "spherical_4";
        case RelationId::Hyperbolic1: return "hyperbolic_1";
        case RelationId::Hyperbolic2: return "hyperbolic_2";
        case RelationId::Hyperbolic3: return "hyperbolic_3";
        case RelationId::Hyperbolic4: return "hyperbolic_4";
        case RelationId::EuclideanSines: return "euclidean_sines";
        case RelationId::EuclideanCosines: return "euclidean_cosines";
    }
    return "unknown";
}

/// Left side minus right side of one relation.
struct RelationResidual {
    RelationId relation;
    double residual;
};

template <std::size_t N>
using Residuals = std::array<RelationResidual, N>;

template <std::size_t N>
double max_abs(const Residuals<N>& rs) {
    double m = 0.0;
    for (const auto& r : rs) m = std::fmax(m, std::fabs(r.residual));
    return m;
}

namespace detail {

inline void require_kind(const TriangleData& t, GeometryKind kind, const char* op) {
    if (t.geometry.kind() != kind)
        fail(ErrorKind::Domain, std::string(op) + " requires " + std::string(to_string(kind)) + " geometry");
}

inline void require_finite(const TriangleData& t) {
    for (double v : {t.a, t.b, t.c, t.A, t.B, t.C})
        if (!std::isfinite(v)) fail(ErrorKind::Domain, "triangle element is not finite");
}

}  // namespace detail

/// Checks the TriangleData invariants: positive sides, angles in (0, pi),
/// triangle inequality and, on the sphere, the hemisphere bounds.
inline void validate(const TriangleData& t) {
    detail::require_finite(t);
    for (double s : {t.a, t.b, t.c})
        if (!(s > 0.0)) fail(ErrorKind::Domain, "triangle sides must be positive");
    for (double x : {t.A, t.B, t.C})
        if (!(x > 0.0 && x < pi)) fail(ErrorKind::Domain, "triangle angles must lie in (0, pi)");
    if (t.a >= t.b + t.c || t.b >= t.a + t.c || t.c >= t.a + t.b)
        fail(ErrorKind::Infeasible, "triangle inequality violated");
    if (t.geometry.kind() == GeometryKind::Spherical) {
        const double k = t.geometry.scale();
        if (t.a >= pi * k || t.b >= pi * k || t.c >= pi * k || t.a + t.b + t.c >= 2.0 * pi * k)
            fail(ErrorKind::Domain, "spherical triangle must lie in a hemisphere");
    }
}

/// A + B + C - pi.
inline double angle_excess(const TriangleData& t) { return t.A + t.B + t.C - pi; }

/// Right spherical triangle relations, right angle at C.
inline Residuals<3> spherical_right_residuals(const TriangleData& t, double right_tol = 1e-8) {
    detail::require_kind(t, GeometryKind::Spherical, "spherical_right_residuals");
    detail::require_finite(t);
    if (!(std::fabs(t.C - half_pi) < right_tol))
        fail(ErrorKind::Precondition, "spherical_right_residuals expects a right angle at C");
    const double k = t.geometry.scale();
    const double a = t.a / k, b = t.b / k, c = t.c / k;
    return {{
        {RelationId::SphericalRight1, std::sin(t.A) * std::sin(c) - std::sin(a)},
        {RelationId::SphericalRight2, std::cos(b) * std::sin(t.A) - std::cos(t.B)},
        {RelationId::SphericalRight3, std::cos(a) * std::cos(b) - std::cos(c)},
    }};
}

/// General spherical triangle relations.
inline Residuals<4> spherical_residuals(const TriangleData& t) {
    detail::require_kind(t, GeometryKind::Spherical, "spherical_residuals");
    detail::require_finite(t);
    const double k = t.geometry.scale();
    if (t.a >= pi * k || t.b >= pi * k || t.c >= pi * k)
        fail(ErrorKind::Domain, "spherical side must be shorter than pi k");
    const double a = t.a / k, b = t.b / k, c = t.c / k;
    const double sa = std::sin(a), sb = std::sin(b), sc = std::sin(c);
    const double ca = std::cos(a), cb = std::cos(b), cc = std::cos(c);
    const double sA = std::sin(t.A), sB = std::sin(t.B), sC = std::sin(t.C);
    const double cA = std::cos(t.A), cB = std::cos(t.B), cC = std::cos(t.C);
    return {{
        {RelationId::Spherical1, sa * sB - sb * sA},
        {RelationId::Spherical2, (cb - ca * cc) - sa * sc * cB},
        {RelationId::Spherical3, (ca / sa) * sb - ((cA / sA) * sC + cb * cC)},
        {RelationId::Spherical4, ca * sB * sC - (cB * cC + cA)},
    }};
}

/// Hyperbolic relations written with the angle of parallelism of each side.
inline Residuals<4> hyperbolic_residuals(const TriangleData& t) {
    detail::require_kind(t, GeometryKind::Hyperbolic, "hyperbolic_residuals");
    detail::require_finite(t);
    const double k = t.geometry.scale();
    if (!(t.a > 0.0))
        fail(ErrorKind::Domain, "hyperbolic_4: cos Pi(a) vanishes for a zero side a");
    if (!(t.b > 0.0))
        fail(ErrorKind::Domain, "hyperbolic_1: tan Pi(b) is unbounded for a zero side b");
    const double sinPa = sin_parallelism(t.a, k), sinPb = sin_parallelism(t.b, k),
                 sinPc = sin_parallelism(t.c, k);
    const double cosPa = cos_parallelism(t.a, k), cosPb = cos_parallelism(t.b, k),
                 cosPc = cos_parallelism(t.c, k);
    const double tanPa = tan_parallelism(t.a, k), tanPb = tan_parallelism(t.b, k);
    const double sA = std::sin(t.A), sB = std::sin(t.B), sC = std::sin(t.C);
    const double cA = std::cos(t.A), cB = std::cos(t.B), cC = std::cos(t.C);
    return {{
        {RelationId::Hyperbolic1, sA * tanPa - sB * tanPb},
        {RelationId::Hyperbolic2, (1.0 - cosPb * cosPc * cA) - sinPb * sinPc / sinPa},
        {RelationId::Hyperbolic3, (cA + cB * cC) - sB * sC / sinPa},
        {RelationId::Hyperbolic4, ((cA / sA) * sC * sinPb + cC) - cosPb / cosPa},
    }};
}

inline Residuals<2> euclidean_residuals(const TriangleData& t) {
    detail::require_kind(t, GeometryKind::Euclidean, "euclidean_residuals");
    detail::require_finite(t);
    return {{
        {RelationId::EuclideanSines, t.a * std::sin(t.B) - t.b * std::sin(t.A)},
        {RelationId::EuclideanCosines, t.a * t.a - (t.b * t.b + t.c * t.c - 2.0 * t.b * t.c * std::cos(t.A))},
    }};
}

}  // namespace lob
