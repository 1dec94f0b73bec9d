#pragma once

#include <array>
#include <cmath>
#include <string>

#include "core.hpp"
#include "error.hpp"
#include "triangle.hpp"

namespace lob {

namespace detail {

// sin, identity or sinh of a side measured in units of k.
inline double side_fn(GeometryKind g, double x) {
    switch (g) {
        case GeometryKind::Spherical: return std::sin(x);
        case GeometryKind::Hyperbolic: return std::sinh(x);
        case GeometryKind::Euclidean: break;
    }
    return x;
}

/// Vertex angle opposite side `a` from three sides in units of k, by the
/// half-angle formula: tan(A/2)^2 = f(s-b) f(s-c) / (f(s) f(s-a)).
inline double half_angle(GeometryKind g, double a, double b, double c) {
    const double s = 0.5 * (a + b + c);
    const double num = side_fn(g, s - b) * side_fn(g, s - c);
    const double den = side_fn(g, s) * side_fn(g, s - a);
    return 2.0 * std::atan2(std::sqrt(num), std::sqrt(den));
}

inline double unit_scale(const Curvature& g) { return g.is_euclidean() ? 1.0 : g.scale(); }

inline void check_spherical_sides(double a, double b, double c) {
    if (a >= pi || b >= pi || c >= pi || a + b + c >= 2.0 * pi)
        fail(ErrorKind::Domain, "spherical sides exceed the hemisphere bounds");
}

inline void check_positive_angle(double x, const char* name) {
    if (!(x > 0.0 && x < pi)) fail(ErrorKind::Domain, std::string(name) + " must lie in (0, pi)");
}

}  // namespace detail

/// Three sides to a full triangle.
inline TriangleData solve_from_sss(const Curvature& geometry, Length a, Length b, Length c) {
    const double k = detail::unit_scale(geometry);
    const double x = a.value / k, y = b.value / k, z = c.value / k;
    if (!(x > 0.0 && y > 0.0 && z > 0.0)) fail(ErrorKind::Domain, "sides must be positive");
    if (x >= y + z || y >= x + z || z >= x + y) fail(ErrorKind::Infeasible, "triangle inequality violated");
    const auto g = geometry.kind();
    if (g == GeometryKind::Spherical) detail::check_spherical_sides(x, y, z);
    TriangleData t;
    t.geometry = geometry;
    t.a = a.value;
    t.b = b.value;
    t.c = c.value;
    t.A = detail::half_angle(g, x, y, z);
    t.B = detail::half_angle(g, y, z, x);
    t.C = detail::half_angle(g, z, x, y);
    return t;
}

/// Two sides and the included angle.
inline TriangleData solve_from_sas(const Curvature& geometry, Length b, Angle A, Length c) {
    detail::check_positive_angle(A.value, "included angle");
    const double k = detail::unit_scale(geometry);
    const double y = b.value / k, z = c.value / k;
    if (!(y > 0.0 && z > 0.0)) fail(ErrorKind::Domain, "sides must be positive");
    const double h = std::sin(0.5 * A.value);
    double x = 0.0;
    switch (geometry.kind()) {
        case GeometryKind::Euclidean:
            x = std::sqrt((y - z) * (y - z) + 4.0 * y * z * h * h);
            break;
        case GeometryKind::Hyperbolic: {
            const double d = std::sinh(0.5 * (y - z));
            x = 2.0 * std::asinh(std::sqrt(d * d + std::sinh(y) * std::sinh(z) * h * h));
            break;
        }
        case GeometryKind::Spherical: {
            if (y >= pi || z >= pi) fail(ErrorKind::Domain, "spherical side must be shorter than pi k");
            const double d = std::sin(0.5 * (y - z));
            const double hav = d * d + std::sin(y) * std::sin(z) * h * h;
            x = 2.0 * std::asin(std::sqrt(std::fmin(hav, 1.0)));
            detail::check_spherical_sides(x, y, z);
            break;
        }
    }
    TriangleData t = solve_from_sss(geometry, Length(x * k), b, c);
    t.A = A.value;
    return t;
}

/// Two angles and the included side.
inline TriangleData solve_from_asa(const Curvature& geometry, Angle B, Length a, Angle C) {
    detail::check_positive_angle(B.value, "angle B");
    detail::check_positive_angle(C.value, "angle C");
    const double k = detail::unit_scale(geometry);
    const double x = a.value / k;
    if (!(x > 0.0)) fail(ErrorKind::Domain, "side must be positive");
    const double sB = std::sin(B.value), cB = std::cos(B.value);
    const double sC = std::sin(C.value), cC = std::cos(C.value);
    double y = 0.0, z = 0.0;
    switch (geometry.kind()) {
        case GeometryKind::Euclidean: {
            const double A = pi - B.value - C.value;
            if (!(A > 0.0)) fail(ErrorKind::Infeasible, "angles B + C must be below pi");
            const double sA = std::sin(A);
            y = x * sB / sA;
            z = x * sC / sA;
            break;
        }
        case GeometryKind::Spherical: {
            if (x >= pi) fail(ErrorKind::Domain, "spherical side must be shorter than pi k");
            // cot b sin a = cot B sin C + cos a cos C, and the mirror for c.
            const double sa = std::sin(x), ca = std::cos(x);
            y = std::atan2(sa * sB, cB * sC + ca * cC * sB);
            z = std::atan2(sa * sC, cC * sB + ca * cB * sC);
            detail::check_spherical_sides(x, y, z);
            break;
        }
        case GeometryKind::Hyperbolic: {
            // coth b sinh a = cot B sin C + cosh a cos C, solved as tanh b = n / d.
            const double sa = std::sinh(x), ca = std::cosh(x), ea = std::exp(-x);
            auto side = [&](double outer, double inner) {
                const double s1 = std::sin(outer), c1 = std::cos(outer);
                const double s2 = std::sin(inner), c2 = std::cos(inner);
                const double h = std::sin(0.5 * inner);
                const double n = sa * s1;
                const double d = c1 * s2 + ca * c2 * s1;
                // d - n rewritten to avoid cancelling cosh a against sinh a
                const double gap = c1 * s2 - 2.0 * s1 * ca * h * h + s1 * ea;
                if (!(gap > 0.0) || !(d > 0.0)) fail(ErrorKind::Infeasible, "angle pair too large for this side");
                return 0.5 * std::log((d + n) / gap);
            };
            y = side(B.value, C.value);
            z = side(C.value, B.value);
            break;
        }
    }
    if (!(y > 0.0 && z > 0.0) || !std::isfinite(y) || !std::isfinite(z))
        fail(ErrorKind::Infeasible, "angle pair admits no triangle");
    TriangleData t = solve_from_sss(geometry, a, Length(y * k), Length(z * k));
    t.B = B.value;
    t.C = C.value;
    return t;
}

/// Three angles. Only meaningful off the Euclidean plane, where angles fix the size.
inline TriangleData solve_from_aaa(const Curvature& geometry, Angle A, Angle B, Angle C) {
    if (geometry.is_euclidean())
        fail(ErrorKind::Similarity, "angles determine a Euclidean triangle only up to similarity");
    detail::check_positive_angle(A.value, "angle A");
    detail::check_positive_angle(B.value, "angle B");
    detail::check_positive_angle(C.value, "angle C");
    const double sum = A.value + B.value + C.value;
    if (std::fabs(sum - pi) <= 1e-12 * pi)
        fail(ErrorKind::Degenerate, "angle sum equals pi: the triangle shrinks to a point");
    const double S = 0.5 * sum;
    const double k = geometry.scale();
    const std::array<double, 3> ang{A.value, B.value, C.value};
    std::array<double, 3> side{};

    if (geometry.kind() == GeometryKind::Hyperbolic) {
        if (sum > pi) fail(ErrorKind::Infeasible, "hyperbolic angle sum must be below pi");
        const double root = 2.0 * std::sqrt(std::cos(S) * std::cos(S - ang[0]) * std::cos(S - ang[1]) *
                                            std::cos(S - ang[2]));
        for (int i = 0; i < 3; ++i) {
            const double p = std::sin(ang[(i + 1) % 3]), q = std::sin(ang[(i + 2) % 3]);
            // cos X + cos Y cos Z = sin Y sin Z / sin Pi(x), in atan2 form.
            const Angle par(std::atan2(p * q, root));
            side[i] = inverse_parallelism(par, geometry).value;
        }
    } else {
        if (sum < pi) fail(ErrorKind::Infeasible, "spherical angle sum must exceed pi");
        for (int i = 0; i < 3; ++i) {
            const double num = -std::cos(S) * std::cos(S - ang[i]);
            const double den = std::cos(S - ang[(i + 1) % 3]) * std::cos(S - ang[(i + 2) % 3]);
            if (!(num > 0.0 && den > 0.0)) fail(ErrorKind::Infeasible, "angles admit no spherical triangle");
            side[i] = 2.0 * std::atan2(std::sqrt(num), std::sqrt(den)) * k;
        }
        detail::check_spherical_sides(side[0] / k, side[1] / k, side[2] / k);
    }
    for (double s : side)
        if (!(s > 0.0)) fail(ErrorKind::Degenerate, "angles produce a zero side");

    TriangleData t;
    t.geometry = geometry;
    t.a = side[0];
    t.b = side[1];
    t.c = side[2];
    t.A = A.value;
    t.B = B.value;
    t.C = C.value;
    return t;
}

}  // namespace lob
