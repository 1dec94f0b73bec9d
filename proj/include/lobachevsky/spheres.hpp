#pragma once

#include <array>
#include <cmath>

#include "core.hpp"
#include "error.hpp"
#include "models.hpp"
#include "triangle.hpp"
#include "vec.hpp"

namespace lob {

/// Points of H^3 at distance radius from centre.
struct GeodesicSphere {
    ModelPoint centre;
    double radius = 1.0;
};

namespace detail {

inline void check_sphere(const GeodesicSphere& s) {
    require_model(s.centre, Model::Hyperboloid, "geodesic sphere");
    if (s.centre.dim != 3) fail(ErrorKind::Domain, "geodesic spheres live in H^3");
    if (!(s.radius > 0.0) || !std::isfinite(s.radius)) fail(ErrorKind::Domain, "sphere radius must be positive");
}

}  // namespace detail

/// Triangle cut on a geodesic sphere by three rays from its centre. Sides are the
/// angles between the rays and vertex angles are the dihedral angles between the
/// planes the rays span, so the result is a unit-radius spherical triangle.
inline TriangleData geodesic_sphere_triangle(const GeodesicSphere& s, const std::array<Ray, 3>& rays) {
    detail::check_sphere(s);
    const double k = s.centre.k;
    std::array<ModelPoint, 3> p;
    for (int i = 0; i < 3; ++i) {
        detail::require_same_model(rays[i].base, s.centre);
        if (model_distance(rays[i].base, s.centre) > 1e-10 * k)
            fail(ErrorKind::Precondition, "rays must start at the sphere centre");
        p[i] = point_along(rays[i], s.radius);
    }

    const Lorentz to_centre = boost_to_origin(s.centre);
    std::array<Vec3, 3> e;
    for (int i = 0; i < 3; ++i) e[i] = normalized(spatial(to_centre(p[i].x)));

    constexpr double min_separation = 1e-7;
    TriangleData t;
    t.geometry = Curvature::spherical(1.0);
    std::array<double*, 3> side{&t.a, &t.b, &t.c};
    std::array<double*, 3> angle{&t.A, &t.B, &t.C};
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, l = (i + 2) % 3;
        *side[i] = model_angle(s.centre, p[j], p[l]);
        if (*side[i] < min_separation || *side[i] > pi - min_separation)
            fail(ErrorKind::Degenerate, "rays are collinear");
    }
    if (std::fabs(triple(e[0], e[1], e[2])) < 1e-12) fail(ErrorKind::Degenerate, "rays are coplanar");
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, l = (i + 2) % 3;
        *angle[i] = angle_between(cross(e[i], e[j]), cross(e[i], e[l]));
    }
    return t;
}

/// Length of the shorter great-circle arc between p and q on the sphere, by
/// summing hyperbolic chord lengths over 2^12, 2^13 and 2^14 segments and
/// Romberg-extrapolating. Comparing the result with the ray angle measures the sphere's
/// effective radius.
inline double geodesic_sphere_intrinsic_length(const GeodesicSphere& s, const ModelPoint& p, const ModelPoint& q) {
    detail::check_sphere(s);
    const double k = s.centre.k;
    const double tol = 1e-10 * std::fmax(k, s.radius);
    if (std::fabs(model_distance(s.centre, p) - s.radius) > tol ||
        std::fabs(model_distance(s.centre, q) - s.radius) > tol)
        fail(ErrorKind::Domain, "points do not lie on the sphere");

    const Lorentz to_centre = boost_to_origin(s.centre);
    const Vec3 u = normalized(spatial(to_centre(p.x)));
    const Vec3 w = normalized(spatial(to_centre(q.x)));
    const double theta = angle_between(u, w);
    if (theta == 0.0) return 0.0;
    Vec3 v = w - dot(w, u) * u;
    if (norm(v) < 1e-12) {
        // antipodal pair: any half great circle has the same length
        v = std::fabs(u[0]) < 0.9 ? cross(u, Vec3{1, 0, 0}) : cross(u, Vec3{0, 1, 0});
    }
    v = normalized(v);

    const double r = k * std::sinh(s.radius / k);
    auto polyline = [&](int n) {
        double total = 0.0;
        ModelPoint prev = hyperboloid_point(r * u, k, 3);
        for (int i = 1; i <= n; ++i) {
            const double t = theta * i / n;
            const ModelPoint cur = hyperboloid_point(r * (std::cos(t) * u + std::sin(t) * v), k, 3);
            total += model_distance(prev, cur);
            prev = cur;
        }
        return total;
    };
    // the chord error is even in the step, so two Romberg levels remove h^2 and h^4
    constexpr int segments = 1 << 14;
    const double l0 = polyline(segments / 4), l1 = polyline(segments / 2), l2 = polyline(segments);
    const double r1 = (4.0 * l1 - l0) / 3.0, r2 = (4.0 * l2 - l1) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

/// Triangle on the horosphere z = height of the upper half-space. The induced
/// metric there is flat: intrinsic length = planar length * k / height.
inline TriangleData horosphere_triangle(double height, const Vec<2>& p1, const Vec<2>& p2, const Vec<2>& p3,
                                        double k = 1.0) {
    if (!(height > 0.0) || !std::isfinite(height)) fail(ErrorKind::Domain, "horosphere height must be positive");
    if (!(k > 0.0)) fail(ErrorKind::Domain, "curvature scale must be positive");
    const Vec3 a{p1[0], p1[1], 0}, b{p2[0], p2[1], 0}, c{p3[0], p3[1], 0};
    const double ab = norm(a - b), bc = norm(b - c), ca = norm(c - a);
    if (ab == 0.0 || bc == 0.0 || ca == 0.0) fail(ErrorKind::Degenerate, "horosphere triangle has coincident points");
    if (norm(cross(b - a, c - a)) <= 1e-14 * std::fmax(ab, std::fmax(bc, ca)) * std::fmax(ab, std::fmax(bc, ca)))
        fail(ErrorKind::Degenerate, "horosphere triangle points are collinear");
    const double scale = k / height;
    TriangleData t;
    t.geometry = Curvature::euclidean();
    t.a = bc * scale;
    t.b = ca * scale;
    t.c = ab * scale;
    t.A = angle_between(b - a, c - a);
    t.B = angle_between(c - b, a - b);
    t.C = angle_between(a - c, b - c);
    return t;
}

}  // namespace lob
