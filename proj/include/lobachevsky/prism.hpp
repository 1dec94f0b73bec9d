#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "core.hpp"
#include "error.hpp"
#include "models.hpp"
#include "sampling.hpp"
#include "spheres.hpp"
#include "triangle.hpp"
#include "vec.hpp"

namespace lob {

/// Ray from `from` toward the ideal endpoint of `parallel_to`, i.e. the line
/// through `from` parallel to the given one in the hyperbolic sense.
inline Ray asymptotic_ray(const ModelPoint& from, const Ray& parallel_to) {
    detail::require_model(from, Model::Hyperboloid, "asymptotic_ray");
    detail::require_same_model(from, parallel_to.base);
    const Vec4 omega = ideal_endpoint(parallel_to);
    // at the origin the direction toward a lightlike point is its spatial part
    const Vec3 d = spatial(boost_to_origin(from)(omega));
    return {from, boost_from_origin(from)(from_spatial(normalized(d)))};
}

namespace detail {

inline double det4(const std::array<Vec4, 4>& m) {
    auto minor3 = [&](int col) {
        std::array<Vec3, 3> r;
        for (int i = 1; i < 4; ++i) {
            int c = 0;
            for (int j = 0; j < 4; ++j)
                if (j != col) r[i - 1][c++] = m[i][j];
        }
        return triple(r[0], r[1], r[2]);
    };
    double d = 0.0;
    for (int j = 0; j < 4; ++j) d += (j % 2 == 0 ? 1.0 : -1.0) * m[0][j] * minor3(j);
    return d;
}

/// |det| of four vectors relative to the product of their norms: 0 iff linearly dependent.
inline double dependence(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
    return std::fabs(det4({a, b, c, d})) / (norm(a) * norm(b) * norm(c) * norm(d));
}

}  // namespace detail

/// Solid figure over a right triangle ABC (right angle at C): the perpendicular AA'
/// to the plane of ABC at A, and the lines BB', CC' parallel to it.
///
/// spherical: triangle cut by the planes through B on a small sphere about B, with
///   vertex k on BB', vertex n on BC and vertex m on BA. Stored with A = angle at k,
///   B = angle at n, C = angle at m, so C is the right angle.
/// horospherical: triangle cut by the planes BAA', CAA', CBB' on the horosphere
///   through A centred at the common ideal point; vertices on AA', BB', CC' in that
///   order, the right angle sitting at the CC' vertex.
struct PrismFigure {
    TriangleData base;
    ModelPoint A, B, C;
    Ray AA, BB, CC;
    Vec4 ideal_point{};
    TriangleData spherical;
    TriangleData horospherical;
    double ideal_defect = 0.0;      ///< max coordinate gap between the three ideal endpoints
    double coplanarity_defect = 0.0; ///< CC' against the planes CBB' and CAA'
};

/// Builds the figure in H^3. The legs a = BC and b = CA set the base; `placement`
/// moves the whole figure so the construction does not rely on coordinate axes.
inline PrismFigure build_prism(const TriangleData& right_triangle, const Lorentz& placement = {}) {
    if (right_triangle.geometry.kind() != GeometryKind::Hyperbolic)
        fail(ErrorKind::Precondition, "prism base must be hyperbolic");
    if (!(std::fabs(right_triangle.C - half_pi) < 1e-8))
        fail(ErrorKind::Precondition, "prism base must be right-angled at C");
    if (!(right_triangle.a > 0.0 && right_triangle.b > 0.0))
        fail(ErrorKind::Domain, "prism legs must be positive");
    const Curvature& geo = right_triangle.geometry;
    const double k = geo.scale();

    PrismFigure f;
    f.C = placement(hyperboloid_origin(k, 3));
    f.A = placement(hyperboloid_point({k * std::sinh(right_triangle.b / k), 0, 0}, k, 3));
    f.B = placement(hyperboloid_point({0, k * std::sinh(right_triangle.a / k), 0}, k, 3));
    f.base = measure_triangle(f.A, f.B, f.C, geo);

    // e3 is Minkowski-orthogonal to the base plane x3 = 0 and to A
    f.AA = {f.A, placement(Vec4{0, 0, 0, 1})};
    f.BB = asymptotic_ray(f.B, f.AA);
    f.CC = asymptotic_ray(f.C, f.AA);
    f.ideal_point = ideal_endpoint(f.AA);
    for (const Ray* r : {&f.BB, &f.CC}) {
        const Vec4 d = ideal_endpoint(*r) - f.ideal_point;
        for (double x : d) f.ideal_defect = std::max(f.ideal_defect, std::fabs(x));
    }
    const Vec4 on_cc = point_along(f.CC, k).x;
    f.coplanarity_defect = std::max(detail::dependence(f.C.x, f.B.x, f.ideal_point, on_cc),
                                    detail::dependence(f.C.x, f.A.x, f.ideal_point, on_cc));

    const GeodesicSphere small{f.B, 0.5 * std::min(f.base.a, f.base.c)};
    f.spherical = geodesic_sphere_triangle(small, {f.BB, ray_toward(f.B, f.C), ray_toward(f.B, f.A)});

    const Lorentz to_upper = spatial_map(reflect_onto_e3(spatial(f.ideal_point)));
    const ModelPoint hA = to_halfspace(to_upper(f.A));
    const ModelPoint hB = to_halfspace(to_upper(f.B));
    const ModelPoint hC = to_halfspace(to_upper(f.C));
    f.horospherical = horosphere_triangle(hA.x[2], {hA.x[0], hA.x[1]}, {hB.x[0], hB.x[1]}, {hC.x[0], hC.x[1]}, k);
    return f;
}

/// Recovers the hyperbolic right triangle from the two derived triangles alone:
/// the spherical one supplies B and the parallelism angles of a, b, c, and the
/// horospherical one supplies A.
inline TriangleData replay_hyperbolic(const PrismFigure& f) {
    const Curvature& geo = f.base.geometry;
    auto from_par = [&](double x) { return inverse_parallelism(Angle(std::min(x, half_pi)), geo).value; };
    TriangleData t;
    t.geometry = geo;
    t.B = f.spherical.a;
    t.a = from_par(f.spherical.c);
    t.c = from_par(f.spherical.b);
    t.b = from_par(f.spherical.B);
    t.A = f.horospherical.A;
    t.C = half_pi;
    return t;
}

}  // namespace lob
