#pragma once

#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include "core.hpp"
#include "error.hpp"
#include "vec.hpp"

namespace lob {

// Concrete models used as ground truth:
//   Plane2      (x, y) in coordinates 0..1
//   Sphere2     E^3 coordinates 0..2 with |x| = k
//   Hyperboloid Minkowski coordinates 0..3 with <x,x> = k^2, x0 > 0; dim 2 keeps x3 = 0
//   HalfSpace3  (u, v, z) in coordinates 0..2, z > 0, metric k^2 (du^2 + dv^2 + dz^2) / z^2
enum class Model { Plane2, Sphere2, Hyperboloid, HalfSpace3 };

inline constexpr std::string_view to_string(Model m) noexcept {
    switch (m) {
        case Model::Plane2: return "plane2";
        case Model::Sphere2: return "sphere2";
        case Model::Hyperboloid: return "hyperboloid";
        case Model::HalfSpace3: return "halfspace3";
    }
    return "unknown";
}

struct ModelPoint {
    Model model = Model::Plane2;
    double k = 1.0;
    int dim = 2;
    Vec4 x{};
};

/// Geodesic ray: base point and unit tangent direction in the model metric.
struct Ray {
    ModelPoint base;
    Vec4 direction{};
};

inline ModelPoint plane_point(double x, double y) { return {Model::Plane2, 1.0, 2, {x, y, 0.0, 0.0}}; }

/// Radial projection onto the sphere of radius k.
inline ModelPoint sphere_point(const Vec3& v, double k = 1.0) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n)) fail(ErrorKind::Domain, "sphere point needs a nonzero finite direction");
    return {Model::Sphere2, k, 2, extend((k / n) * v)};
}

/// Hyperboloid point with the given spatial part; x0 is solved from the constraint.
inline ModelPoint hyperboloid_point(const Vec3& s, double k = 1.0, int dim = 3) {
    if (dim == 2 && s[2] != 0.0) fail(ErrorKind::Domain, "H^2 points keep the last coordinate zero");
    const double x0 = std::sqrt(k * k + dot(s, s));
    return {Model::Hyperboloid, k, dim, {x0, s[0], s[1], s[2]}};
}

inline ModelPoint hyperboloid_origin(double k = 1.0, int dim = 3) { return hyperboloid_point({0, 0, 0}, k, dim); }

inline ModelPoint halfspace_point(double u, double v, double z, double k = 1.0) {
    if (!(z > 0.0)) fail(ErrorKind::Domain, "half-space points need z > 0");
    return {Model::HalfSpace3, k, 3, {u, v, z, 0.0}};
}

/// Relative violation of the model constraint.
inline double constraint_defect(const ModelPoint& p) {
    switch (p.model) {
        case Model::Sphere2: return std::fabs(dot(head3(p.x), head3(p.x)) / (p.k * p.k) - 1.0);
        case Model::Hyperboloid: {
            const double s = dot(spatial(p.x), spatial(p.x));
            return std::fabs((p.x[0] * p.x[0] - s) / (p.k * p.k) - 1.0) / (1.0 + s / (p.k * p.k));
        }
        case Model::HalfSpace3: return p.x[2] > 0.0 ? 0.0 : 1.0;
        case Model::Plane2: break;
    }
    return 0.0;
}

/// Re-project onto the model after arithmetic.
inline ModelPoint renormalized(const ModelPoint& p) {
    switch (p.model) {
        case Model::Sphere2: return sphere_point(head3(p.x), p.k);
        case Model::Hyperboloid: {
            Vec3 s = spatial(p.x);
            if (p.dim == 2) s[2] = 0.0;
            return hyperboloid_point(s, p.k, p.dim);
        }
        default: break;
    }
    return p;
}

namespace detail {

inline void require_same_model(const ModelPoint& p, const ModelPoint& q) {
    if (p.model != q.model || p.k != q.k) fail(ErrorKind::Domain, "points belong to different models");
}

inline void require_model(const ModelPoint& p, Model m, const char* op) {
    if (p.model != m)
        fail(ErrorKind::Domain, std::string(op) + " requires the " + std::string(to_string(m)) + " model");
}

}  // namespace detail

/// Linear isometry of Minkowski space preserving the upper sheet.
struct Lorentz {
    std::array<Vec4, 4> rows{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};

    Vec4 operator()(const Vec4& v) const { return {dot(rows[0], v), dot(rows[1], v), dot(rows[2], v), dot(rows[3], v)}; }

    ModelPoint operator()(const ModelPoint& p) const { return renormalized({p.model, p.k, p.dim, (*this)(p.x)}); }

    Ray operator()(const Ray& r) const { return {(*this)(r.base), (*this)(r.direction)}; }

    friend Lorentz operator*(const Lorentz& f, const Lorentz& g) {
        Lorentz h;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int l = 0; l < 4; ++l) s += f.rows[i][l] * g.rows[l][j];
                h.rows[i][j] = s;
            }
        return h;
    }
};

/// Boost carrying the origin (k, 0, 0, 0) to p.
inline Lorentz boost_from_origin(const ModelPoint& p) {
    detail::require_model(p, Model::Hyperboloid, "boost_from_origin");
    const Vec4 u = (1.0 / p.k) * p.x;
    Lorentz m;
    m.rows[0] = u;
    for (int i = 1; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m.rows[i][j] = j == 0 ? u[i] : (i == j ? 1.0 : 0.0) + u[i] * u[j] / (1.0 + u[0]);
    return m;
}

/// Boost carrying p to the origin.
inline Lorentz boost_to_origin(const ModelPoint& p) {
    ModelPoint q = p;
    q.x = {p.x[0], -p.x[1], -p.x[2], -p.x[3]};
    return boost_from_origin(q);
}

/// Spatial rotation (or reflection) applied to coordinates 1..3.
inline Lorentz spatial_map(const std::array<Vec3, 3>& m) {
    Lorentz l;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) l.rows[i + 1][j + 1] = m[i][j];
    return l;
}

/// Householder reflection of R^3 carrying unit vector w onto e3.
inline std::array<Vec3, 3> reflect_onto_e3(const Vec3& w) {
    const Vec3 v = w - Vec3{0, 0, 1};
    const double vv = dot(v, v);
    std::array<Vec3, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    if (vv < 1e-300) return m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] -= 2.0 * v[i] * v[j] / vv;
    return m;
}

/// Geodesic distance in the model.
inline double model_distance(const ModelPoint& p, const ModelPoint& q) {
    detail::require_same_model(p, q);
    const double k = p.k;
    switch (p.model) {
        case Model::Plane2: return std::hypot(p.x[0] - q.x[0], p.x[1] - q.x[1]);
        case Model::Sphere2: {
            const Vec3 a = head3(p.x), b = head3(q.x);
            return k * std::atan2(norm(cross(a, b)), dot(a, b));
        }
        case Model::Hyperboloid: {
            const double c = minkowski(p.x, q.x) / (k * k);
            if (c > 2.0) return k * std::acosh(c);
            // -<p-q, p-q> = 4 k^2 sinh^2(d / 2k): stable where cosh(d/k) is near 1
            const Vec4 w = p.x - q.x;
            const double chord2 = std::fmax(-minkowski(w, w), 0.0);
            return 2.0 * k * std::asinh(std::sqrt(chord2) / (2.0 * k));
        }
        case Model::HalfSpace3: {
            const double e = norm(head3(p.x) - head3(q.x));
            return 2.0 * k * std::asinh(e / (2.0 * std::sqrt(p.x[2] * q.x[2])));
        }
    }
    return 0.0;
}

inline ModelPoint to_hyperboloid(const ModelPoint& p);

/// Angle at `at` between the geodesics toward `toward1` and `toward2`, in [0, pi].
inline double model_angle(const ModelPoint& at, const ModelPoint& toward1, const ModelPoint& toward2) {
    detail::require_same_model(at, toward1);
    detail::require_same_model(at, toward2);
    switch (at.model) {
        case Model::Plane2: {
            const Vec3 u{toward1.x[0] - at.x[0], toward1.x[1] - at.x[1], 0};
            const Vec3 v{toward2.x[0] - at.x[0], toward2.x[1] - at.x[1], 0};
            if (norm(u) == 0.0 || norm(v) == 0.0) fail(ErrorKind::Domain, "angle needs points distinct from the vertex");
            return angle_between(u, v);
        }
        case Model::Sphere2: {
            // great-circle planes through `at`; their normals meet at the vertex angle
            const Vec3 p = head3(at.x);
            const Vec3 n1 = cross(p, head3(toward1.x)), n2 = cross(p, head3(toward2.x));
            const double scale = dot(p, p);
            if (norm(n1) <= 1e-15 * scale || norm(n2) <= 1e-15 * scale)
                fail(ErrorKind::Domain, "angle needs points distinct from the vertex and its antipode");
            return angle_between(n1, n2);
        }
        case Model::Hyperboloid: {
            const Lorentz t = boost_to_origin(at);
            const Vec3 u = spatial(t(toward1.x)), v = spatial(t(toward2.x));
            if (norm(u) <= 1e-15 * at.k || norm(v) <= 1e-15 * at.k)
                fail(ErrorKind::Domain, "angle needs points distinct from the vertex");
            return angle_between(u, v);
        }
        case Model::HalfSpace3:
            return model_angle(to_hyperboloid(at), to_hyperboloid(toward1), to_hyperboloid(toward2));
    }
    return 0.0;
}

/// Point at arc length t along a ray.
inline ModelPoint point_along(const Ray& r, double t) {
    const ModelPoint& b = r.base;
    switch (b.model) {
        case Model::Hyperboloid:
            return renormalized({b.model, b.k, b.dim, std::cosh(t / b.k) * b.x + (b.k * std::sinh(t / b.k)) * r.direction});
        case Model::Sphere2:
            return renormalized({b.model, b.k, b.dim, std::cos(t / b.k) * b.x + (b.k * std::sin(t / b.k)) * r.direction});
        case Model::Plane2: return {b.model, b.k, b.dim, b.x + t * r.direction};
        case Model::HalfSpace3: break;
    }
    fail(ErrorKind::Domain, "point_along is not provided for the half-space model");
}

/// Unit initial tangent of the geodesic from `from` to `to`.
inline Ray ray_toward(const ModelPoint& from, const ModelPoint& to) {
    detail::require_same_model(from, to);
    switch (from.model) {
        case Model::Hyperboloid: {
            const Vec3 e = spatial(boost_to_origin(from)(to.x));
            if (norm(e) <= 1e-15 * from.k) fail(ErrorKind::Domain, "ray needs two distinct points");
            return {from, boost_from_origin(from)(from_spatial(normalized(e)))};
        }
        case Model::Sphere2: {
            const Vec3 p = head3(from.x);
            const Vec3 n = cross(p, head3(to.x));
            if (norm(n) <= 1e-15 * dot(p, p)) fail(ErrorKind::Domain, "ray needs two distinct, non-antipodal points");
            return {from, extend(normalized(cross(n, p)))};
        }
        case Model::Plane2: {
            const Vec4 d = to.x - from.x;
            if (norm(d) == 0.0) fail(ErrorKind::Domain, "ray needs two distinct points");
            return {from, normalized(d)};
        }
        case Model::HalfSpace3: break;
    }
    fail(ErrorKind::Domain, "ray_toward is not provided for the half-space model");
}

/// Ideal endpoint of a hyperboloid ray as a lightlike direction with x0 = 1.
inline Vec4 ideal_endpoint(const Ray& r) {
    detail::require_model(r.base, Model::Hyperboloid, "ideal_endpoint");
    const Vec3 d = normalized(spatial(boost_to_origin(r.base)(r.direction)));
    const Vec4 l = boost_from_origin(r.base)(from_spatial(d, 1.0));
    return (1.0 / l[0]) * l;
}

/// Unit-hyperboloid to upper half-space: the ideal point (1, 0, 0, 1) goes to infinity.
inline ModelPoint to_halfspace(const ModelPoint& p) {
    detail::require_model(p, Model::Hyperboloid, "to_halfspace");
    const Vec4 y = (1.0 / p.k) * p.x;
    // x0 - x3 = (1 + x1^2 + x2^2) / (x0 + x3) on the unit sheet
    const double diff = y[3] > 0.0 ? (1.0 + y[1] * y[1] + y[2] * y[2]) / (y[0] + y[3]) : y[0] - y[3];
    const double z = 1.0 / diff;
    return halfspace_point(y[1] * z, y[2] * z, z, p.k);
}

inline ModelPoint to_hyperboloid(const ModelPoint& p) {
    detail::require_model(p, Model::HalfSpace3, "to_hyperboloid");
    const double u = p.x[0], v = p.x[1], z = p.x[2];
    const double r2 = u * u + v * v;
    const Vec3 s{u / z, v / z, (r2 + z * z - 1.0) / (2.0 * z)};
    return hyperboloid_point(p.k * s, p.k, 3);
}

}  // namespace lob
