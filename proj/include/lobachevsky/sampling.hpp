#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "core.hpp"
#include "error.hpp"
#include "models.hpp"
#include "triangle.hpp"
#include "vec.hpp"

namespace lob {

/// Counter-based generator: draw n of stream s under seed is a pure function of
/// (seed, s, n), so suites can hand one stream to each sample index and get the
/// same numbers regardless of evaluation order or platform.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() { return mix(seed_ ^ mix(stream_ ^ mix(counter_++ + 0x632BE59BD9B4E019ULL))); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    // splitmix64 finalizer
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

inline Vec3 random_unit3(CounterRng& rng) {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * pi);
    const double r = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

/// Rotation of R^3 drawn as a product of two random reflections.
inline std::array<Vec3, 3> random_rotation(CounterRng& rng) {
    auto reflection = [](const Vec3& n) {
        std::array<Vec3, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] -= 2.0 * n[i] * n[j];
        return m;
    };
    const auto f = reflection(random_unit3(rng)), g = reflection(random_unit3(rng));
    std::array<Vec3, 3> h{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = f[i][0] * g[0][j] + f[i][1] * g[1][j] + f[i][2] * g[2][j];
    return h;
}

/// Random orientation-preserving isometry of H^3 moving the origin at most `max_shift`.
inline Lorentz random_isometry(CounterRng& rng, double k, double max_shift) {
    const double r = rng.uniform(0.0, max_shift);
    const ModelPoint target = hyperboloid_point((k * std::sinh(r / k)) * random_unit3(rng), k, 3);
    return boost_from_origin(target) * spatial_map(random_rotation(rng));
}

/// Sides and angles of the triangle with vertices p0, p1, p2 measured in the model.
/// Side a is opposite p0.
inline TriangleData measure_triangle(const ModelPoint& p0, const ModelPoint& p1, const ModelPoint& p2,
                                     const Curvature& geometry) {
    TriangleData t;
    t.geometry = geometry;
    t.a = model_distance(p1, p2);
    t.b = model_distance(p0, p2);
    t.c = model_distance(p0, p1);
    t.A = model_angle(p0, p1, p2);
    t.B = model_angle(p1, p2, p0);
    t.C = model_angle(p2, p0, p1);
    return t;
}

struct SamplingConstraints {
    double min_angle = 1e-3;
    double max_side = 10.0;
    int max_attempts = 1000;
};

struct SampledTriangle {
    TriangleData data;
    std::array<ModelPoint, 3> vertices;
};

/// Draws three points in the model of `geometry` and measures the triangle they span.
/// Hyperbolic triangles live on the H^2 hyperboloid, spherical ones inside a cap of
/// angular radius pi/4 (so every side stays below pi/2 and the figure in a hemisphere).
inline SampledTriangle sample_triangle_points(const Curvature& geometry, CounterRng& rng,
                                              const SamplingConstraints& cons = {}) {
    const auto kind = geometry.kind();
    const double k = geometry.is_euclidean() ? 1.0 : geometry.scale();
    if (kind == GeometryKind::Hyperbolic && cons.max_side > 10.0 * k)
        fail(ErrorKind::Precondition, "hyperbolic sampling caps sides at 10k");
    if (!(cons.max_side > 0.0)) fail(ErrorKind::Precondition, "max_side must be positive");

    for (int attempt = 0; attempt < cons.max_attempts; ++attempt) {
        std::array<ModelPoint, 3> v;
        switch (kind) {
            case GeometryKind::Euclidean:
                for (auto& p : v) {
                    const double r = 0.5 * cons.max_side * std::sqrt(rng.uniform());
                    const double th = rng.uniform(0.0, 2.0 * pi);
                    p = plane_point(r * std::cos(th), r * std::sin(th));
                }
                break;
            case GeometryKind::Hyperbolic:
                for (auto& p : v) {
                    const double r = rng.uniform(0.0, 0.5 * cons.max_side);
                    const double th = rng.uniform(0.0, 2.0 * pi);
                    const double s = k * std::sinh(r / k);
                    p = hyperboloid_point({s * std::cos(th), s * std::sin(th), 0.0}, k, 2);
                }
                break;
            case GeometryKind::Spherical: {
                const double cap = 0.5 * std::min(cons.max_side / k, 0.5 * pi);
                const ModelPoint centre = sphere_point(random_unit3(rng), k);
                for (auto& p : v) {
                    const Vec3 w = random_unit3(rng);
                    const Vec3 c = head3(centre.x);
                    const Vec3 tangent = w - (dot(w, c) / (k * k)) * c;
                    if (norm(tangent) < 1e-6) {
                        p = centre;
                        continue;
                    }
                    const Ray r{centre, extend(normalized(tangent))};
                    p = point_along(r, k * std::acos(rng.uniform(std::cos(cap), 1.0)));
                }
                break;
            }
        }
        try {
            const TriangleData t = measure_triangle(v[0], v[1], v[2], geometry);
            if (std::min({t.A, t.B, t.C}) < cons.min_angle) continue;
            if (std::max({t.a, t.b, t.c}) > cons.max_side) continue;
            validate(t);
            return {t, v};
        } catch (const Error&) {
            continue;  // coincident draws
        }
    }
    fail(ErrorKind::Sampling, "no triangle met the constraints within the attempt budget");
}

inline TriangleData sample_triangle(const Curvature& geometry, CounterRng& rng, const SamplingConstraints& cons = {}) {
    return sample_triangle_points(geometry, rng, cons).data;
}

}  // namespace lob
