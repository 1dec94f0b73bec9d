#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cevians.hpp"
#include "core.hpp"
#include "correspondence.hpp"
#include "models.hpp"
#include "prism.hpp"
#include "report.hpp"
#include "sampling.hpp"
#include "solvers.hpp"
#include "spheres.hpp"
#include "triangle.hpp"

namespace lob {

enum class Suite { Spherical, Hyperbolic, Euclidean, SphereModel, Horosphere, Prism, Substitution, Limits, Cevians, All };

inline constexpr std::array<Suite, 9> all_suites{Suite::Spherical,  Suite::Hyperbolic, Suite::Euclidean,
                                                 Suite::SphereModel, Suite::Horosphere, Suite::Prism,
                                                 Suite::Substitution, Suite::Limits,    Suite::Cevians};

inline constexpr std::string_view to_string(Suite s) noexcept {
    switch (s) {
        case Suite::Spherical: return "spherical";
        case Suite::Hyperbolic: return "hyperbolic";
        case Suite::Euclidean: return "euclidean";
        case Suite::SphereModel: return "sphere-model";
        case Suite::Horosphere: return "horosphere";
        case Suite::Prism: return "prism";
        case Suite::Substitution: return "substitution";
        case Suite::Limits: return "limits";
        case Suite::Cevians: return "cevians";
        case Suite::All: return "all";
    }
    return "unknown";
}

inline std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : all_suites)
        if (to_string(s) == name) return s;
    if (name == "all") return Suite::All;
    return std::nullopt;
}

struct SuiteConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 10000;
    double tolerance = 1e-9;
    Curvature curvature = Curvature::hyperbolic(1.0);
    OutputFormat format = OutputFormat::Human;
};

// Thresholds that are fixed properties of the checks rather than the run tolerance.
inline constexpr double right_specialisation_tol = 1e-10;
inline constexpr double effective_radius_tol = 1e-7;
inline constexpr double horosphere_lengths_tol = 1e-10;
inline constexpr double prism_tol = 1e-8;
inline constexpr double ideal_point_tol = 1e-10;
inline constexpr double slope_tol = 0.1;
inline constexpr double limit_excess_tol = 1e-12;
inline constexpr double rescaling_tol = 1e-12;
inline constexpr std::array<double, 3> sphere_radii{0.1, 1.0, 5.0};
inline constexpr std::size_t limit_shapes = 10;
inline constexpr std::size_t max_effective_radius_checks = 1000;

namespace detail {

/// Named residual collectors that keep first-insertion order.
class Collector {
public:
    explicit Collector(std::string suite) : suite_(std::move(suite)) {}

    void add(const std::string& relation, double value, double tolerance, bool conjecture = false) {
        auto it = index_.find(relation);
        if (it == index_.end()) {
            it = index_.emplace(relation, slots_.size()).first;
            slots_.push_back({relation, tolerance, conjecture, {}});
        }
        slots_[it->second].stats.add(value);
    }

    template <std::size_t N>
    void add_all(const std::string& prefix, const Residuals<N>& rs, double tolerance) {
        for (const auto& r : rs) add(prefix + std::string(to_string(r.relation)), r.residual, tolerance);
    }

    void append_to(std::vector<ResidualEntry>& out) const {
        for (const auto& s : slots_) out.push_back(s.stats.finish(suite_, s.name, s.tolerance, s.conjecture));
    }

private:
    struct Slot {
        std::string name;
        double tolerance;
        bool conjecture;
        ResidualStats stats;
    };
    std::string suite_;
    std::map<std::string, std::size_t> index_;
    std::vector<Slot> slots_;
};

inline CounterRng stream_for(const SuiteConfig& cfg, Suite s, std::uint64_t index) {
    return CounterRng(cfg.seed, (static_cast<std::uint64_t>(s) << 40) | index);
}

inline double curvature_scale(const SuiteConfig& cfg) {
    return cfg.curvature.is_euclidean() ? 1.0 : cfg.curvature.scale();
}

/// Sampling bounds in units of the curvature scale.
inline SamplingConstraints scaled_constraints(double k) { return {1e-3, 10.0 * k, 1000}; }

/// Euclidean relations are similarity-invariant; measuring in units of k keeps them scale-free.
inline TriangleData in_units_of(TriangleData t, double k) {
    t.a /= k;
    t.b /= k;
    t.c /= k;
    return t;
}

inline std::string short_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

inline void run_spherical(const SuiteConfig& cfg, Collector& out) {
    const double k = curvature_scale(cfg);
    const Curvature geo = Curvature::spherical(k);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        CounterRng rng = stream_for(cfg, Suite::Spherical, i);
        out.add_all("", spherical_residuals(sample_triangle(geo, rng, scaled_constraints(k))), cfg.tolerance);

        // right triangle: legs along two orthogonal great circles through C
        const ModelPoint C = sphere_point(random_unit3(rng), k);
        const Vec3 c = head3(C.x);
        const Vec3 u = normalized(cross(c, random_unit3(rng)));
        const Vec3 v = normalized(cross(c, u));
        const double leg_a = k * rng.uniform(0.01, 0.5 * pi), leg_b = k * rng.uniform(0.01, 0.5 * pi);
        const ModelPoint B = point_along({C, extend(u)}, leg_a);
        const ModelPoint A = point_along({C, extend(v)}, leg_b);
        TriangleData t = measure_triangle(A, B, C, geo);
        out.add_all("right.", spherical_right_residuals(t), right_specialisation_tol);
        out.add_all("right.", spherical_residuals(t), right_specialisation_tol);
    }
}

inline void run_hyperbolic(const SuiteConfig& cfg, Collector& out) {
    const double k = curvature_scale(cfg);
    const Curvature geo = Curvature::hyperbolic(k);
    const SamplingConstraints cons = scaled_constraints(k);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        CounterRng rng = stream_for(cfg, Suite::Hyperbolic, i);
        out.add_all("", hyperbolic_residuals(sample_triangle(geo, rng, cons)), cfg.tolerance);
    }
}

inline void run_euclidean(const SuiteConfig& cfg, Collector& out) {
    const Curvature geo = Curvature::euclidean();
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        CounterRng rng = stream_for(cfg, Suite::Euclidean, i);
        const TriangleData t = sample_triangle(geo, rng);
        out.add_all("", euclidean_residuals(t), cfg.tolerance);
        out.add("angle_excess", angle_excess(t), cfg.tolerance);
    }
}

inline void run_sphere_model(const SuiteConfig& cfg, Collector& out) {
    const double k = curvature_scale(cfg);
    const std::size_t radius_checks = std::min(cfg.samples, max_effective_radius_checks);
    for (double rho_unit : sphere_radii) {
        const double rho = rho_unit * k;
        const std::string prefix = "rho_" + short_real(rho_unit) + ".";
        for (std::size_t i = 0; i < cfg.samples; ++i) {
            CounterRng rng = stream_for(cfg, Suite::SphereModel, (static_cast<std::uint64_t>(rho_unit * 1000) << 24) | i);
            const Lorentz place = random_isometry(rng, k, 1.0 * k);
            const GeodesicSphere sphere{place(hyperboloid_origin(k, 3)), rho};
            TriangleData t;
            std::array<Ray, 3> rays;
            for (int attempt = 0;; ++attempt) {
                if (attempt == 1000) fail(ErrorKind::Sampling, "no well-shaped ray triple found");
                for (auto& r : rays) r = place(Ray{hyperboloid_origin(k, 3), from_spatial(random_unit3(rng))});
                try {
                    t = geodesic_sphere_triangle(sphere, rays);
                } catch (const Error&) {
                    continue;
                }
                if (std::min({t.A, t.B, t.C, t.a, t.b, t.c}) >= 1e-3) break;
            }
            out.add_all(prefix, spherical_residuals(t), cfg.tolerance);
            if (i < radius_checks) {
                const ModelPoint p = point_along(rays[0], rho), q = point_along(rays[1], rho);
                const double length = geodesic_sphere_intrinsic_length(sphere, p, q);
                out.add(prefix + "effective_radius", length / k - std::sinh(rho / k) * t.c, effective_radius_tol);
            }
        }
    }
}

inline void run_horosphere(const SuiteConfig& cfg, Collector& out) {
    const double k = curvature_scale(cfg);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        CounterRng rng = stream_for(cfg, Suite::Horosphere, i);
        const double height = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
        TriangleData t;
        for (int attempt = 0;; ++attempt) {
            if (attempt == 1000) fail(ErrorKind::Sampling, "no well-shaped horosphere triangle found");
            std::array<Vec<2>, 3> p;
            for (auto& x : p) x = {height * rng.uniform(-2.0, 2.0), height * rng.uniform(-2.0, 2.0)};
            try {
                t = horosphere_triangle(height, p[0], p[1], p[2], k);
            } catch (const Error&) {
                continue;
            }
            if (std::min({t.A, t.B, t.C}) >= 1e-3) break;
        }
        out.add("angle_sum", angle_excess(t), cfg.tolerance);
        out.add_all("", euclidean_residuals(in_units_of(t, k)), horosphere_lengths_tol);
    }
}

inline void run_prism(const SuiteConfig& cfg, Collector& out) {
    const double k = curvature_scale(cfg);
    const Curvature geo = Curvature::hyperbolic(k);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        CounterRng rng = stream_for(cfg, Suite::Prism, i);
        TriangleData right;
        right.geometry = geo;
        right.a = k * rng.uniform(0.05, 4.0);
        right.b = k * rng.uniform(0.05, 4.0);
        right.C = half_pi;
        const PrismFigure f = build_prism(right, random_isometry(rng, k, 0.5 * k));
        out.add("right_angle_at_m", f.spherical.C - half_pi, prism_tol);
        out.add("horosphere_right_angle", f.horospherical.C - half_pi, prism_tol);
        out.add("ideal_point_defect", f.ideal_defect, ideal_point_tol);
        out.add("coplanarity_defect", f.coplanarity_defect, ideal_point_tol);
        out.add_all("kmn.", spherical_right_residuals(f.spherical), cfg.tolerance);
        out.add_all("horosphere.", euclidean_residuals(in_units_of(f.horospherical, k)), horosphere_lengths_tol);
        const TriangleData replay = replay_hyperbolic(f);
        out.add_all("replay.", hyperbolic_residuals(replay), prism_tol);
        const double gap = std::max({std::fabs(replay.a - f.base.a) / k, std::fabs(replay.b - f.base.b) / k,
                                     std::fabs(replay.c - f.base.c) / k, std::fabs(replay.A - f.base.A),
                                     std::fabs(replay.B - f.base.B), std::fabs(replay.C - f.base.C)});
        out.add("replay.base_gap", gap, prism_tol);
    }
}

inline void run_substitution(const SuiteConfig& cfg, Collector& out) {
    const double k = curvature_scale(cfg);
    const Curvature geo = Curvature::hyperbolic(k);
    const SamplingConstraints cons = scaled_constraints(k);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        CounterRng rng = stream_for(cfg, Suite::Substitution, i);
        const TriangleData t = sample_triangle(geo, rng, cons);
        for (const auto& r : imaginary_substitution_residuals(t))
            out.add("substituted_" + std::string(to_string(r.relation)), std::abs(r.residual), cfg.tolerance);
    }
}

/// Random Euclidean shape with every angle at least 0.1 rad.
inline std::array<double, 3> random_shape(CounterRng& rng) {
    for (;;) {
        const double A = rng.uniform(0.1, pi), B = rng.uniform(0.1, pi);
        const double C = pi - A - B;
        if (C >= 0.1) return {A, B, C};
    }
}

inline void run_limits(const SuiteConfig& cfg, Collector& out) {
    const double k = curvature_scale(cfg);
    const std::vector<double> scales{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
    for (std::size_t i = 0; i < limit_shapes; ++i) {
        CounterRng rng = stream_for(cfg, Suite::Limits, i);
        const auto shape = random_shape(rng);
        for (const Curvature geo : {Curvature::hyperbolic(k), Curvature::spherical(k)}) {
            const std::string prefix(to_string(geo.kind()));
            const LimitFit fit = euclidean_limit_slope(geo, shape, scales);
            out.add(prefix + ".excess_slope_error", fit.slope - 2.0, slope_tol);
            const LimitFit tiny = euclidean_limit_slope(geo, shape, {1e-4, 1e-6});
            out.add(prefix + ".excess_at_1e-6", tiny.residual_norms.back(), limit_excess_tol);
        }
    }
    const std::size_t rescale_samples = std::min<std::size_t>(cfg.samples, 1000);
    for (std::size_t i = 0; i < rescale_samples; ++i) {
        CounterRng rng = stream_for(cfg, Suite::Limits, (1ULL << 32) | i);
        const double lambda = std::exp(rng.uniform(std::log(1e-3), std::log(1e6)));
        for (const Curvature geo : {Curvature::hyperbolic(k), Curvature::spherical(k)}) {
            const RescalingReport r = rescaling_check(sample_triangle(geo, rng, scaled_constraints(k)), lambda, rescaling_tol);
            out.add(std::string(to_string(geo.kind())) + ".rescaling",
                    *std::max_element(r.deviations.begin(), r.deviations.end()), rescaling_tol);
        }
    }
}

/// Cone-interior point with weights bounded away from zero.
inline ModelPoint random_interior(const std::array<ModelPoint, 3>& v, CounterRng& rng) {
    std::array<double, 3> w{rng.uniform(0.05, 1.0), rng.uniform(0.05, 1.0), rng.uniform(0.05, 1.0)};
    const double s = w[0] + w[1] + w[2];
    Vec3 h{};
    for (int i = 0; i < 3; ++i) h = h + (w[i] / s) * homogeneous(v[i]);
    return from_homogeneous(h, v[0]);
}

inline void run_cevians(const SuiteConfig& cfg, Collector& out) {
    const double k = curvature_scale(cfg);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        CounterRng rng = stream_for(cfg, Suite::Cevians, i);
        {
            const auto s = sample_triangle_points(Curvature::euclidean(), rng);
            const auto c = cevian_feet(Curvature::euclidean(), s.vertices[0], s.vertices[1], s.vertices[2],
                                       random_interior(s.vertices, rng));
            out.add("euclidean_euler", euclidean_cevian_residual(c), cfg.tolerance);
        }
        {
            const Curvature geo = Curvature::spherical(k);
            const auto s = sample_triangle_points(geo, rng, scaled_constraints(k));
            const auto c = cevian_feet(geo, s.vertices[0], s.vertices[1], s.vertices[2], random_interior(s.vertices, rng));
            out.add("spherical_euler_tan", spherical_cevian_residual(c), cfg.tolerance);
        }
        {
            const Curvature geo = Curvature::hyperbolic(k);
            const auto s = sample_triangle_points(geo, rng, scaled_constraints(k));
            const auto c = cevian_feet(geo, s.vertices[0], s.vertices[1], s.vertices[2], random_interior(s.vertices, rng));
            out.add("hyperbolic_euler_tanh_conjecture", hyperbolic_cevian_conjecture_residual(c), cfg.tolerance, true);
        }
    }
}

inline void run_one(Suite s, const SuiteConfig& cfg, std::vector<ResidualEntry>& entries) {
    Collector out{std::string(to_string(s))};
    switch (s) {
        case Suite::Spherical: run_spherical(cfg, out); break;
        case Suite::Hyperbolic: run_hyperbolic(cfg, out); break;
        case Suite::Euclidean: run_euclidean(cfg, out); break;
        case Suite::SphereModel: run_sphere_model(cfg, out); break;
        case Suite::Horosphere: run_horosphere(cfg, out); break;
        case Suite::Prism: run_prism(cfg, out); break;
        case Suite::Substitution: run_substitution(cfg, out); break;
        case Suite::Limits: run_limits(cfg, out); break;
        case Suite::Cevians: run_cevians(cfg, out); break;
        case Suite::All: break;
    }
    out.append_to(entries);
}

}  // namespace detail

/// Runs a verification suite. Sample i of a suite always draws from generator
/// stream i, so the report depends only on the configuration.
inline ResidualReport run_suite(Suite suite, const SuiteConfig& cfg) {
    if (cfg.samples < 1) fail(ErrorKind::Precondition, "samples must be at least 1");
    if (!(cfg.tolerance > 0.0)) fail(ErrorKind::Precondition, "tolerance must be positive");
    const auto start = std::chrono::steady_clock::now();
    ResidualReport report;
    report.suite = std::string(to_string(suite));
    report.seed = cfg.seed;
    report.samples = cfg.samples;
    report.tolerance = cfg.tolerance;
    if (suite == Suite::All) {
        for (Suite s : all_suites) detail::run_one(s, cfg, report.entries);
    } else {
        detail::run_one(suite, cfg, report.entries);
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace lob
