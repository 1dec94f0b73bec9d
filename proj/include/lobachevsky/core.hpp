#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>

#include "error.hpp"

namespace lob {

inline constexpr double pi = std::numbers::pi;
inline constexpr double half_pi = std::numbers::pi / 2;

enum class GeometryKind { Spherical, Euclidean, Hyperbolic };

inline constexpr std::string_view to_string(GeometryKind g) noexcept {
    switch (g) {
        case GeometryKind::Spherical: return "spherical";
        case GeometryKind::Euclidean: return "euclidean";
        case GeometryKind::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

/// Signed sectional curvature K = +1/k^2, 0 or -1/k^2, carried with its length scale k.
class Curvature {
public:
    static Curvature spherical(double k = 1.0) { return {GeometryKind::Spherical, k}; }
    static Curvature hyperbolic(double k = 1.0) { return {GeometryKind::Hyperbolic, k}; }
    static Curvature euclidean() { return {}; }
    static Curvature of(GeometryKind kind, double k = 1.0) {
        return kind == GeometryKind::Euclidean ? euclidean() : Curvature(kind, k);
    }

    GeometryKind kind() const noexcept { return kind_; }
    bool is_euclidean() const noexcept { return kind_ == GeometryKind::Euclidean; }

    /// Length scale k; +inf for the Euclidean plane.
    double scale() const noexcept { return k_; }

    /// Gaussian curvature K.
    double gaussian() const noexcept {
        switch (kind_) {
            case GeometryKind::Spherical: return 1.0 / (k_ * k_);
            case GeometryKind::Hyperbolic: return -1.0 / (k_ * k_);
            case GeometryKind::Euclidean: break;
        }
        return 0.0;
    }

    /// Same geometry with the scale multiplied by lambda.
    Curvature rescaled(double lambda) const {
        return is_euclidean() ? *this : Curvature(kind_, k_ * lambda);
    }

    friend bool operator==(const Curvature&, const Curvature&) = default;

private:
    Curvature() : kind_(GeometryKind::Euclidean), k_(std::numeric_limits<double>::infinity()) {}
    Curvature(GeometryKind kind, double k) : kind_(kind), k_(k) {
        if (!(k > 0.0) || !std::isfinite(k))
            fail(ErrorKind::Domain, "curvature scale k must be positive and finite");
    }

    GeometryKind kind_;
    double k_;
};

/// Radians.
struct Angle {
    double value = 0.0;
    constexpr Angle() = default;
    constexpr explicit Angle(double radians) : value(radians) {}
    friend constexpr auto operator<=>(const Angle&, const Angle&) = default;
};

/// Nonnegative length in the same units as the curvature scale.
struct Length {
    double value = 0.0;
    constexpr Length() = default;
    explicit Length(double v) : value(v) {
        if (!std::isfinite(v) || v < 0.0) fail(ErrorKind::Domain, "length must be finite and nonnegative");
    }
    friend constexpr auto operator<=>(const Length&, const Length&) = default;
};

inline void require_hyperbolic(const Curvature& curv, const char* op) {
    if (curv.kind() != GeometryKind::Hyperbolic)
        fail(ErrorKind::Domain, std::string(op) + " requires hyperbolic curvature");
}

/// Angle of parallelism: sin(Pi) = 1 / cosh(p / k), Pi in (0, pi/2].
/// Evaluated as 2 atan(exp(-p/k)), which stays finite where cosh overflows.
inline Angle parallelism_angle(Length p, const Curvature& curv) {
    require_hyperbolic(curv, "parallelism_angle");
    if (p.value == 0.0) return Angle(half_pi);
    return Angle(2.0 * std::atan(std::exp(-p.value / curv.scale())));
}

/// Inverse of parallelism_angle: p = k arccosh(1 / sin Pi).
inline Length inverse_parallelism(Angle angle, const Curvature& curv) {
    require_hyperbolic(curv, "inverse_parallelism");
    const double t = angle.value;
    if (!(t > 0.0) || !(t <= half_pi))
        fail(ErrorKind::Domain, "parallelism angle must lie in (0, pi/2]");
    if (t == half_pi) return Length(0.0);
    // atanh(cos t) keeps relative accuracy near pi/2; -log(tan(t/2)) does near 0.
    const double x = t > 0.25 * pi ? std::atanh(std::cos(t)) : -std::log(std::tan(0.5 * t));
    return Length(curv.scale() * x);
}

// The identities below follow from sin Pi = 1/cosh with Pi acute. Relation
// evaluators use them directly instead of going through the angle.

inline double sin_parallelism(double p, double k) { return 1.0 / std::cosh(p / k); }
inline double cos_parallelism(double p, double k) { return std::tanh(p / k); }
inline double tan_parallelism(double p, double k) { return 1.0 / std::sinh(p / k); }

}  // namespace lob
