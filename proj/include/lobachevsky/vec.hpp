#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace lob {

template <std::size_t N>
using Vec = std::array<double, N>;

using Vec3 = Vec<3>;
using Vec4 = Vec<4>;

template <std::size_t N>
constexpr Vec<N> operator+(const Vec<N>& x, const Vec<N>& y) {
    Vec<N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = x[i] + y[i];
    return r;
}

template <std::size_t N>
constexpr Vec<N> operator-(const Vec<N>& x, const Vec<N>& y) {
    Vec<N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = x[i] - y[i];
    return r;
}

template <std::size_t N>
constexpr Vec<N> operator*(double s, const Vec<N>& x) {
    Vec<N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = s * x[i];
    return r;
}

template <std::size_t N>
constexpr double dot(const Vec<N>& x, const Vec<N>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += x[i] * y[i];
    return s;
}

template <std::size_t N>
double norm(const Vec<N>& x) {
    return std::sqrt(dot(x, x));
}

template <std::size_t N>
Vec<N> normalized(const Vec<N>& x) {
    return (1.0 / norm(x)) * x;
}

constexpr Vec3 cross(const Vec3& x, const Vec3& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

constexpr double triple(const Vec3& x, const Vec3& y, const Vec3& z) { return dot(x, cross(y, z)); }

/// Unsigned angle between two nonzero vectors, accurate near 0 and pi.
template <std::size_t N>
double angle_between(const Vec<N>& x, const Vec<N>& y) {
    const auto u = normalized(x), v = normalized(y);
    return 2.0 * std::atan2(norm(u - v), norm(u + v));
}

/// Minkowski product with signature (+, -, -, -).
constexpr double minkowski(const Vec4& x, const Vec4& y) {
    return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

constexpr Vec3 spatial(const Vec4& x) { return {x[1], x[2], x[3]}; }
constexpr Vec3 head3(const Vec4& x) { return {x[0], x[1], x[2]}; }
constexpr Vec4 extend(const Vec3& x, double w = 0.0) { return {x[0], x[1], x[2], w}; }
constexpr Vec4 from_spatial(const Vec3& s, double t = 0.0) { return {t, s[0], s[1], s[2]}; }

/// 3x3 solve by Cramer's rule: columns c0, c1, c2, right-hand side r.
inline Vec3 solve3(const Vec3& c0, const Vec3& c1, const Vec3& c2, const Vec3& r) {
    const double det = triple(c0, c1, c2);
    return {triple(r, c1, c2) / det, triple(c0, r, c2) / det, triple(c0, c1, r) / det};
}

}  // namespace lob
