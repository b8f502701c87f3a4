#pragma once

#include <array>
#include <cmath>

namespace looptree {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

// Positive for counter-clockwise vertex order.
inline double signed_area(Vec2 a, Vec2 b, Vec2 c) {
    return 0.5 * cross(b - a, c - a);
}

inline Vec2 triangle_centroid(Vec2 a, Vec2 b, Vec2 c) {
    return {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
}

// Gradient of the linear hat function that is 1 at `a` and 0 at `b`, `c`.
// The triangle (a, b, c) must be CCW.
inline Vec2 hat_gradient(Vec2 a, Vec2 b, Vec2 c) {
    double two_a = cross(b - a, c - a);
    return {(b.y - c.y) / two_a, (c.x - b.x) / two_a};
}

// Three-point Gauss rule on a triangle, exact for quadratics.
// Points in barycentric coordinates, weights sum to 1 (multiply by area).
struct TriQuadRule3 {
    static constexpr int npts = 3;
    static constexpr std::array<std::array<double, 3>, 3> bary = {{
        {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0},
        {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0},
        {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0},
    }};
    static constexpr std::array<double, 3> weight = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
};

inline Vec2 barycentric_point(const std::array<double, 3>& l, Vec2 a, Vec2 b, Vec2 c) {
    return {l[0] * a.x + l[1] * b.x + l[2] * c.x,
            l[0] * a.y + l[1] * b.y + l[2] * c.y};
}

}  // namespace looptree
