#pragma once

#include <cmath>

namespace starkit {

// Chart coordinate vector. Both shipped models use a global chart in which
// geodesics are straight lines, so all incidence work happens on these.
struct Vec2 {
    double u = 0.0;
    double v = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.u + b.u, a.v + b.v}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.u - b.u, a.v - b.v}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.u, s * a.v}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.u, s * a.v}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.u / s, a.v / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.u * b.u + a.v * b.v; }
inline double cross(Vec2 a, Vec2 b) { return a.u * b.v - a.v * b.u; }
inline double norm_sq(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm_sq(a)); }
inline Vec2 perp(Vec2 a) { return {-a.v, a.u}; }

inline double chart_dist(Vec2 a, Vec2 b) { return norm(b - a); }

// Chart distance from p to the segment [a, b].
inline double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len2 = norm_sq(d);
    if (len2 == 0.0) return chart_dist(p, a);
    double t = dot(p - a, d) / len2;
    if (t < 0.0) t = 0.0;
    if (t > 1.0) t = 1.0;
    return chart_dist(p, a + t * d);
}

}  // namespace starkit
