#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "contact.hpp"
#include "starkit/oracle.hpp"
#include "starkit/rng.hpp"

// Per-item workers shared by the OpenMP and serial oracle drivers. Both
// drivers run exactly this code, so their outputs are identical; only the
// loop scheduling differs.

namespace starkit::oracle::detail {

// Exact chart visibility: crossing enumeration plus midpoint classification.
// The common cases are resolved per edge without divisions; touch and
// collinear contacts fall back to the full subdivision.
bool sees_exact_slow(const GeodesicPolygon& a, Vec2 p, Vec2 q, double eps,
                     std::vector<double>& scratch);

inline bool sees_exact(const GeodesicPolygon& a, Vec2 p, Vec2 q, double eps,
                       std::vector<double>& scratch) {
    const Vec2 ab = q - p;
    const double len = norm(ab);
    if (len <= 1e-15) return true;
    const double band = eps * len;
    const int n = a.size();
    for (int i = 0; i < n; ++i) {
        const Vec2 c = a.vertex(i), d = a.vertex(i + 1);
        const double sc = cross(ab, c - p);
        const double sd = cross(ab, d - p);
        const bool c_on = std::fabs(sc) <= band;
        const bool d_on = std::fabs(sd) <= band;
        if (c_on || d_on) {
            // A vertex grazes the chord line; only relevant inside the span.
            const double len2 = len * len;
            if (c_on) {
                const double t = dot(c - p, ab) / len2;
                if (t > eps / len && t < 1.0 - eps / len) {
                    return sees_exact_slow(a, p, q, eps, scratch);
                }
            }
            if (d_on) {
                const double t = dot(d - p, ab) / len2;
                if (t > eps / len && t < 1.0 - eps / len) {
                    return sees_exact_slow(a, p, q, eps, scratch);
                }
            }
            continue;
        }
        if ((sc > 0.0) == (sd > 0.0)) continue;  // edge does not straddle the chord line
        const Vec2 cd = d - c;
        const double lcd = norm(cd);
        const double band2 = eps * lcd;
        const double sa = cross(cd, p - c);
        const double sb = cross(cd, q - c);
        if (std::fabs(sa) <= band2 || std::fabs(sb) <= band2) {
            return sees_exact_slow(a, p, q, eps, scratch);
        }
        if ((sa > 0.0) != (sb > 0.0)) return false;  // proper crossing: the chord exits A
    }
    return true;
}

struct KernelSetup {
    Vec2 origin;
    double su = 0.0, sv = 0.0, step = 0.0;
    int nx = 0, ny = 0;
    std::vector<Vec2> targets;  // vertices, then boundary samples, shuffled
};

KernelSetup kernel_setup(const GeodesicPolygon& a, int resolution, int n_boundary_targets);

// 0 = not interior, 1 = interior but not kernel, 2 = kernel point.
inline std::uint8_t kernel_node(const GeodesicPolygon& a, const KernelSetup& s, int index,
                                double eps, std::vector<double>& scratch) {
    const int i = index % s.nx, j = index / s.nx;
    const Vec2 pos = s.origin + Vec2{i * s.su, j * s.sv};
    if (contains(a, pos, eps) != ContainmentClass::Interior) return 0;
    for (const Vec2& t : s.targets) {
        if (!sees_exact(a, pos, t, eps, scratch)) return 1;
    }
    return 2;
}

KernelGrid assemble_kernel_grid(const KernelSetup& s, const std::vector<std::uint8_t>& flags);

struct StarSetup {
    Vec2 center;
    double step = 0.0;
    int n_dirs = 0, n_steps = 0;
};

StarSetup star_setup(const GeodesicPolygon& a, Vec2 p, int n_dirs, int n_steps);

// First sample index classified Exterior while marching direction k; the ray
// has certainly left the bounding box by n_steps + 1.
inline int star_exit_index(const GeodesicPolygon& a, const StarSetup& s, int k, double eps) {
    const double theta = 2.0 * 3.14159265358979323846 * k / s.n_dirs;
    const Vec2 dir{std::cos(theta), std::sin(theta)};
    for (int j = 1; j <= s.n_steps + 1; ++j) {
        if (contains(a, s.center + (j * s.step) * dir, eps) == ContainmentClass::Exterior) {
            return j;
        }
    }
    return s.n_steps + 2;
}

std::vector<Vec2> assemble_star_samples(const StarSetup& s, const std::vector<int>& exit_idx);

}  // namespace starkit::oracle::detail
