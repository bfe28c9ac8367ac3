#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "starkit/polygon.hpp"

namespace starkit::detail {

// Every contact between the segment a->b and the segment c->d, as parameters
// on a->b: proper crossings, endpoint touches, and collinear overlap interval
// endpoints. The boolean/visibility machinery needs all of them; the public
// strict-crossing intersections live in model.cpp.
inline void append_contacts(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps,
                            std::vector<double>& params) {
    const Vec2 ab = b - a;
    const double len_ab = norm(ab);
    if (len_ab <= tol::pt) return;
    const double sc = cross(ab, c - a) / len_ab;
    const double sd = cross(ab, d - a) / len_ab;
    if (std::fabs(sc) <= eps && std::fabs(sd) <= eps) {
        const double len2 = len_ab * len_ab;
        double t0 = dot(c - a, ab) / len2;
        double t1 = dot(d - a, ab) / len2;
        if (t0 > t1) std::swap(t0, t1);
        const double lo = std::max(t0, 0.0), hi = std::min(t1, 1.0);
        if (hi >= lo - eps / len_ab) {
            params.push_back(std::clamp(lo, 0.0, 1.0));
            params.push_back(std::clamp(hi, 0.0, 1.0));
        }
        return;
    }
    const Vec2 cd = d - c;
    const double denom = cross(ab, cd);
    if (denom == 0.0) return;
    const double t = cross(c - a, cd) / denom;
    const double u = cross(c - a, ab) / denom;
    const double len_cd = norm(cd);
    if (t >= -eps / len_ab && t <= 1.0 + eps / len_ab && u >= -eps / len_cd &&
        u <= 1.0 + eps / len_cd) {
        params.push_back(std::clamp(t, 0.0, 1.0));
    }
}

inline void sort_unique_params(std::vector<double>& params, double param_eps) {
    std::sort(params.begin(), params.end());
    std::vector<double> out;
    for (double t : params) {
        if (out.empty() || t - out.back() > param_eps) out.push_back(t);
    }
    params.swap(out);
}

// Contacts of a->b with the whole boundary of A.
inline void boundary_contacts(const GeodesicPolygon& poly, Vec2 a, Vec2 b, double eps,
                              std::vector<double>& params) {
    for (int i = 0; i < poly.size(); ++i) {
        append_contacts(a, b, poly.vertex(i), poly.vertex(i + 1), eps, params);
    }
}

// Weld near-duplicate consecutive points and drop collinear run vertices.
inline std::vector<Vec2> simplify_chain(std::vector<Vec2> pts, double weld) {
    std::vector<Vec2> welded;
    for (const Vec2& p : pts) {
        if (welded.empty() || chart_dist(welded.back(), p) > weld) welded.push_back(p);
    }
    while (welded.size() >= 2 && chart_dist(welded.front(), welded.back()) <= weld) {
        welded.pop_back();
    }
    std::vector<Vec2> out;
    const int n = static_cast<int>(welded.size());
    for (int i = 0; i < n; ++i) {
        const Vec2 prev = welded[(i + n - 1) % n], cur = welded[i], next = welded[(i + 1) % n];
        const Vec2 d = next - prev;
        const double len = norm(d);
        const double h = len <= tol::pt ? 0.0 : std::fabs(cross(d, cur - prev)) / len;
        if (h > weld) out.push_back(cur);
    }
    return out;
}

}  // namespace starkit::detail
