#include "starkit/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "starkit/error.hpp"

namespace starkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Height of x over the chord a->b; the collinearity measure used throughout.
double chord_height(Vec2 a, Vec2 b, Vec2 x) {
    const Vec2 d = b - a;
    const double len = norm(d);
    if (len == 0.0) return chart_dist(a, x);
    return std::fabs(cross(d, x - a)) / len;
}

bool proper_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps) {
    const Vec2 ab = b - a, cd = d - c;
    const double lab = norm(ab), lcd = norm(cd);
    if (lab <= eps || lcd <= eps) return false;
    const double sc = cross(ab, c - a) / lab;
    const double sd = cross(ab, d - a) / lab;
    const double sa = cross(cd, a - c) / lcd;
    const double sb = cross(cd, b - c) / lcd;
    return ((sc > eps && sd < -eps) || (sc < -eps && sd > eps)) &&
           ((sa > eps && sb < -eps) || (sa < -eps && sb > eps));
}

// Any contact between two segments, proper or touching, within an eps band.
bool segments_touch(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps) {
    if (proper_cross(a, b, c, d, eps)) return true;
    return dist_point_segment(c, a, b) <= eps || dist_point_segment(d, a, b) <= eps ||
           dist_point_segment(a, c, d) <= eps || dist_point_segment(b, c, d) <= eps;
}

}  // namespace

GeodesicPolygon make_polygon(Model model, std::vector<Vec2> vertices) {
    return GeodesicPolygon{model, std::move(vertices)};
}

std::vector<std::string> validate(const GeodesicPolygon& p) {
    std::vector<std::string> out;
    const int n = p.size();
    if (n < 3) {
        out.push_back("fewer than 3 vertices");
        return out;
    }
    const double eps = tol::eps_on();

    for (int i = 0; i < n; ++i) {
        const Vec2 v = p.vertices[i];
        if (!std::isfinite(v.u) || !std::isfinite(v.v)) {
            out.push_back("vertex " + std::to_string(i) + ": non-finite coordinates");
        } else if (p.model == Model::HyperbolicKlein && norm_sq(v) >= 1.0 - tol::boundary) {
            out.push_back("vertex " + std::to_string(i) + ": outside the Klein disk margin");
        }
    }
    if (!out.empty()) return out;

    for (int i = 0; i < n; ++i) {
        if (chart_dist(p.vertex(i), p.vertex(i + 1)) <= eps) {
            out.push_back("vertices " + std::to_string(i) + "," + std::to_string(p.wrap(i + 1)) +
                          ": coincident");
        }
    }
    if (!out.empty()) return out;

    for (int i = 0; i < n; ++i) {
        if (chord_height(p.vertex(i), p.vertex(i + 2), p.vertex(i + 1)) <= eps) {
            out.push_back("vertices " + std::to_string(i) + ".." + std::to_string(p.wrap(i + 2)) +
                          ": collinear");
        }
    }

    if (chart_area(p) <= 0.0) out.push_back("orientation: not counterclockwise");

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_touch(p.vertex(i), p.vertex(i + 1), p.vertex(j), p.vertex(j + 1), eps)) {
                out.push_back("edges " + std::to_string(i) + "," + std::to_string(j) +
                              ": intersect");
            }
        }
    }
    // Adjacent edges folding back onto each other (zero-angle spikes).
    for (int i = 0; i < n; ++i) {
        const Vec2 a = p.vertex(i), b = p.vertex(i + 1), c = p.vertex(i + 2);
        if (chord_height(b, c, a) <= eps && dot(a - b, c - b) > 0.0) {
            out.push_back("edges " + std::to_string(i) + "," + std::to_string(p.wrap(i + 1)) +
                          ": fold back");
        }
    }
    return out;
}

ContainmentClass contains(const GeodesicPolygon& p, Vec2 q, double eps) {
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        if (dist_point_segment(q, p.vertex(i), p.vertex(i + 1)) <= eps) {
            return ContainmentClass::Boundary;
        }
    }
    // Crossing parity along +u; the half-open rule handles vertices on the
    // scan line consistently, and the boundary band already caught near hits.
    bool inside = false;
    for (int i = 0; i < n; ++i) {
        const Vec2 a = p.vertex(i), b = p.vertex(i + 1);
        if ((a.v > q.v) != (b.v > q.v)) {
            const double xc = a.u + (q.v - a.v) / (b.v - a.v) * (b.u - a.u);
            if (xc > q.u) inside = !inside;
        }
    }
    return inside ? ContainmentClass::Interior : ContainmentClass::Exterior;
}

ContainmentClass contains(const GeodesicPolygon& p, const Point& q, double eps) {
    if (q.model != p.model) throw ModelMismatchError("containment model mismatch");
    return contains(p, q.pos, eps);
}

double interior_angle(const GeodesicPolygon& p, int i) {
    if (i < 0 || i >= p.size()) throw RangeError("vertex index out of range");
    return angle_at(p.point(i), p.point(i + 1), p.point(i - 1));
}

double chart_area(const GeodesicPolygon& p) {
    double s = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        s += cross(p.vertex(i), p.vertex(i + 1));
    }
    return 0.5 * s;
}

double metric_area(const GeodesicPolygon& p) {
    if (p.model == Model::Euclidean) return chart_area(p);
    // Gauss-Bonnet for a geodesic polygon at curvature -1.
    double angle_sum = 0.0;
    for (int i = 0; i < p.size(); ++i) angle_sum += interior_angle(p, i);
    return (p.size() - 2) * kPi - angle_sum;
}

double chart_perimeter(const GeodesicPolygon& p) {
    double s = 0.0;
    for (int i = 0; i < p.size(); ++i) s += chart_dist(p.vertex(i), p.vertex(i + 1));
    return s;
}

Bbox chart_bbox(const GeodesicPolygon& p) {
    Bbox b{{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()},
           {std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()}};
    for (const Vec2& v : p.vertices) {
        b.lo.u = std::min(b.lo.u, v.u);
        b.lo.v = std::min(b.lo.v, v.v);
        b.hi.u = std::max(b.hi.u, v.u);
        b.hi.v = std::max(b.hi.v, v.v);
    }
    return b;
}

bool is_chart_convex(const GeodesicPolygon& p, double eps) {
    for (int i = 0; i < p.size(); ++i) {
        const Vec2 a = p.vertex(i), b = p.vertex(i + 1), c = p.vertex(i + 2);
        const double h = cross(b - a, c - b) / std::max(norm(b - a), tol::pt);
        if (h < -eps) return false;
    }
    return true;
}

}  // namespace starkit
