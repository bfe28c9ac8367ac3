#pragma once

#include <optional>

#include "starkit/polygon.hpp"

namespace starkit {

// Empty or one simple polygon. Kernels and star intersections are convex,
// hence simply connected, so one loop suffices; when a chart intersection
// comes out disconnected we keep the largest component and set the flag,
// which downstream checks treat as a failure to investigate.
struct Region {
    std::optional<GeodesicPolygon> polygon;
    bool multi_component = false;

    bool empty() const { return !polygon.has_value(); }

    static Region empty_region() { return Region{}; }
    static Region of(GeodesicPolygon p) { return Region{std::move(p), false}; }
};

// P intersected with a closed geodesic half-plane.
Region clip_halfplane(const GeodesicPolygon& p, const HalfPlane& h, double eps = tol::eps_on());
Region clip_halfplane(const Region& r, const HalfPlane& h, double eps = tol::eps_on());

// Clip a chart-convex polygon by a half-plane (Sutherland-Hodgman). The
// result of a convex clip is convex and never disconnects.
Region clip_convex(const GeodesicPolygon& convex, const HalfPlane& h, double eps = tol::eps_on());

// Set intersection. Iterated half-plane clipping when one operand is convex,
// generic boundary-fragment tracing otherwise.
Region intersect_regions(const Region& r1, const Region& r2, double eps = tol::eps_on());

// Symmetric Hausdorff distance estimated from boundary samples, measured with
// the metric distance (distance to the other region is zero for points it
// contains). Exactly one empty operand gives +inf; two empty give 0.
double hausdorff(const Region& r1, const Region& r2, int n_samples = 256);

// Metric distance from a point to the boundary of a polygon.
double metric_dist_to_boundary(const GeodesicPolygon& p, const Point& q);

}  // namespace starkit
