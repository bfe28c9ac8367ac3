#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "starkit/region.hpp"

namespace starkit {

// The star of A at p as a first-exit radial sweep around p, plus the derived
// polygon (boundary arcs of A alternating with window segments on geodesics
// through p). Breakpoints are the polygon corners in polar form around p.
struct RadialStar {
    Point center;
    struct Breakpoint {
        double theta;   // chart direction angle at the center
        double t_exit;  // chart distance from the center to the exit point
        int edge;       // boundary edge achieving the exit
    };
    std::vector<Breakpoint> breakpoints;
    GeodesicPolygon polygon;
};

struct ExtremeSet {
    std::vector<int> indices;           // vertices classified extreme
    std::vector<double> interior_angles;  // all vertices, by index
};

// true iff the chord [pq] never enters the exterior: all boundary crossings
// are collected, sorted along the segment, and each sub-interval midpoint is
// classified. No sampling. Preconditions: p, q not Exterior.
bool sees(const GeodesicPolygon& a, const Point& p, const Point& q, double eps = tol::eps_on());

// First exterior sub-interval along [pq]: its endpoints lie on the boundary
// and the open interval between them misses A. nullopt when [pq] is in A.
std::optional<std::pair<Point, Point>> gap_points(const GeodesicPolygon& a, const Point& p,
                                                  const Point& q, double eps = tol::eps_on());

// Angular first-exit sweep. Interior centers sweep the full circle; boundary
// centers (vertices or edge points) sweep the interior angular cone.
// Throws PreconditionError for exterior centers.
RadialStar star(const GeodesicPolygon& a, const Point& p, double eps = tol::eps_on());

// Vertices with metric interior angle < pi - tol::angle. Non-empty for any
// valid polygon.
ExtremeSet extreme_points(const GeodesicPolygon& a);

// B = A intersected with the stars at its extreme vertices.
Region kernel_extreme(const GeodesicPolygon& a, double eps = tol::eps_on());

// Classical half-plane kernel: intersection of every edge's inner closed
// half-plane, computed by iterated convex clipping from a bounding region.
Region kernel_halfplane(const GeodesicPolygon& a, double eps = tol::eps_on());

struct StarshapedResult {
    bool starshaped = false;
    std::optional<Point> witness;  // chart centroid of the kernel when non-empty
};
StarshapedResult is_starshaped(const GeodesicPolygon& a, double eps = tol::eps_on());

// The vertex maximizing metric distance to an exterior point p; ties broken
// by lowest vertex index. The maximum over a geodesic polygon is attained at
// a vertex because distance to a point is convex along geodesics here.
Point farthest_extreme(const GeodesicPolygon& a, const Point& p, double eps = tol::eps_on());
int farthest_extreme_index(const GeodesicPolygon& a, const Point& p, double eps = tol::eps_on());

// Nearest intersection of the chart ray from x in direction theta with A.
// Points already in A hit at distance zero.
std::optional<std::pair<Point, double>> ray_hits(const GeodesicPolygon& a, const Point& x,
                                                 double theta, double eps = tol::eps_on());

struct RayConditionResult {
    bool holds = false;
    double theta = 0.0;  // witness direction
};
// Literal predicate: a geodesic ray from exterior x meeting A. Aiming at any
// vertex always succeeds for non-empty A, so this is trivially true; the
// certifier records that and treats B != empty as the operative certificate.
RayConditionResult ray_condition(const GeodesicPolygon& a, const Point& x);

struct CertifyOptions {
    int n_probes = 32;
    double eps = tol::eps_on();
    std::uint64_t seed = 0x5741524b1d5eedull;
    int oracle_resolution = 64;
    bool run_oracle = true;
    Vec2 fault_shift{0.0, 0.0};  // harness self-test: translates B before checks
};

struct CertReport {
    ExtremeSet extreme;
    Region b;  // intersection of stars at extreme points, within A
    struct Probe {
        Point x;
        bool ok;
        double theta;
    };
    std::vector<Probe> ray_checks;
    bool ray_condition_trivial = true;  // literal predicate holds for any non-empty A
    bool starshaped = false;
    Region kernel;
    Region halfplane_kernel;
    double hausdorff_b_vs_halfplane = 0.0;
    bool oracle_agrees = true;
    double oracle_max_violation = 0.0;
    double oracle_grid_step = 0.0;
    int oracle_kept = 0;        // brute kernel grid points
    int oracle_deep_nodes = 0;  // B-interior grid nodes beyond one step of clearance
    bool flagged_multi_component = false;
};

// Full certification: extreme points, B, ray probes at random exterior
// points, verdict, and cross-checks against the half-plane kernel and the
// brute-force oracle. Disagreements are reported, never suppressed.
CertReport certify(const GeodesicPolygon& a, const CertifyOptions& opts = {});

}  // namespace starkit
