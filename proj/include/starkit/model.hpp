#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "starkit/rng.hpp"
#include "starkit/tolerance.hpp"
#include "starkit/vec2.hpp"

namespace starkit {

// The two shipped constant-curvature surfaces. Both expose a global chart in
// which geodesics are straight lines: the identity chart for the Euclidean
// plane, the Beltrami-Klein disk for the hyperbolic plane.
enum class Model { Euclidean, HyperbolicKlein };

std::string_view to_string(Model m);
std::optional<Model> model_from_string(std::string_view s);

struct Point {
    Model model = Model::Euclidean;
    Vec2 pos;
};

// Validates the chart domain: finite coordinates, and for the Klein model
// u^2 + v^2 < 1 - tol::boundary. Throws DomainError.
Point make_point(Model model, double u, double v);
Point make_point(Model model, Vec2 pos);

bool same_point(const Point& a, const Point& b, double eps = tol::pt);

// Throws ModelMismatchError unless all operands share one model.
void require_same_model(const Point& a, const Point& b);

struct GeodesicSegment {
    Point a, b;
};

struct GeodesicRay {
    Point vertex, through;
};

struct Geodesic {
    Point p, q;  // two distinct anchors; the complete geodesic through them
};

GeodesicSegment make_segment(const Point& a, const Point& b);  // a != b
GeodesicRay make_ray(const Point& vertex, const Point& through);

enum class Side { Left, Right, On };

struct HalfPlane {
    Geodesic boundary;
    Side side;  // Left or Right of the directed boundary; closed set
};

double distance(const Point& p, const Point& q);
double length(const GeodesicSegment& s);

Geodesic geodesic_through(const Point& p, const Point& q);

// Chart-affine parameterization: t=0 -> a, t=1 -> b. Throws RangeError.
Point point_on(const GeodesicSegment& s, double t);

// Orientation of p relative to the directed chart line through g's anchors.
// |signed chart distance| <= eps reports On.
Side side_of(const Geodesic& g, const Point& p, double eps = tol::eps_on());

// Complete-geodesic intersection, returned only when inside the model domain.
// Coincident geodesics throw OverlapError.
std::optional<Point> intersect_geodesics(const Geodesic& g1, const Geodesic& g2);

// Proper crossings only: traces that merely touch (endpoint contact, grazing)
// return nullopt. Collinear overlap throws OverlapError.
std::optional<Point> intersect_segment_segment(const GeodesicSegment& s1,
                                               const GeodesicSegment& s2,
                                               double eps = tol::eps_on());
// For ray-segment, the hit nearest the ray vertex.
std::optional<Point> intersect_ray_segment(const GeodesicRay& r, const GeodesicSegment& s,
                                           double eps = tol::eps_on());

// Metric angle at p, measured counterclockwise from the geodesic toward a to
// the geodesic toward b; in [0, 2pi). Klein chart angles are not conformal,
// so the hyperbolic case contracts tangent vectors with the Klein metric.
double angle_at(const Point& p, const Point& a, const Point& b);

// Rigid motion, stored as a 3x3 matrix acting projectively on (1, u, v):
// an affine map for the Euclidean plane, a Lorentz element for the Klein disk.
struct Isometry {
    Model model = Model::Euclidean;
    std::array<std::array<double, 3>, 3> m;
};

Isometry identity_isometry(Model model);
Isometry euclidean_isometry(double angle, Vec2 translation);
Isometry klein_rotation(double angle);
Isometry klein_translation(double rapidity);  // boost along the u-axis
Isometry compose(const Isometry& f, const Isometry& g);  // f after g

// Image point; Klein images that land outside the disk margin are rejected
// with DomainError rather than clamped.
Point apply_isometry(const Isometry& iso, const Point& p);

// Random rotation+translation (Euclidean) or rotation*boost*rotation (Klein).
// |max_shift| bounds the translation / boost rapidity.
Isometry random_isometry(Model model, Rng& rng, double max_shift = 0.3);

}  // namespace starkit
