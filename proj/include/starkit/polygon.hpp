#pragma once

#include <string>
#include <vector>

#include "starkit/model.hpp"

namespace starkit {

// A compact set as a simple geodesic polygon: an implicitly closed,
// counterclockwise cycle of chart vertices. Edge i joins vertex i to
// vertex (i+1) mod n; edges are straight chords in the chart.
struct GeodesicPolygon {
    Model model = Model::Euclidean;
    std::vector<Vec2> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
    const Vec2& vertex(int i) const { return vertices[wrap(i)]; }
    Point point(int i) const { return Point{model, vertices[wrap(i)]}; }
    int wrap(int i) const {
        const int n = size();
        return ((i % n) + n) % n;
    }
};

GeodesicPolygon make_polygon(Model model, std::vector<Vec2> vertices);

// Diagnostic: every violation of simplicity, orientation, vertex collinearity
// and model-domain membership. Empty list means valid.
std::vector<std::string> validate(const GeodesicPolygon& p);

enum class ContainmentClass { Interior, Boundary, Exterior };

// Chart ray-crossing parity with a boundary band of width eps.
ContainmentClass contains(const GeodesicPolygon& p, Vec2 q, double eps = tol::eps_on());
ContainmentClass contains(const GeodesicPolygon& p, const Point& q, double eps = tol::eps_on());

// Metric interior angle at vertex i, in (0, 2pi); reflex iff > pi.
double interior_angle(const GeodesicPolygon& p, int i);

double chart_area(const GeodesicPolygon& p);  // signed; CCW > 0

// Metric area: chart shoelace for Euclidean, angle defect (Gauss-Bonnet)
// for the hyperbolic model.
double metric_area(const GeodesicPolygon& p);

double chart_perimeter(const GeodesicPolygon& p);

struct Bbox {
    Vec2 lo, hi;
    double width() const { return hi.u - lo.u; }
    double height() const { return hi.v - lo.v; }
};
Bbox chart_bbox(const GeodesicPolygon& p);

bool is_chart_convex(const GeodesicPolygon& p, double eps = tol::eps_on());

}  // namespace starkit
