#include "starkit/model.hpp"

#include <algorithm>
#include <cmath>

#include "starkit/error.hpp"

namespace starkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Vec3 {
    double x0, x1, x2;
};

// Lift a Klein chart point onto the hyperboloid sheet x0 > 0 of
// <X,X> = -1 in the (-,+,+) Minkowski signature.
Vec3 klein_lift(Vec2 p) {
    const double s = std::sqrt(1.0 - norm_sq(p));
    return {1.0 / s, p.u / s, p.v / s};
}

// Klein metric tensor contracted with chart tangent vectors at p.
double klein_inner(Vec2 p, Vec2 x, Vec2 y) {
    const double w = 1.0 - norm_sq(p);
    return dot(x, y) / w + dot(p, x) * dot(p, y) / (w * w);
}

bool finite(Vec2 p) { return std::isfinite(p.u) && std::isfinite(p.v); }

}  // namespace

std::string_view to_string(Model m) {
    return m == Model::Euclidean ? "euclidean" : "hyperbolic-klein";
}

std::optional<Model> model_from_string(std::string_view s) {
    if (s == "euclidean") return Model::Euclidean;
    if (s == "hyperbolic-klein") return Model::HyperbolicKlein;
    return std::nullopt;
}

Point make_point(Model model, Vec2 pos) {
    if (!finite(pos)) throw DomainError("non-finite chart coordinates");
    if (model == Model::HyperbolicKlein && norm_sq(pos) >= 1.0 - tol::boundary) {
        throw DomainError("point outside the Klein disk margin");
    }
    return Point{model, pos};
}

Point make_point(Model model, double u, double v) { return make_point(model, Vec2{u, v}); }

bool same_point(const Point& a, const Point& b, double eps) {
    return a.model == b.model && chart_dist(a.pos, b.pos) <= eps;
}

void require_same_model(const Point& a, const Point& b) {
    if (a.model != b.model) throw ModelMismatchError("mixed-model operands");
}

GeodesicSegment make_segment(const Point& a, const Point& b) {
    require_same_model(a, b);
    if (chart_dist(a.pos, b.pos) <= tol::pt) throw DegenerateError("degenerate segment anchors");
    return GeodesicSegment{a, b};
}

GeodesicRay make_ray(const Point& vertex, const Point& through) {
    require_same_model(vertex, through);
    if (chart_dist(vertex.pos, through.pos) <= tol::pt) {
        throw DegenerateError("degenerate ray anchors");
    }
    return GeodesicRay{vertex, through};
}

double distance(const Point& p, const Point& q) {
    require_same_model(p, q);
    if (p.model == Model::Euclidean) return chart_dist(p.pos, q.pos);
    // Hyperboloid lift; 2 asinh(|P-Q|_M / 2) is the cancellation-safe form of
    // cosh d = -<P,Q>.
    const Vec3 a = klein_lift(p.pos);
    const Vec3 b = klein_lift(q.pos);
    const double d0 = a.x0 - b.x0, d1 = a.x1 - b.x1, d2 = a.x2 - b.x2;
    const double m2 = d1 * d1 + d2 * d2 - d0 * d0;
    return 2.0 * std::asinh(0.5 * std::sqrt(std::max(m2, 0.0)));
}

double length(const GeodesicSegment& s) { return distance(s.a, s.b); }

Geodesic geodesic_through(const Point& p, const Point& q) {
    require_same_model(p, q);
    if (chart_dist(p.pos, q.pos) <= tol::pt) throw DegenerateError("degenerate geodesic anchors");
    return Geodesic{p, q};
}

Point point_on(const GeodesicSegment& s, double t) {
    if (t < 0.0 || t > 1.0) throw RangeError("segment parameter outside [0,1]");
    return Point{s.a.model, s.a.pos + t * (s.b.pos - s.a.pos)};
}

Side side_of(const Geodesic& g, const Point& p, double eps) {
    require_same_model(g.p, p);
    const Vec2 d = g.q.pos - g.p.pos;
    const double len = norm(d);
    if (len <= tol::pt) throw DegenerateError("degenerate geodesic");
    const double s = cross(d, p.pos - g.p.pos) / len;  // signed chart distance
    if (std::fabs(s) <= eps) return Side::On;
    return s > 0.0 ? Side::Left : Side::Right;
}

std::optional<Point> intersect_geodesics(const Geodesic& g1, const Geodesic& g2) {
    require_same_model(g1.p, g2.p);
    const Vec2 d1 = g1.q.pos - g1.p.pos;
    const Vec2 d2 = g2.q.pos - g2.p.pos;
    const double denom = cross(d1, d2);
    if (std::fabs(denom) <= 1e-14 * norm(d1) * norm(d2)) {
        if (side_of(g1, g2.p) == Side::On && side_of(g1, g2.q) == Side::On) {
            throw OverlapError("coincident geodesics");
        }
        return std::nullopt;  // parallel chords
    }
    const double t = cross(g2.p.pos - g1.p.pos, d2) / denom;
    const Vec2 x = g1.p.pos + t * d1;
    if (g1.p.model == Model::HyperbolicKlein && norm_sq(x) >= 1.0 - tol::boundary) {
        return std::nullopt;  // lines meet outside the disk
    }
    return Point{g1.p.model, x};
}

namespace {

// Signed chart distance of x from the directed line through a, b.
double line_side(Vec2 a, Vec2 b, Vec2 x) {
    const Vec2 d = b - a;
    return cross(d, x - a) / norm(d);
}

}  // namespace

std::optional<Point> intersect_segment_segment(const GeodesicSegment& s1,
                                               const GeodesicSegment& s2, double eps) {
    require_same_model(s1.a, s2.a);
    const Vec2 a = s1.a.pos, b = s1.b.pos, c = s2.a.pos, d = s2.b.pos;
    const double sc = line_side(a, b, c);
    const double sd = line_side(a, b, d);
    const double sa = line_side(c, d, a);
    const double sb = line_side(c, d, b);
    const bool collinear = std::fabs(sc) <= eps && std::fabs(sd) <= eps;
    if (collinear) {
        // Project s2 onto s1's parameter; more than a point of overlap is an error.
        const Vec2 dir = b - a;
        const double len2 = norm_sq(dir);
        double t0 = dot(c - a, dir) / len2;
        double t1 = dot(d - a, dir) / len2;
        if (t0 > t1) std::swap(t0, t1);
        const double lo = std::max(t0, 0.0), hi = std::min(t1, 1.0);
        if ((hi - lo) * std::sqrt(len2) > eps) throw OverlapError("collinear segment overlap");
        return std::nullopt;  // disjoint or touching at one point
    }
    const bool straddle1 = (sc > eps && sd < -eps) || (sc < -eps && sd > eps);
    const bool straddle2 = (sa > eps && sb < -eps) || (sa < -eps && sb > eps);
    if (!straddle1 || !straddle2) return std::nullopt;  // touch or miss, not a crossing
    const double denom = cross(b - a, d - c);
    const double t = cross(c - a, d - c) / denom;
    return Point{s1.a.model, a + t * (b - a)};
}

std::optional<Point> intersect_ray_segment(const GeodesicRay& r, const GeodesicSegment& s,
                                           double eps) {
    require_same_model(r.vertex, s.a);
    const Vec2 o = r.vertex.pos;
    const Vec2 dir = r.through.pos - o;
    const Vec2 c = s.a.pos, d = s.b.pos;
    const double sc = cross(dir, c - o) / norm(dir);
    const double sd = cross(dir, d - o) / norm(dir);
    if (std::fabs(sc) <= eps && std::fabs(sd) <= eps) {
        const double len2 = norm_sq(dir);
        double t0 = dot(c - o, dir) / len2;
        double t1 = dot(d - o, dir) / len2;
        if (t0 > t1) std::swap(t0, t1);
        const double hi = t1, lo = std::max(t0, 0.0);
        if ((hi - lo) * norm(dir) > eps) throw OverlapError("collinear ray-segment overlap");
        return std::nullopt;
    }
    const bool straddle = (sc > eps && sd < -eps) || (sc < -eps && sd > eps);
    if (!straddle) return std::nullopt;
    const double denom = cross(dir, d - c);
    const double t = cross(c - o, d - c) / denom;  // ray parameter, 1 at `through`
    if (t * norm(dir) < -eps) return std::nullopt;  // behind the vertex
    return Point{r.vertex.model, o + t * dir};
}

double angle_at(const Point& p, const Point& a, const Point& b) {
    require_same_model(p, a);
    require_same_model(p, b);
    const Vec2 xi = a.pos - p.pos;
    const Vec2 eta = b.pos - p.pos;
    if (norm(xi) <= tol::pt || norm(eta) <= tol::pt) {
        throw DegenerateError("angle at coincident points");
    }
    double c;
    if (p.model == Model::Euclidean) {
        c = dot(xi, eta) / (norm(xi) * norm(eta));
    } else {
        const double g = klein_inner(p.pos, xi, eta);
        c = g / std::sqrt(klein_inner(p.pos, xi, xi) * klein_inner(p.pos, eta, eta));
    }
    c = std::clamp(c, -1.0, 1.0);
    const double unsigned_angle = std::acos(c);
    // Counterclockwise from xi to eta; the chart preserves orientation.
    return cross(xi, eta) >= 0.0 ? unsigned_angle : 2.0 * kPi - unsigned_angle;
}

Isometry identity_isometry(Model model) {
    Isometry iso{model, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
    return iso;
}

Isometry euclidean_isometry(double angle, Vec2 translation) {
    const double c = std::cos(angle), s = std::sin(angle);
    return Isometry{Model::Euclidean,
                    {{{1, 0, 0}, {translation.u, c, -s}, {translation.v, s, c}}}};
}

Isometry klein_rotation(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return Isometry{Model::HyperbolicKlein, {{{1, 0, 0}, {0, c, -s}, {0, s, c}}}};
}

Isometry klein_translation(double rapidity) {
    const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
    return Isometry{Model::HyperbolicKlein, {{{ch, sh, 0}, {sh, ch, 0}, {0, 0, 1}}}};
}

Isometry compose(const Isometry& f, const Isometry& g) {
    if (f.model != g.model) throw ModelMismatchError("mixed-model isometries");
    Isometry out{f.model, {}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += f.m[i][k] * g.m[k][j];
            out.m[i][j] = s;
        }
    }
    return out;
}

Point apply_isometry(const Isometry& iso, const Point& p) {
    if (iso.model != p.model) throw ModelMismatchError("isometry model mismatch");
    const double h[3] = {1.0, p.pos.u, p.pos.v};
    double w[3];
    for (int i = 0; i < 3; ++i) {
        w[i] = iso.m[i][0] * h[0] + iso.m[i][1] * h[1] + iso.m[i][2] * h[2];
    }
    return make_point(p.model, w[1] / w[0], w[2] / w[0]);
}

Isometry random_isometry(Model model, Rng& rng, double max_shift) {
    if (model == Model::Euclidean) {
        const double angle = rng.uniform(0.0, 2.0 * kPi);
        const Vec2 t{rng.uniform(-max_shift, max_shift), rng.uniform(-max_shift, max_shift)};
        return euclidean_isometry(angle, t);
    }
    const double a1 = rng.uniform(0.0, 2.0 * kPi);
    const double rap = rng.uniform(-max_shift, max_shift);
    const double a2 = rng.uniform(0.0, 2.0 * kPi);
    return compose(klein_rotation(a2), compose(klein_translation(rap), klein_rotation(a1)));
}

}  // namespace starkit
