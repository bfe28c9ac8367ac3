#include "starkit/star.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "contact.hpp"
#include "starkit/error.hpp"
#include "starkit/oracle.hpp"
#include "starkit/rng.hpp"

namespace starkit {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTau = 2.0 * kPi;
constexpr double kAngEps = 1e-12;
constexpr double kWeld = 1e-11;

double norm_angle(double a) {
    a = std::fmod(a, kTau);
    return a < 0.0 ? a + kTau : a;
}

void require_not_exterior(const GeodesicPolygon& a, const Point& p, double eps,
                          const char* what) {
    if (contains(a, p, eps) == ContainmentClass::Exterior) {
        throw PreconditionError(std::string(what) + ": point is exterior");
    }
}

}  // namespace

bool sees(const GeodesicPolygon& a, const Point& p, const Point& q, double eps) {
    require_not_exterior(a, p, eps, "sees");
    require_not_exterior(a, q, eps, "sees");
    if (chart_dist(p.pos, q.pos) <= tol::pt) return true;
    std::vector<double> params{0.0, 1.0};
    detail::boundary_contacts(a, p.pos, q.pos, eps, params);
    const double len = chart_dist(p.pos, q.pos);
    detail::sort_unique_params(params, std::max(0.25 * eps / len, 1e-14));
    for (std::size_t k = 0; k + 1 < params.size(); ++k) {
        if ((params[k + 1] - params[k]) * len <= kWeld) continue;
        const Vec2 mid = p.pos + (0.5 * (params[k] + params[k + 1])) * (q.pos - p.pos);
        if (contains(a, mid, eps) == ContainmentClass::Exterior) return false;
    }
    return true;
}

std::optional<std::pair<Point, Point>> gap_points(const GeodesicPolygon& a, const Point& p,
                                                  const Point& q, double eps) {
    require_not_exterior(a, p, eps, "gap_points");
    require_not_exterior(a, q, eps, "gap_points");
    if (chart_dist(p.pos, q.pos) <= tol::pt) return std::nullopt;
    std::vector<double> params{0.0, 1.0};
    detail::boundary_contacts(a, p.pos, q.pos, eps, params);
    const double len = chart_dist(p.pos, q.pos);
    detail::sort_unique_params(params, std::max(0.25 * eps / len, 1e-14));
    for (std::size_t k = 0; k + 1 < params.size(); ++k) {
        if ((params[k + 1] - params[k]) * len <= kWeld) continue;
        const Vec2 mid = p.pos + (0.5 * (params[k] + params[k + 1])) * (q.pos - p.pos);
        if (contains(a, mid, eps) == ContainmentClass::Exterior) {
            const Vec2 x = p.pos + params[k] * (q.pos - p.pos);
            const Vec2 y = p.pos + params[k + 1] * (q.pos - p.pos);
            return std::make_pair(Point{a.model, x}, Point{a.model, y});
        }
    }
    return std::nullopt;
}

namespace {

struct WedgeHit {
    double t = std::numeric_limits<double>::max();
    int edge = -1;
};

// Nearest transversal edge hit of the ray from o in direction dir, beyond eps.
WedgeHit first_hit(const GeodesicPolygon& a, Vec2 o, Vec2 dir, double eps) {
    WedgeHit best;
    for (int i = 0; i < a.size(); ++i) {
        const Vec2 c = a.vertex(i), d = a.vertex(i + 1);
        const Vec2 cd = d - c;
        const double denom = cross(dir, cd);
        if (std::fabs(denom) <= 1e-14 * norm(cd)) continue;
        const double t = cross(c - o, cd) / denom;
        const double u = cross(c - o, dir) / denom;
        const double eu = eps / norm(cd);
        if (u < -eu || u > 1.0 + eu) continue;
        if (t <= eps) continue;
        if (t < best.t || (t == best.t && i < best.edge)) {
            best.t = t;
            best.edge = i;
        }
    }
    return best;
}

// Ray at a wedge boundary angle intersected with the active edge's line. The
// hit is finite on the closed wedge; a parallel line means the wedge was
// degenerate, so nudge inward.
Vec2 ray_line_point(const GeodesicPolygon& a, Vec2 o, double theta, double nudge, int edge) {
    for (int attempt = 0; attempt < 4; ++attempt) {
        const double th = theta + attempt * nudge;
        const Vec2 dir{std::cos(th), std::sin(th)};
        const Vec2 c = a.vertex(edge), d = a.vertex(edge + 1);
        const double denom = cross(dir, d - c);
        if (std::fabs(denom) <= 1e-14 * norm(d - c)) continue;
        const double t = cross(c - o, d - c) / denom;
        if (t <= 0.0) continue;
        return o + t * dir;
    }
    // Fall back to the nearer edge endpoint along theta.
    const Vec2 c = a.vertex(edge), d = a.vertex(edge + 1);
    return chart_dist(o, c) < chart_dist(o, d) ? c : d;
}

}  // namespace

RadialStar star(const GeodesicPolygon& a, const Point& p, double eps) {
    if (p.model != a.model) throw ModelMismatchError("star model mismatch");
    const ContainmentClass cls = contains(a, p.pos, eps);
    if (cls == ContainmentClass::Exterior) throw PreconditionError("star: exterior center");

    const int n = a.size();
    const Vec2 o = p.pos;

    bool full_circle = cls == ContainmentClass::Interior;
    double cone_start = 0.0, cone_span = kTau;
    if (!full_circle) {
        int vi = -1;
        for (int i = 0; i < n; ++i) {
            if (chart_dist(a.vertex(i), o) <= eps) {
                vi = i;
                break;
            }
        }
        if (vi >= 0) {
            // Vertex center: sweep the interior angular cone.
            const Vec2 to_next = a.vertex(vi + 1) - a.vertex(vi);
            const Vec2 to_prev = a.vertex(vi - 1) - a.vertex(vi);
            cone_start = std::atan2(to_next.v, to_next.u);
            cone_span = norm_angle(std::atan2(to_prev.v, to_prev.u) - cone_start);
        } else {
            int ei = 0;
            double best = std::numeric_limits<double>::max();
            for (int i = 0; i < n; ++i) {
                const double d = dist_point_segment(o, a.vertex(i), a.vertex(i + 1));
                if (d < best) {
                    best = d;
                    ei = i;
                }
            }
            // Edge center: the interior is the left half-plane of the edge.
            const Vec2 d = a.vertex(ei + 1) - a.vertex(ei);
            cone_start = std::atan2(d.v, d.u);
            cone_span = kPi;
        }
    }

    // Event offsets: directions toward every vertex, within the cone.
    std::vector<double> offs;
    if (!full_circle) {
        offs.push_back(0.0);
        offs.push_back(cone_span);
    }
    for (int i = 0; i < n; ++i) {
        const Vec2 w = a.vertex(i) - o;
        if (norm(w) <= eps) continue;
        double off = norm_angle(std::atan2(w.v, w.u) - cone_start);
        if (full_circle) {
            offs.push_back(off);
        } else if (off <= cone_span + kAngEps) {
            offs.push_back(std::min(off, cone_span));
        }
    }
    std::sort(offs.begin(), offs.end());
    offs.erase(std::unique(offs.begin(), offs.end(),
                           [](double x, double y) { return y - x <= kAngEps; }),
               offs.end());

    struct Entry {
        Vec2 pt;
        int edge;
    };
    std::vector<Entry> chain;
    const double stitch = std::max(0.5 * eps, 1e-12);

    const std::size_t n_wedges = full_circle ? offs.size() : offs.size() - 1;
    for (std::size_t k = 0; k < n_wedges; ++k) {
        const double o0 = offs[k];
        const double o1 = full_circle && k + 1 == offs.size() ? offs[0] + kTau : offs[k + 1];
        const double width = o1 - o0;
        if (width <= kAngEps) continue;
        const double theta_mid = cone_start + 0.5 * (o0 + o1);
        const WedgeHit hit =
            first_hit(a, o, Vec2{std::cos(theta_mid), std::sin(theta_mid)}, eps);
        if (hit.edge < 0) continue;  // nothing in this wedge; degenerate sliver
        const double nudge = width * 1e-3;
        const Vec2 x0 = ray_line_point(a, o, cone_start + o0, nudge, hit.edge);
        const Vec2 x1 = ray_line_point(a, o, cone_start + o1, -nudge, hit.edge);
        if (!chain.empty() && chain.back().edge == hit.edge) {
            chain.push_back({x1, hit.edge});  // same-edge continuation
        } else {
            if (chain.empty() || chart_dist(chain.back().pt, x0) > stitch) {
                chain.push_back({x0, hit.edge});  // window jump or first wedge
            }
            chain.push_back({x1, hit.edge});
        }
    }
    if (full_circle && chain.size() >= 2 &&
        chart_dist(chain.front().pt, chain.back().pt) <= stitch) {
        chain.pop_back();
    }

    RadialStar out;
    out.center = p;
    for (const Entry& e : chain) {
        const Vec2 d = e.pt - o;
        out.breakpoints.push_back(
            {norm_angle(std::atan2(d.v, d.u)), chart_dist(o, e.pt), e.edge});
    }
    std::vector<Vec2> pts;
    if (!full_circle) pts.push_back(o);
    for (const Entry& e : chain) pts.push_back(e.pt);
    out.polygon = GeodesicPolygon{a.model, detail::simplify_chain(std::move(pts), kWeld)};
    return out;
}

ExtremeSet extreme_points(const GeodesicPolygon& a) {
    ExtremeSet out;
    out.interior_angles.resize(a.size());
    for (int i = 0; i < a.size(); ++i) {
        out.interior_angles[i] = interior_angle(a, i);
        if (out.interior_angles[i] < kPi - tol::angle) out.indices.push_back(i);
    }
    return out;
}

Region kernel_extreme(const GeodesicPolygon& a, double eps) {
    const ExtremeSet ex = extreme_points(a);
    Region r = Region::of(a);
    for (int idx : ex.indices) {
        const RadialStar s = star(a, a.point(idx), eps);
        if (s.polygon.size() < 3) return Region{std::nullopt, r.multi_component};
        r = intersect_regions(r, Region::of(s.polygon), eps);
        if (r.empty()) break;
    }
    return r;
}

namespace {

// Chart convex hull (monotone chain); the convex seed for half-plane clipping.
GeodesicPolygon chart_hull(const GeodesicPolygon& a) {
    std::vector<Vec2> pts = a.vertices;
    std::sort(pts.begin(), pts.end(), [](Vec2 x, Vec2 y) {
        return x.u < y.u || (x.u == y.u && x.v < y.v);
    });
    std::vector<Vec2> hull(2 * pts.size());
    int k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const int lower = k + 1;
    for (int i = static_cast<int>(pts.size()) - 2; i >= 0; --i) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return GeodesicPolygon{a.model, std::move(hull)};
}

}  // namespace

Region kernel_halfplane(const GeodesicPolygon& a, double eps) {
    Region r = Region::of(chart_hull(a));
    for (int i = 0; i < a.size() && !r.empty(); ++i) {
        // Inner side of each edge's supporting geodesic: left, for CCW polygons.
        const HalfPlane h{Geodesic{a.point(i), a.point(i + 1)}, Side::Left};
        r = clip_convex(*r.polygon, h, eps);
    }
    return r;
}

namespace {

Vec2 chart_centroid(const GeodesicPolygon& p) {
    double area2 = 0.0;
    Vec2 acc{0.0, 0.0};
    for (int i = 0; i < p.size(); ++i) {
        const Vec2 a = p.vertex(i), b = p.vertex(i + 1);
        const double w = cross(a, b);
        area2 += w;
        acc = acc + w * (a + b);
    }
    return acc / (3.0 * area2);
}

}  // namespace

StarshapedResult is_starshaped(const GeodesicPolygon& a, double eps) {
    const Region k = kernel_halfplane(a, eps);
    if (k.empty()) return {false, std::nullopt};
    return {true, Point{a.model, chart_centroid(*k.polygon)}};
}

int farthest_extreme_index(const GeodesicPolygon& a, const Point& p, double eps) {
    if (p.model != a.model) throw ModelMismatchError("farthest_extreme model mismatch");
    if (contains(a, p.pos, eps) != ContainmentClass::Exterior) {
        throw PreconditionError("farthest_extreme: point must be exterior");
    }
    int best = 0;
    double best_d = -1.0;
    for (int i = 0; i < a.size(); ++i) {
        const double d = distance(p, a.point(i));
        if (d > best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

Point farthest_extreme(const GeodesicPolygon& a, const Point& p, double eps) {
    return a.point(farthest_extreme_index(a, p, eps));
}

std::optional<std::pair<Point, double>> ray_hits(const GeodesicPolygon& a, const Point& x,
                                                 double theta, double eps) {
    if (x.model != a.model) throw ModelMismatchError("ray_hits model mismatch");
    if (contains(a, x.pos, eps) != ContainmentClass::Exterior) {
        return std::make_pair(x, 0.0);
    }
    const Vec2 o = x.pos;
    const Vec2 dir{std::cos(theta), std::sin(theta)};
    double best_t = std::numeric_limits<double>::max();
    for (int i = 0; i < a.size(); ++i) {
        const Vec2 c = a.vertex(i), d = a.vertex(i + 1);
        const double sc = cross(dir, c - o);
        const double sd = cross(dir, d - o);
        if (std::fabs(sc) <= eps && std::fabs(sd) <= eps) {
            // Edge collinear with the ray: nearest forward endpoint.
            for (double t : {dot(c - o, dir), dot(d - o, dir)}) {
                if (t >= -eps) best_t = std::min(best_t, std::max(t, 0.0));
            }
            continue;
        }
        const Vec2 cd = d - c;
        const double denom = cross(dir, cd);
        if (denom == 0.0) continue;
        const double t = cross(c - o, cd) / denom;
        const double u = cross(c - o, dir) / denom;
        const double eu = eps / norm(cd);
        if (u < -eu || u > 1.0 + eu) continue;
        if (t < -eps) continue;
        best_t = std::min(best_t, std::max(t, 0.0));
    }
    if (best_t == std::numeric_limits<double>::max()) return std::nullopt;
    const Point hit{a.model, o + best_t * dir};
    return std::make_pair(hit, distance(x, hit));
}

RayConditionResult ray_condition(const GeodesicPolygon& a, const Point& x) {
    if (contains(a, x.pos, tol::eps_on()) != ContainmentClass::Exterior) {
        throw PreconditionError("ray_condition: point must be exterior");
    }
    // Aim at any vertex; for a non-empty set this always meets A.
    const Vec2 d = a.vertex(0) - x.pos;
    const double theta = std::atan2(d.v, d.u);
    const bool holds = ray_hits(a, x, theta).has_value();
    return {holds, theta};
}

CertReport certify(const GeodesicPolygon& a, const CertifyOptions& opts) {
    CertReport r;
    r.extreme = extreme_points(a);
    r.b = kernel_extreme(a, opts.eps);

    if ((opts.fault_shift.u != 0.0 || opts.fault_shift.v != 0.0) && !r.b.empty()) {
        GeodesicPolygon shifted = *r.b.polygon;
        for (Vec2& v : shifted.vertices) v = v + opts.fault_shift;
        if (shifted.model == Model::HyperbolicKlein) {
            double mx = 0.0;
            for (const Vec2& v : shifted.vertices) mx = std::max(mx, norm(v));
            if (mx >= 0.95) {
                for (Vec2& v : shifted.vertices) v = v * (0.9 / mx);
            }
        }
        r.b.polygon = std::move(shifted);
    }

    r.halfplane_kernel = kernel_halfplane(a, opts.eps);
    r.hausdorff_b_vs_halfplane = hausdorff(r.b, r.halfplane_kernel);

    // Exterior probes from a ring around the scene.
    Rng rng(opts.seed);
    const Bbox box = chart_bbox(a);
    const Vec2 c0 = 0.5 * (box.lo + box.hi);
    double lo_r, hi_r;
    if (a.model == Model::Euclidean) {
        const double r_out = 0.5 * chart_dist(box.lo, box.hi);
        lo_r = r_out * 1.05 + 0.05;
        hi_r = r_out * 1.6 + 0.1;
    } else {
        double mx = 0.0;
        for (const Vec2& v : a.vertices) mx = std::max(mx, norm(v));
        lo_r = std::min(mx * 1.01 + 1e-6, 0.955);
        hi_r = std::min(0.985, std::max(lo_r * 1.3, lo_r + 0.01));
    }
    for (int k = 0; k < opts.n_probes; ++k) {
        Vec2 cand{};
        bool found = false;
        for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
            const double rad = rng.uniform(lo_r, hi_r);
            const double ang = rng.uniform(0.0, kTau);
            cand = Vec2{rad * std::cos(ang), rad * std::sin(ang)};
            if (a.model == Model::Euclidean) cand = cand + c0;
            if (a.model == Model::HyperbolicKlein && norm_sq(cand) >= 1.0 - 2.0 * tol::boundary) {
                continue;
            }
            found = contains(a, cand, opts.eps) == ContainmentClass::Exterior;
        }
        if (!found) break;
        const Point px{a.model, cand};
        const RayConditionResult rc = ray_condition(a, px);
        r.ray_checks.push_back({px, rc.holds, rc.theta});
    }

    if (opts.run_oracle) {
        const oracle::KernelGrid grid = oracle::brute_kernel(a, opts.oracle_resolution);
        const oracle::CompareResult cmp = oracle::compare(r.b, grid);
        r.oracle_agrees = cmp.agrees;
        r.oracle_max_violation = cmp.max_violation;
        r.oracle_grid_step = grid.step;
        r.oracle_kept = static_cast<int>(grid.kept.size());
        r.oracle_deep_nodes = cmp.deep_nodes;
    }

    bool probes_ok = true;
    for (const auto& probe : r.ray_checks) probes_ok = probes_ok && probe.ok;
    r.starshaped = !r.b.empty() && probes_ok;
    r.kernel = r.starshaped ? r.b : Region::empty_region();
    r.flagged_multi_component = r.b.multi_component || r.halfplane_kernel.multi_component;
    return r;
}

}  // namespace starkit
