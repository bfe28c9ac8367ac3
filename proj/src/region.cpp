#include "starkit/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "contact.hpp"
#include "starkit/error.hpp"

namespace starkit {

using detail::append_contacts;
using detail::sort_unique_params;

namespace {

constexpr double kWeld = 1e-11;  // merge threshold for boundary chains
// Loops and stranded chains enclosing less area than an eps_on-wide band
// around an O(1) contour are tolerance noise (tangent contacts, shared-arc
// grazing), not components. Anything bigger is real and must be flagged.
constexpr double kSliverArea = 1e-9;

// ---------------------------------------------------------------------------
// Fragment soup: directed boundary pieces of the intersection, stitched back
// into loops. Every fragment carries the interior on its left.

struct Frag {
    Vec2 a, b;
};

struct Soup {
    std::vector<Frag> frags;
    bool anomaly = false;
};

struct Loop {
    std::vector<Vec2> pts;
    double area = 0.0;
};

double chain_area(const std::vector<Vec2>& pts) {
    double s = 0.0;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) s += cross(pts[i], pts[(i + 1) % n]);
    return 0.5 * s;
}

std::vector<Loop> stitch(Soup& soup, double stitch_eps) {
    const int nf = static_cast<int>(soup.frags.size());
    std::vector<Vec2> canon;
    auto canon_id = [&](Vec2 p) {
        for (int i = 0; i < static_cast<int>(canon.size()); ++i) {
            if (chart_dist(canon[i], p) <= stitch_eps) return i;
        }
        canon.push_back(p);
        return static_cast<int>(canon.size()) - 1;
    };

    std::vector<int> frag_a(nf), frag_b(nf);
    for (int i = 0; i < nf; ++i) {
        frag_a[i] = canon_id(soup.frags[i].a);
        frag_b[i] = canon_id(soup.frags[i].b);
    }

    std::vector<std::vector<int>> out_of(canon.size());
    for (int i = 0; i < nf; ++i) {
        if (frag_a[i] != frag_b[i]) out_of[frag_a[i]].push_back(i);
    }

    std::vector<bool> used(nf, false);
    std::vector<Loop> loops;
    for (int seed = 0; seed < nf; ++seed) {
        if (used[seed] || frag_a[seed] == frag_b[seed]) continue;
        std::vector<Vec2> chain;
        const int start = frag_a[seed];
        int cur = seed;
        bool closed = false;
        while (true) {
            used[cur] = true;
            chain.push_back(canon[frag_a[cur]]);
            const int at = frag_b[cur];
            if (at == start) {
                closed = true;
                break;
            }
            const Vec2 in_dir = canon[frag_b[cur]] - canon[frag_a[cur]];
            int next = -1;
            double best_turn = -std::numeric_limits<double>::max();
            for (int cand : out_of[at]) {
                if (used[cand]) continue;
                const Vec2 out_dir = canon[frag_b[cand]] - canon[frag_a[cand]];
                // Sharpest left turn keeps the interior on the left through
                // pinch vertices.
                const double turn = std::atan2(cross(in_dir, out_dir), dot(in_dir, out_dir));
                if (turn > best_turn) {
                    best_turn = turn;
                    next = cand;
                }
            }
            if (next < 0) break;  // dead end
            cur = next;
        }
        if (!closed) {
            // Stranded chains from degenerate tangent contacts are flat;
            // anything that bounds area means the tracing genuinely failed.
            if (std::fabs(chain_area(chain)) > kSliverArea) soup.anomaly = true;
            continue;
        }
        Loop loop{std::move(chain), 0.0};
        loop.area = chain_area(loop.pts);
        loops.push_back(std::move(loop));
    }
    return loops;
}

Region region_from_loops(Model model, std::vector<Loop> loops, bool anomaly) {
    bool multi = anomaly;
    int best = -1;
    int positive = 0;
    for (int i = 0; i < static_cast<int>(loops.size()); ++i) {
        if (loops[i].area > kSliverArea) {
            ++positive;
            if (best < 0 || loops[i].area > loops[best].area) best = i;
        } else if (loops[i].area < -kSliverArea) {
            multi = true;  // a hole; outside this artifact's region class
        }
    }
    if (positive > 1) multi = true;
    if (best < 0) return Region{std::nullopt, multi};
    std::vector<Vec2> pts = detail::simplify_chain(std::move(loops[best].pts), kWeld);
    if (pts.size() < 3 || chain_area(pts) <= kSliverArea) return Region{std::nullopt, multi};
    return Region{GeodesicPolygon{model, std::move(pts)}, multi};
}

// Splits polygon boundary at contacts and keeps fragments classified by
// `keep`; the classifier sees each fragment's midpoint.
template <typename Keep>
void collect_polygon_frags(const GeodesicPolygon& p, double eps, Keep keep, Soup& soup) {
    const int n = p.size();
    std::vector<double> params;
    for (int i = 0; i < n; ++i) {
        const Vec2 a = p.vertex(i), b = p.vertex(i + 1);
        const double len = chart_dist(a, b);
        params.clear();
        params.push_back(0.0);
        params.push_back(1.0);
        keep.contacts(a, b, params);
        sort_unique_params(params, std::max(0.25 * eps / len, 1e-14));
        for (std::size_t k = 0; k + 1 < params.size(); ++k) {
            const double t0 = params[k], t1 = params[k + 1];
            if ((t1 - t0) * len <= kWeld) continue;
            const Vec2 mid = a + (0.5 * (t0 + t1)) * (b - a);
            if (keep.classify(mid)) {
                soup.frags.push_back(Frag{a + t0 * (b - a), a + t1 * (b - a)});
            }
        }
    }
}

struct VsPolygon {
    const GeodesicPolygon& other;
    double eps;
    bool strict_interior;
    void contacts(Vec2 a, Vec2 b, std::vector<double>& params) const {
        for (int j = 0; j < other.size(); ++j) {
            append_contacts(a, b, other.vertex(j), other.vertex(j + 1), eps, params);
        }
    }
    bool classify(Vec2 mid) const {
        const ContainmentClass c = contains(other, mid, eps);
        return strict_interior ? c == ContainmentClass::Interior : c != ContainmentClass::Exterior;
    }
};

Region polygon_intersection(const GeodesicPolygon& p, const GeodesicPolygon& q, double eps) {
    Soup soup;
    // P fragments inside-or-on Q; Q fragments strictly inside P, so shared
    // boundary runs are kept exactly once.
    collect_polygon_frags(p, eps, VsPolygon{q, eps, false}, soup);
    collect_polygon_frags(q, eps, VsPolygon{p, eps, true}, soup);
    auto loops = stitch(soup, std::max(0.5 * eps, 1e-12));
    return region_from_loops(p.model, std::move(loops), soup.anomaly);
}

struct LineRef {
    Vec2 origin;
    Vec2 dir;  // unit
};

double halfplane_signed(const LineRef& line, Vec2 x) { return cross(line.dir, x - line.origin); }

struct VsHalfPlane {
    LineRef line;
    double keep_sign;  // +1 keeps the left side, -1 the right
    double eps;
    void contacts(Vec2 a, Vec2 b, std::vector<double>& params) const {
        const double sa = halfplane_signed(line, a);
        const double sb = halfplane_signed(line, b);
        if ((sa > eps && sb < -eps) || (sa < -eps && sb > eps)) {
            params.push_back(std::clamp(sa / (sa - sb), 0.0, 1.0));
        }
    }
    bool classify(Vec2 mid) const { return keep_sign * halfplane_signed(line, mid) >= -eps; }
};

}  // namespace

Region clip_halfplane(const GeodesicPolygon& p, const HalfPlane& h, double eps) {
    if (h.boundary.p.model != p.model) throw ModelMismatchError("half-plane model mismatch");
    const Vec2 o = h.boundary.p.pos;
    Vec2 d = h.boundary.q.pos - o;
    const double len = norm(d);
    if (len <= tol::pt) throw DegenerateError("degenerate half-plane boundary");
    d = d / len;
    const LineRef line{o, d};
    const double keep_sign = h.side == Side::Left ? 1.0 : -1.0;

    Soup soup;
    collect_polygon_frags(p, eps, VsHalfPlane{line, keep_sign, eps}, soup);

    // Fragments of the boundary line inside P. Traversed so the kept side
    // stays on the left.
    std::vector<double> lambdas;
    for (int i = 0; i < p.size(); ++i) {
        const Vec2 a = p.vertex(i), b = p.vertex(i + 1);
        const double sa = halfplane_signed(line, a);
        const double sb = halfplane_signed(line, b);
        if (std::fabs(sa) <= eps && std::fabs(sb) <= eps) {
            lambdas.push_back(dot(a - o, d));
            lambdas.push_back(dot(b - o, d));
        } else if ((sa > eps && sb < -eps) || (sa < -eps && sb > eps)) {
            const double t = sa / (sa - sb);
            lambdas.push_back(dot(a + t * (b - a) - o, d));
        } else if (std::fabs(sa) <= eps) {
            lambdas.push_back(dot(a - o, d));
        } else if (std::fabs(sb) <= eps) {
            lambdas.push_back(dot(b - o, d));
        }
    }
    sort_unique_params(lambdas, 1e-14);
    for (std::size_t k = 0; k + 1 < lambdas.size(); ++k) {
        const double l0 = lambdas[k], l1 = lambdas[k + 1];
        if (l1 - l0 <= kWeld) continue;
        const Vec2 mid = o + (0.5 * (l0 + l1)) * d;
        if (contains(p, mid, eps) == ContainmentClass::Interior) {
            const Vec2 p0 = o + l0 * d, p1 = o + l1 * d;
            if (keep_sign > 0) {
                soup.frags.push_back(Frag{p0, p1});
            } else {
                soup.frags.push_back(Frag{p1, p0});
            }
        }
    }

    auto loops = stitch(soup, std::max(0.5 * eps, 1e-12));
    return region_from_loops(p.model, std::move(loops), soup.anomaly);
}

Region clip_halfplane(const Region& r, const HalfPlane& h, double eps) {
    if (r.empty()) return r;
    Region out = clip_halfplane(*r.polygon, h, eps);
    out.multi_component = out.multi_component || r.multi_component;
    return out;
}

Region clip_convex(const GeodesicPolygon& convex, const HalfPlane& h, double eps) {
    if (h.boundary.p.model != convex.model) throw ModelMismatchError("half-plane model mismatch");
    const Vec2 o = h.boundary.p.pos;
    Vec2 d = h.boundary.q.pos - o;
    d = d / norm(d);
    const double keep_sign = h.side == Side::Left ? 1.0 : -1.0;
    auto signed_dist = [&](Vec2 x) { return keep_sign * cross(d, x - o); };

    std::vector<Vec2> out;
    const int n = convex.size();
    for (int i = 0; i < n; ++i) {
        const Vec2 cur = convex.vertex(i), nxt = convex.vertex(i + 1);
        const double sc = signed_dist(cur), sn = signed_dist(nxt);
        const bool in_c = sc >= -eps, in_n = sn >= -eps;
        if (in_c) out.push_back(cur);
        if (in_c != in_n) {
            const double t = sc / (sc - sn);
            out.push_back(cur + t * (nxt - cur));
        }
    }
    std::vector<Vec2> pts = detail::simplify_chain(std::move(out), kWeld);
    if (pts.size() < 3 || chain_area(pts) <= kSliverArea) return Region::empty_region();
    return Region::of(GeodesicPolygon{convex.model, std::move(pts)});
}

Region intersect_regions(const Region& r1, const Region& r2, double eps) {
    const bool flags = r1.multi_component || r2.multi_component;
    if (r1.empty() || r2.empty()) return Region{std::nullopt, flags};
    const GeodesicPolygon& p1 = *r1.polygon;
    const GeodesicPolygon& p2 = *r2.polygon;
    if (p1.model != p2.model) throw ModelMismatchError("region model mismatch");

    const GeodesicPolygon* subject = &p1;
    const GeodesicPolygon* clipper = nullptr;
    if (is_chart_convex(p2, eps)) {
        clipper = &p2;
    } else if (is_chart_convex(p1, eps)) {
        subject = &p2;
        clipper = &p1;
    }

    Region out;
    bool iterated_ok = false;
    if (clipper != nullptr) {
        iterated_ok = true;
        out = Region::of(*subject);
        for (int i = 0; i < clipper->size() && !out.empty(); ++i) {
            const HalfPlane h{
                Geodesic{clipper->point(i), clipper->point(i + 1)}, Side::Left};
            out = clip_halfplane(*out.polygon, h, eps);
            if (out.multi_component) {
                // A non-convex subject can disconnect mid-pipeline even when
                // the full intersection is fine; keeping only the largest
                // piece here would be wrong, so redo it in one pass.
                iterated_ok = false;
                break;
            }
        }
    }
    if (!iterated_ok) out = polygon_intersection(p1, p2, eps);
    out.multi_component = out.multi_component || flags;
    return out;
}

double metric_dist_to_boundary(const GeodesicPolygon& p, const Point& q) {
    if (q.model != p.model) throw ModelMismatchError("distance model mismatch");
    double best = std::numeric_limits<double>::max();
    for (int i = 0; i < p.size(); ++i) {
        const Vec2 a = p.vertex(i), b = p.vertex(i + 1);
        if (p.model == Model::Euclidean) {
            best = std::min(best, dist_point_segment(q.pos, a, b));
            continue;
        }
        // Distance to a point is convex along geodesics, so it is unimodal in
        // the chart parameter; golden-section search.
        const double gr = 0.6180339887498949;
        double lo = 0.0, hi = 1.0;
        double t1 = hi - gr * (hi - lo), t2 = lo + gr * (hi - lo);
        auto eval = [&](double t) { return distance(q, Point{p.model, a + t * (b - a)}); };
        double f1 = eval(t1), f2 = eval(t2);
        for (int it = 0; it < 60; ++it) {
            if (f1 <= f2) {
                hi = t2;
                t2 = t1;
                f2 = f1;
                t1 = hi - gr * (hi - lo);
                f1 = eval(t1);
            } else {
                lo = t1;
                t1 = t2;
                f1 = f2;
                t2 = lo + gr * (hi - lo);
                f2 = eval(t2);
            }
        }
        best = std::min(best, std::min(f1, f2));
    }
    return best;
}

namespace {

double directed_hausdorff(const GeodesicPolygon& from, const GeodesicPolygon& to, int n_samples) {
    const double perimeter = chart_perimeter(from);
    double worst = 0.0;
    for (int i = 0; i < from.size(); ++i) {
        const Vec2 a = from.vertex(i), b = from.vertex(i + 1);
        const int extra =
            std::max(1, static_cast<int>(std::ceil(n_samples * chart_dist(a, b) / perimeter)));
        for (int k = 0; k <= extra; ++k) {
            const Vec2 s = a + (static_cast<double>(k) / extra) * (b - a);
            if (contains(to, s, tol::eps_on()) != ContainmentClass::Exterior) continue;
            worst = std::max(worst, metric_dist_to_boundary(to, Point{from.model, s}));
        }
    }
    return worst;
}

}  // namespace

double hausdorff(const Region& r1, const Region& r2, int n_samples) {
    if (r1.empty() && r2.empty()) return 0.0;
    if (r1.empty() || r2.empty()) return std::numeric_limits<double>::infinity();
    return std::max(directed_hausdorff(*r1.polygon, *r2.polygon, n_samples),
                    directed_hausdorff(*r2.polygon, *r1.polygon, n_samples));
}

}  // namespace starkit
