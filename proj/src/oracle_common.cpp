#include <algorithm>
#include <cmath>

#include "oracle_impl.hpp"
#include "starkit/error.hpp"

namespace starkit::oracle {

namespace detail {

bool sees_exact_slow(const GeodesicPolygon& a, Vec2 p, Vec2 q, double eps,
                     std::vector<double>& scratch) {
    scratch.clear();
    scratch.push_back(0.0);
    scratch.push_back(1.0);
    starkit::detail::boundary_contacts(a, p, q, eps, scratch);
    const double len = chart_dist(p, q);
    starkit::detail::sort_unique_params(scratch, std::max(0.25 * eps / len, 1e-14));
    for (std::size_t k = 0; k + 1 < scratch.size(); ++k) {
        if ((scratch[k + 1] - scratch[k]) * len <= 1e-11) continue;
        const Vec2 mid = p + (0.5 * (scratch[k] + scratch[k + 1])) * (q - p);
        if (contains(a, mid, eps) == ContainmentClass::Exterior) return false;
    }
    return true;
}

KernelSetup kernel_setup(const GeodesicPolygon& a, int resolution, int n_boundary_targets) {
    if (n_boundary_targets < 0) n_boundary_targets = default_boundary_targets(a.size());
    KernelSetup s;
    const Bbox box = chart_bbox(a);
    s.nx = resolution;
    s.ny = resolution;
    s.origin = box.lo;
    s.su = box.width() / (resolution - 1);
    s.sv = box.height() / (resolution - 1);
    s.step = std::max(s.su, s.sv);

    for (const Vec2& v : a.vertices) s.targets.push_back(v);
    const double perimeter = chart_perimeter(a);
    for (int i = 0; i < a.size(); ++i) {
        const Vec2 va = a.vertex(i), vb = a.vertex(i + 1);
        const int k = std::max(
            1, static_cast<int>(std::lround(n_boundary_targets * chart_dist(va, vb) / perimeter)));
        for (int j = 0; j < k; ++j) {
            s.targets.push_back(va + ((j + 0.5) / k) * (vb - va));
        }
    }
    // Fixed shuffle so blocked directions are met early; identical in the
    // serial and parallel drivers.
    Rng rng(0x6f7261636c65ull + static_cast<std::uint64_t>(a.size()));
    for (int i = static_cast<int>(s.targets.size()) - 1; i > 0; --i) {
        std::swap(s.targets[i], s.targets[rng.uniform_int(0, i)]);
    }
    return s;
}

KernelGrid assemble_kernel_grid(const KernelSetup& s, const std::vector<std::uint8_t>& flags) {
    KernelGrid g;
    g.origin = s.origin;
    g.step_u = s.su;
    g.step_v = s.sv;
    g.nx = s.nx;
    g.ny = s.ny;
    g.step = s.step;
    for (int idx = 0; idx < s.nx * s.ny; ++idx) {
        if (flags[idx] == 0) continue;
        ++g.interior_count;
        if (flags[idx] == 2) {
            g.kept.push_back(s.origin + Vec2{(idx % s.nx) * s.su, (idx / s.nx) * s.sv});
            g.kept_index.push_back(idx);
        }
    }
    return g;
}

StarSetup star_setup(const GeodesicPolygon& a, Vec2 p, int n_dirs, int n_steps) {
    const Bbox box = chart_bbox(a);
    StarSetup s;
    s.center = p;
    s.n_dirs = n_dirs;
    s.n_steps = n_steps;
    s.step = chart_dist(box.lo, box.hi) / n_steps;
    return s;
}

std::vector<Vec2> assemble_star_samples(const StarSetup& s, const std::vector<int>& exit_idx) {
    std::vector<Vec2> out;
    for (int k = 0; k < s.n_dirs; ++k) {
        const double theta = 2.0 * 3.14159265358979323846 * k / s.n_dirs;
        const Vec2 dir{std::cos(theta), std::sin(theta)};
        for (int j = 1; j < exit_idx[k]; ++j) {
            out.push_back(s.center + (j * s.step) * dir);
        }
    }
    return out;
}

}  // namespace detail

CompareResult compare(const Region& region, const KernelGrid& grid) {
    CompareResult out;
    if (region.empty()) {
        out.agrees = grid.kept.empty();
        out.max_violation = grid.kept.empty() ? 0.0 : std::numeric_limits<double>::infinity();
        return out;
    }
    const GeodesicPolygon& poly = *region.polygon;

    // Forward: every oracle point inside the region, within a grid step.
    for (const Vec2& p : grid.kept) {
        if (contains(poly, p) == ContainmentClass::Exterior) {
            double d = std::numeric_limits<double>::max();
            for (int i = 0; i < poly.size(); ++i) {
                d = std::min(d, dist_point_segment(p, poly.vertex(i), poly.vertex(i + 1)));
            }
            out.max_violation = std::max(out.max_violation, d);
        }
    }

    // Reverse: region-interior grid nodes with more than a step of clearance
    // must be near an oracle point.
    std::vector<std::uint8_t> kept_mask(grid.nx * grid.ny, 0);
    for (int idx : grid.kept_index) kept_mask[idx] = 1;
    const int ring_max = 8;
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const Vec2 pos = grid.origin + Vec2{i * grid.step_u, j * grid.step_v};
            if (contains(poly, pos) != ContainmentClass::Interior) continue;
            double clearance = std::numeric_limits<double>::max();
            for (int e = 0; e < poly.size(); ++e) {
                clearance = std::min(clearance,
                                     dist_point_segment(pos, poly.vertex(e), poly.vertex(e + 1)));
            }
            if (clearance <= grid.step) continue;
            ++out.deep_nodes;
            if (kept_mask[j * grid.nx + i]) continue;
            double nearest = std::numeric_limits<double>::max();
            for (int r = 1; r <= ring_max && nearest == std::numeric_limits<double>::max(); ++r) {
                for (int dj = -r; dj <= r; ++dj) {
                    for (int di = -r; di <= r; ++di) {
                        if (std::max(std::abs(di), std::abs(dj)) != r) continue;
                        const int ii = i + di, jj = j + dj;
                        if (ii < 0 || jj < 0 || ii >= grid.nx || jj >= grid.ny) continue;
                        if (!kept_mask[jj * grid.nx + ii]) continue;
                        nearest = std::min(nearest, norm(Vec2{di * grid.step_u, dj * grid.step_v}));
                    }
                }
            }
            if (nearest == std::numeric_limits<double>::max()) {
                nearest = (ring_max + 1) * grid.step;
            }
            out.max_violation = std::max(out.max_violation, nearest);
        }
    }
    out.agrees = out.max_violation <= 2.0 * grid.step;
    return out;
}

CompareResult compare(const Region& region, const std::vector<Vec2>& pts, double grid_step) {
    CompareResult out;
    if (region.empty()) {
        out.agrees = pts.empty();
        out.max_violation = pts.empty() ? 0.0 : std::numeric_limits<double>::infinity();
        return out;
    }
    const GeodesicPolygon& poly = *region.polygon;
    for (const Vec2& p : pts) {
        if (contains(poly, p) == ContainmentClass::Exterior) {
            double d = std::numeric_limits<double>::max();
            for (int i = 0; i < poly.size(); ++i) {
                d = std::min(d, dist_point_segment(p, poly.vertex(i), poly.vertex(i + 1)));
            }
            out.max_violation = std::max(out.max_violation, d);
        }
    }
    out.agrees = out.max_violation <= 2.0 * grid_step;
    return out;
}

}  // namespace starkit::oracle
