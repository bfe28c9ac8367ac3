#include "oracle_impl.hpp"
#include "starkit/error.hpp"

// OpenMP drivers. Every per-item classification is independent and written to
// a preallocated slot, so the output is identical for any thread count.

namespace starkit::oracle {

bool brute_sees(const GeodesicPolygon& a, const Point& p, const Point& q, int n_steps) {
    if (p.model != a.model || q.model != a.model) {
        throw ModelMismatchError("brute_sees model mismatch");
    }
    bool ok = true;
#pragma omp parallel for reduction(&& : ok) schedule(static)
    for (int k = 0; k <= n_steps; ++k) {
        const Vec2 x = p.pos + (static_cast<double>(k) / n_steps) * (q.pos - p.pos);
        ok = ok && contains(a, x) != ContainmentClass::Exterior;
    }
    return ok;
}

std::vector<Vec2> brute_star(const GeodesicPolygon& a, const Point& p, int n_dirs, int n_steps) {
    if (p.model != a.model) throw ModelMismatchError("brute_star model mismatch");
    if (contains(a, p.pos) == ContainmentClass::Exterior) {
        throw PreconditionError("brute_star: exterior center");
    }
    const detail::StarSetup s = detail::star_setup(a, p.pos, n_dirs, n_steps);
    std::vector<int> exit_idx(n_dirs, 0);
    const double eps = tol::eps_on();
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n_dirs; ++k) {
        exit_idx[k] = detail::star_exit_index(a, s, k, eps);
    }
    return detail::assemble_star_samples(s, exit_idx);
}

KernelGrid brute_kernel(const GeodesicPolygon& a, int resolution, int n_boundary_targets) {
    const detail::KernelSetup s = detail::kernel_setup(a, resolution, n_boundary_targets);
    std::vector<std::uint8_t> flags(s.nx * s.ny, 0);
    const double eps = tol::eps_on();
#pragma omp parallel
    {
        std::vector<double> scratch;
#pragma omp for schedule(dynamic, 16)
        for (int idx = 0; idx < s.nx * s.ny; ++idx) {
            flags[idx] = detail::kernel_node(a, s, idx, eps, scratch);
        }
    }
    return detail::assemble_kernel_grid(s, flags);
}

}  // namespace starkit::oracle
