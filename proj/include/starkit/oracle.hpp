#pragma once

#include <vector>

#include "starkit/polygon.hpp"
#include "starkit/region.hpp"

namespace starkit::oracle {

// Defaults chosen so fixture gaps exceed ten sampling steps.
inline constexpr int kDefaultResolution = 64;
inline constexpr int kDefaultSteps = 256;
inline constexpr int kDefaultDirs = 1024;

inline int default_boundary_targets(int n_vertices) { return 4 * n_vertices * 16; }

// Grid trace of the kernel: the interior grid points that see every boundary
// sample and every vertex.
struct KernelGrid {
    Vec2 origin;         // grid node (0, 0)
    double step_u = 0.0;
    double step_v = 0.0;
    int nx = 0, ny = 0;
    double step = 0.0;   // max(step_u, step_v); the comparison unit
    std::vector<Vec2> kept;       // kernel grid points, row-major order
    std::vector<int> kept_index;  // j * nx + i for each kept point
    int interior_count = 0;       // grid points classified Interior
};

struct CompareResult {
    double max_violation = 0.0;
    bool agrees = false;
    // Region-interior grid nodes with more than a step of clearance: the
    // number of nodes the grid could not have missed if the region is right.
    // Zero means the region is below the grid's resolution.
    int deep_nodes = 0;
};

// Parallel drivers (OpenMP over grid points / directions).
bool brute_sees(const GeodesicPolygon& a, const Point& p, const Point& q,
                int n_steps = kDefaultSteps);
std::vector<Vec2> brute_star(const GeodesicPolygon& a, const Point& p, int n_dirs = kDefaultDirs,
                             int n_steps = kDefaultSteps);
KernelGrid brute_kernel(const GeodesicPolygon& a, int resolution = kDefaultResolution,
                        int n_boundary_targets = -1);

// Serial reference implementations; must produce identical output.
namespace serial {
bool brute_sees(const GeodesicPolygon& a, const Point& p, const Point& q,
                int n_steps = kDefaultSteps);
std::vector<Vec2> brute_star(const GeodesicPolygon& a, const Point& p, int n_dirs = kDefaultDirs,
                             int n_steps = kDefaultSteps);
KernelGrid brute_kernel(const GeodesicPolygon& a, int resolution = kDefaultResolution,
                        int n_boundary_targets = -1);
}  // namespace serial

// Two-sided agreement in chart units: every oracle point must be inside the
// region (within grid_step) and every region-interior grid node with more
// than one step of clearance must be an oracle point. Agrees iff
// max_violation <= 2 * grid_step.
CompareResult compare(const Region& region, const KernelGrid& grid);
CompareResult compare(const Region& region, const std::vector<Vec2>& pts, double grid_step);

}  // namespace starkit::oracle
