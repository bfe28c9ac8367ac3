#pragma once

namespace starkit::tol {

// Chart-coordinate absolute tolerances; scenes are normalized to O(1) extent.
inline constexpr double pt = 1e-12;        // point coincidence
inline constexpr double boundary = 1e-9;   // Klein disk margin
inline constexpr double angle = 1e-7;      // extremity angle margin

// On-geodesic band, default 1e-9. Overridable once at startup (STARKIT_EPS).
double eps_on();
void set_eps_on(double eps);

}  // namespace starkit::tol
