#include "starkit/tolerance.hpp"

namespace starkit::tol {

namespace {
double g_eps_on = 1e-9;
}

double eps_on() { return g_eps_on; }
void set_eps_on(double eps) { g_eps_on = eps; }

}  // namespace starkit::tol
