#ifndef LOWMACH_CORE_EOS_HPP
#define LOWMACH_CORE_EOS_HPP

#include "fields.hpp"
#include "grid.hpp"

namespace lowmach {

// Ideal gas law p = (gamma - 1) rho e.
double pressure(double rho, double e, double gamma);

// c = sqrt(gamma p / rho).
double sound_speed(double rho, double p, double gamma);

// Relaxation parameter under the sub-characteristic condition:
// a = a_safety * max over interior cells of rho * c. Contains no M, so it is
// Mach-independent by construction.
double select_relaxation_parameter(const ConservedField& w, const Grid& g,
                                   double gamma, double mach, double a_safety);

// pi = psi = p(rho, e) on every cell (ghosts included); idempotent.
void project_to_equilibrium(const ConservedField& w, RelaxationField& r,
                            const Grid& g, double gamma, double mach);

} // namespace lowmach

#endif
