#include "eos.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace lowmach {

double pressure(double rho, double e, double gamma) {
  if (!(rho > 0.0) || !(e > 0.0))
    throw std::domain_error("pressure: rho and e must be positive");
  return (gamma - 1.0) * rho * e;
}

double sound_speed(double rho, double p, double gamma) {
  if (!(rho > 0.0) || !(p > 0.0))
    throw std::domain_error("sound_speed: rho and p must be positive");
  return std::sqrt(gamma * p / rho);
}

double select_relaxation_parameter(const ConservedField& w, const Grid& g,
                                   double gamma, double mach, double a_safety) {
  double max_rc = 0.0;
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      const double rho = w.rho[k];
      if (!(rho > 0.0))
        throw AdmissibilityError("select_relaxation_parameter: rho <= 0",
                                 static_cast<long>(k));
      const double e = internal_energy(rho, w.mx[k], w.my[k], w.E[k], mach);
      const double c = sound_speed(rho, pressure(rho, e, gamma), gamma);
      max_rc = std::max(max_rc, rho * c);
    }
  return a_safety * max_rc;
}

void project_to_equilibrium(const ConservedField& w, RelaxationField& r,
                            const Grid& g, double gamma, double mach) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double rho = w.rho[k];
    const double e = internal_energy(rho, w.mx[k], w.my[k], w.E[k], mach);
    const double p = pressure(rho, e, gamma);
    r.pi[k] = p;
    r.psi[k] = p;
  }
}

} // namespace lowmach
