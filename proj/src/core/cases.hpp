#ifndef LOWMACH_CORE_CASES_HPP
#define LOWMACH_CORE_CASES_HPP

#include <array>
#include <functional>
#include <string>

#include "grid.hpp"
#include "integrator.hpp"

namespace lowmach {

// Reference values tying the non-dimensional run back to dimensional data:
// phi = phi_r * phi_hat, with p_r = rho_r c_r^2, c_r = u_r / M, t_r = x_r/u_r.
struct RefScaling {
  double x_r = 1.0;
  double rho_r = 1.0;
  double u_r = 1.0;
  double c_r = 1.0;
  double t_r = 1.0;
  double p_r = 1.0;
};

struct CaseSpec {
  std::string name;
  int dim = 1;
  double gamma = 1.4;
  double mach = 1.0;
  double t_end = 0.0;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  BoundaryKind bcx = BoundaryKind::ZeroGradient;
  BoundaryKind bcy = BoundaryKind::ZeroGradient;
  RefScaling ref;
  // non-dimensional (rho, u, v, p) at a point
  std::function<std::array<double, 4>(double, double)> init;
};

CaseSpec init_sod();
CaseSpec init_mach_shock(double mach); // default M = 6.2e-3
CaseSpec init_gresho(double mach);
CaseSpec init_smooth_gresho(double mach);
// uniform state (rho=1, u=v=0, p=1); handy for smoke tests
CaseSpec init_uniform(double mach, double gamma);

// Dispatch by name in {sod, mach_shock, gresho, smooth_gresho, uniform}.
CaseSpec make_case(const std::string& name, double mach);

// Midpoint evaluation of the case profiles on an nx (x ny) grid; fills
// ghosts and projects the relaxation variables to equilibrium.
State initialize(const CaseSpec& spec, int nx, int ny);

// Dimensional angular-velocity / pressure profiles of the two vortex cases,
// exposed for tests and diagnostics.
double gresho_u_phi(double r);
double gresho_pressure(double r, double p0);
double smooth_gresho_u_phi(double r);
double smooth_gresho_pressure(double r, double p0);

} // namespace lowmach

#endif
