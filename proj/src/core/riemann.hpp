#ifndef LOWMACH_CORE_RIEMANN_HPP
#define LOWMACH_CORE_RIEMANN_HPP

#include "fields.hpp"
#include "grid.hpp"

namespace lowmach {

// Four-state solution of the local Riemann problem for the explicit
// subsystem. All waves are linearly degenerate; the star states follow from
// the Riemann invariants. The transverse velocity and psi ride along with
// their side of the contact.
struct RiemannFan {
  PrimitiveState left, right; // inputs
  double u_star = 0.0;
  double rho_star_l = 0.0, rho_star_r = 0.0;
  double pi_star_l = 0.0, pi_star_r = 0.0;
  double e_star_l = 0.0, e_star_r = 0.0;
  double lam_minus = 0.0, lam_u = 0.0, lam_plus = 0.0;
};

// Throws PositivityBreach if a star specific volume is non-positive.
RiemannFan solve_riemann(const PrimitiveState& vl, const PrimitiveState& vr,
                         double a, double mach);

struct InterfaceFlux {
  double mass = 0.0;
  double mom_n = 0.0; // normal momentum
  double mom_t = 0.0; // transverse momentum (2D)
  double energy = 0.0;
  double pi_flux = 0.0;  // only filled when requested
  double psi_flux = 0.0; // only filled when requested
};

// State sitting at x/t = 0. A wave speed with |lambda| < 1e-12 counts as
// zero and selects the state to its left.
PrimitiveState sample_fan(const RiemannFan& fan);

// First d+2 components of the relaxation flux F evaluated at the sampled
// state; pi/psi rows only when with_relax is set (never needed on the
// projected path).
InterfaceFlux interface_flux(const RiemannFan& fan, double mach, double a,
                             bool with_relax = false);

// max over interior cells and axes of |u| + a/rho; contains no M.
double max_signal_speed(const ConservedField& w, const Grid& g, double a);

// Conservative Godunov update of the physical variables. In 1D,
//   w_i - (dt/dx)(F_{i+1/2} - F_{i-1/2});
// in 2D, dimensional splitting with both sweeps at the full dt (first_axis
// picks which direction goes first; alternate it between steps). Interface
// states are cell-constant (order 1) or minmod-reconstructed (rho, rho u, E)
// and psi (order 2). The psi field must be the implicit-step output; pi is at
// equilibrium with the stage input and is re-equilibrated between sweeps.
//
// Each sweep is only stable for per-sweep Courant numbers in roughly
// [1/4, 1/2]: the implicit pressure damps the grid-scale mode like
// (dt a / (M dx))^2, so at low Mach a too-small dt is unstable, not safe.
ConservedField explicit_update(const ConservedField& w,
                               const RelaxationField& r, const Grid& g,
                               double a, double mach, double gamma, double dt,
                               int order, int first_axis = 0);

} // namespace lowmach

#endif
