#include "riemann.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "eos.hpp"
#include "errors.hpp"
#include "reconstruct.hpp"

namespace lowmach {

namespace {
constexpr double kZeroWave = 1e-12;

std::string describe(const PrimitiveState& s) {
  std::ostringstream os;
  os << "(rho=" << s.rho << ", u=" << s.u << ", v=" << s.v << ", e=" << s.e
     << ", pi=" << s.pi << ", psi=" << s.psi << ")";
  return os.str();
}
} // namespace

RiemannFan solve_riemann(const PrimitiveState& vl, const PrimitiveState& vr,
                         double a, double mach) {
  const double m2 = mach * mach;
  const double fast = (1.0 - m2) / m2; // exactly 0 at M = 1

  RiemannFan f;
  f.left = vl;
  f.right = vr;
  f.u_star = 0.5 * (vl.u + vr.u) +
             (0.5 / a) * ((vl.pi - vr.pi) + fast * (vl.psi - vr.psi));
  const double common = 0.5 * (vl.pi + vr.pi) + 0.5 * a * (vl.u - vr.u);
  f.pi_star_l = common - 0.5 * fast * (vl.psi - vr.psi);
  f.pi_star_r = common + 0.5 * fast * (vl.psi - vr.psi);

  const double tau_l = 1.0 / vl.rho + (f.u_star - vl.u) / a;
  const double tau_r = 1.0 / vr.rho + (vr.u - f.u_star) / a;
  if (!(tau_l > 0.0) || !(tau_r > 0.0))
    throw PositivityBreach("non-positive star specific volume, L=" +
                               describe(vl) + " R=" + describe(vr) +
                               " a=" + std::to_string(a),
                           -1);
  f.rho_star_l = 1.0 / tau_l;
  f.rho_star_r = 1.0 / tau_r;

  // Internal energy jump from the Rankine-Hugoniot relations across the
  // outer waves; preserves I3 = e - M^2 pi^2/(2a^2) - (1-M^2) pi psi / a^2.
  const double a2 = a * a;
  f.e_star_l = vl.e + (m2 / (2.0 * a2)) * (f.pi_star_l * f.pi_star_l -
                                           vl.pi * vl.pi) +
               ((1.0 - m2) / a2) * (f.pi_star_l - vl.pi) * vl.psi;
  f.e_star_r = vr.e + (m2 / (2.0 * a2)) * (f.pi_star_r * f.pi_star_r -
                                           vr.pi * vr.pi) +
               ((1.0 - m2) / a2) * (f.pi_star_r - vr.pi) * vr.psi;

  f.lam_minus = vl.u - a / vl.rho;
  f.lam_u = f.u_star;
  f.lam_plus = vr.u + a / vr.rho;
  return f;
}

PrimitiveState sample_fan(const RiemannFan& fan) {
  auto left_of = [](double lam) {
    return std::fabs(lam) < kZeroWave || lam > 0.0;
  };
  if (left_of(fan.lam_minus)) return fan.left;
  if (left_of(fan.lam_u)) {
    PrimitiveState s;
    s.rho = fan.rho_star_l;
    s.u = fan.u_star;
    s.v = fan.left.v;
    s.e = fan.e_star_l;
    s.pi = fan.pi_star_l;
    s.psi = fan.left.psi;
    return s;
  }
  if (left_of(fan.lam_plus)) {
    PrimitiveState s;
    s.rho = fan.rho_star_r;
    s.u = fan.u_star;
    s.v = fan.right.v;
    s.e = fan.e_star_r;
    s.pi = fan.pi_star_r;
    s.psi = fan.right.psi;
    return s;
  }
  return fan.right;
}

InterfaceFlux interface_flux(const RiemannFan& fan, double mach, double a,
                             bool with_relax) {
  const PrimitiveState s = sample_fan(fan);
  const double m2 = mach * mach;
  const double fast = (1.0 - m2) / m2;
  const double E = s.rho * s.e + 0.5 * m2 * s.rho * (s.u * s.u + s.v * s.v);

  InterfaceFlux fx;
  fx.mass = s.rho * s.u;
  fx.mom_n = s.rho * s.u * s.u + s.pi + fast * s.psi;
  fx.mom_t = s.rho * s.u * s.v;
  fx.energy = s.u * (E + m2 * s.pi + (1.0 - m2) * s.psi);
  if (with_relax) {
    fx.pi_flux = (s.rho * s.pi + a * a) * s.u;
    fx.psi_flux = s.rho * s.psi * s.u;
  }
  return fx;
}

double max_signal_speed(const ConservedField& w, const Grid& g, double a) {
  double s = 0.0;
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      const double tau = 1.0 / w.rho[k];
      s = std::max(s, std::fabs(w.mx[k] * tau) + a * tau);
      if (g.dim == 2) s = std::max(s, std::fabs(w.my[k] * tau) + a * tau);
    }
  return s;
}

namespace {

// Interface trace in primitive variables. axis selects the normal direction;
// side +1 takes the right edge of the cell, -1 the left edge.
PrimitiveState trace_state(const ConservedField& w, const RelaxationField& r,
                           const SlopeField* slopes, const Grid& g,
                           std::size_t k, int axis, int side, double mach,
                           double gamma, int order, long iface) {
  double rho = w.rho[k], mx = w.mx[k], my = w.my[k], E = w.E[k],
         psi = r.psi[k];
  double pi;
  if (order == 2) {
    const double h = 0.5 * (axis == 0 ? g.dx : g.dy) * side;
    rho += h * slopes->rho[k];
    mx += h * slopes->mx[k];
    my += h * slopes->my[k];
    E += h * slopes->E[k];
    psi += h * slopes->psi[k];
    if (!(rho > 0.0))
      throw PositivityBreach("non-positive reconstructed density", iface);
    const double e = internal_energy(rho, mx, my, E, mach);
    if (!(e > 0.0))
      throw PositivityBreach("non-positive reconstructed internal energy",
                             iface);
    pi = pressure(rho, e, gamma); // stages start at equilibrium
  } else {
    pi = r.pi[k];
  }
  PrimitiveState s;
  s.rho = rho;
  const double un = (axis == 0 ? mx : my) / rho;
  const double ut = (axis == 0 ? my : mx) / rho;
  s.u = un;
  s.v = ut;
  s.e = internal_energy(rho, mx, my, E, mach);
  s.pi = pi;
  s.psi = psi;
  return s;
}

} // namespace

namespace {

// One directional sweep at the full time step; wg/rg must have filled
// ghosts. The result has stale ghosts.
ConservedField sweep(const ConservedField& wg, const RelaxationField& rg,
                     const Grid& g, int axis, double a, double mach,
                     double gamma, double dt, int order) {
  ConservedField out = wg;
  const int ng = Grid::ng;

  SlopeField slopes;
  if (order == 2) slopes = compute_slopes(wg, rg, g, axis);
  const std::ptrdiff_t stride = axis == 0 ? 1 : g.sx();
  const double h = axis == 0 ? g.dx : g.dy;
  const int n_norm = axis == 0 ? g.nx : g.ny;
  const int n_rows_lo = axis == 0 ? g.jlo() : ng;
  const int n_rows_hi = axis == 0 ? g.jhi() : ng + g.nx;

  std::vector<InterfaceFlux> flux(n_norm + 1);
  for (int row = n_rows_lo; row < n_rows_hi; ++row) {
    for (int m = 0; m <= n_norm; ++m) {
      // interface between cells (ng+m-1) and (ng+m) along the axis
      const int il = ng + m - 1;
      const std::size_t kl = axis == 0 ? g.idx(il, row) : g.idx(row, il);
      const std::size_t kr = kl + stride;
      const long iface = static_cast<long>(kl);
      const PrimitiveState vl =
          trace_state(wg, rg, &slopes, g, kl, axis, +1, mach, gamma, order,
                      iface);
      const PrimitiveState vr =
          trace_state(wg, rg, &slopes, g, kr, axis, -1, mach, gamma, order,
                      iface);
      try {
        flux[m] = interface_flux(solve_riemann(vl, vr, a, mach), mach, a);
      } catch (const PositivityBreach& b) {
        throw PositivityBreach(std::string(b.what()) + " [axis " +
                                   std::to_string(axis) + ", interface " +
                                   std::to_string(m) + ", row " +
                                   std::to_string(row) + "]",
                               iface);
      }
    }
    const double lam = dt / h;
    for (int m = 0; m < n_norm; ++m) {
      const std::size_t k =
          axis == 0 ? g.idx(ng + m, row) : g.idx(row, ng + m);
      out.rho[k] -= lam * (flux[m + 1].mass - flux[m].mass);
      if (axis == 0) {
        out.mx[k] -= lam * (flux[m + 1].mom_n - flux[m].mom_n);
        out.my[k] -= lam * (flux[m + 1].mom_t - flux[m].mom_t);
      } else {
        out.my[k] -= lam * (flux[m + 1].mom_n - flux[m].mom_n);
        out.mx[k] -= lam * (flux[m + 1].mom_t - flux[m].mom_t);
      }
      out.E[k] -= lam * (flux[m + 1].energy - flux[m].energy);
    }
  }
  return out;
}

} // namespace

ConservedField explicit_update(const ConservedField& w,
                               const RelaxationField& r, const Grid& g,
                               double a, double mach, double gamma, double dt,
                               int order, int first_axis) {
  ConservedField wg = w;
  fill_ghosts(g, wg);
  RelaxationField rg = r;
  fill_ghosts(g, rg);

  if (g.dim == 1) return sweep(wg, rg, g, 0, a, mach, gamma, dt, order);

  // Godunov dimensional splitting, each sweep at the full step. The slow
  // pressure is re-equilibrated between sweeps; the implicit fast pressure
  // is shared by both. The sweep order alternates between steps.
  for (int s = 0; s < 2; ++s) {
    const int axis = (first_axis + s) % 2;
    wg = sweep(wg, rg, g, axis, a, mach, gamma, dt, order);
    fill_ghosts(g, wg);
    if (s == 0) {
      check_admissible(wg, g, mach);
      for (std::size_t k = 0; k < g.size(); ++k)
        rg.pi[k] = pressure(wg.rho[k],
                            internal_energy(wg.rho[k], wg.mx[k], wg.my[k],
                                            wg.E[k], mach),
                            gamma);
    }
  }
  return wg;
}

} // namespace lowmach
