#include "fields.hpp"

#include <cmath>
#include <string>

#include "eos.hpp"
#include "errors.hpp"

namespace lowmach {

void fill_ghosts(const Grid& g, ConservedField& w) {
  apply_boundary(g, w.rho);
  apply_boundary(g, w.mx);
  apply_boundary(g, w.my);
  apply_boundary(g, w.E);
}

void fill_ghosts(const Grid& g, RelaxationField& r) {
  apply_boundary(g, r.pi);
  apply_boundary(g, r.psi);
}

double internal_energy(double rho, double mx, double my, double E, double mach) {
  const double u = mx / rho;
  const double v = my / rho;
  return (E - 0.5 * mach * mach * rho * (u * u + v * v)) / rho;
}

PrimitiveState cell_primitive(const ConservedField& w, const RelaxationField& r,
                              std::size_t k, double mach) {
  if (!(w.rho[k] > 0.0))
    throw AdmissibilityError("non-positive density at cell " + std::to_string(k),
                             static_cast<long>(k));
  PrimitiveState v;
  v.rho = w.rho[k];
  v.u = w.mx[k] / w.rho[k];
  v.v = w.my[k] / w.rho[k];
  v.e = internal_energy(w.rho[k], w.mx[k], w.my[k], w.E[k], mach);
  v.pi = r.pi.empty() ? 0.0 : r.pi[k];
  v.psi = r.psi.empty() ? 0.0 : r.psi[k];
  return v;
}

void set_cell(ConservedField& w, std::size_t k, const PrimitiveState& v,
              double mach) {
  w.rho[k] = v.rho;
  w.mx[k] = v.rho * v.u;
  w.my[k] = v.rho * v.v;
  w.E[k] = v.rho * v.e +
           0.5 * mach * mach * v.rho * (v.u * v.u + v.v * v.v);
}

void check_admissible(const ConservedField& w, const Grid& g, double mach) {
  for (int j = g.jlo(); j < g.jhi(); ++j) {
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      if (!(w.rho[k] > 0.0))
        throw AdmissibilityError(
            "non-positive density at cell (" + std::to_string(i - Grid::ng) +
                "," + std::to_string(j - g.jlo()) + ")",
            static_cast<long>(k));
      const double e = internal_energy(w.rho[k], w.mx[k], w.my[k], w.E[k], mach);
      if (!(e > 0.0))
        throw AdmissibilityError(
            "non-positive internal energy at cell (" +
                std::to_string(i - Grid::ng) + "," +
                std::to_string(j - g.jlo()) + ")",
            static_cast<long>(k));
    }
  }
}

WellPreparedReport well_prepared_report(const ConservedField& w, const Grid& g,
                                        double mach, double gamma, double tol) {
  double rho_mean = 0.0, p_mean = 0.0;
  const double n = static_cast<double>(g.interior_count());
  std::vector<double> p(g.size(), 0.0);
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      const double e = internal_energy(w.rho[k], w.mx[k], w.my[k], w.E[k], mach);
      p[k] = pressure(w.rho[k], e, gamma);
      rho_mean += w.rho[k];
      p_mean += p[k];
    }
  rho_mean /= n;
  p_mean /= n;

  WellPreparedReport rep;
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      rep.rho_deviation = std::max(rep.rho_deviation,
                                   std::fabs(w.rho[k] - rho_mean));
      rep.p_deviation = std::max(rep.p_deviation,
                                 std::fabs(p[k] - p_mean) / p_mean);
    }

  // centered divergence of u needs one ghost layer of momenta
  ConservedField wg = w;
  fill_ghosts(g, wg);
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      double div = (wg.mx[k + 1] / wg.rho[k + 1] -
                    wg.mx[k - 1] / wg.rho[k - 1]) /
                   (2.0 * g.dx);
      if (g.dim == 2) {
        const std::size_t kn = g.idx(i, j + 1), ks = g.idx(i, j - 1);
        div += (wg.my[kn] / wg.rho[kn] - wg.my[ks] / wg.rho[ks]) / (2.0 * g.dy);
      }
      rep.max_divergence = std::max(rep.max_divergence, std::fabs(div));
    }

  rep.verdict = rep.rho_deviation <= tol * mach &&
                rep.p_deviation <= tol * mach * mach &&
                rep.max_divergence <= tol;
  return rep;
}

} // namespace lowmach
