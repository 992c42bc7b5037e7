#ifndef LOWMACH_CORE_FIELDS_HPP
#define LOWMACH_CORE_FIELDS_HPP

#include <vector>

#include "grid.hpp"

namespace lowmach {

// Cell-averaged physical conserved variables (non-dimensional).
// my is allocated in 1D as well but stays zero there.
struct ConservedField {
  std::vector<double> rho, mx, my, E;

  ConservedField() = default;
  explicit ConservedField(const Grid& g)
      : rho(g.size(), 0.0), mx(g.size(), 0.0), my(g.size(), 0.0),
        E(g.size(), 0.0) {}
};

// Relaxed slow (pi) and fast (psi) pressure, co-located with ConservedField.
struct RelaxationField {
  std::vector<double> pi, psi;

  RelaxationField() = default;
  explicit RelaxationField(const Grid& g)
      : pi(g.size(), 0.0), psi(g.size(), 0.0) {}
};

// One cell or interface value in primitive variables. The relaxation
// velocity u_hat is never stored; nothing in the scheme needs it.
struct PrimitiveState {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double e = 0.0;
  double pi = 0.0;
  double psi = 0.0;
};

void fill_ghosts(const Grid& g, ConservedField& w);
void fill_ghosts(const Grid& g, RelaxationField& r);

// e = (E - 0.5 M^2 rho |u|^2) / rho; throws AdmissibilityError on rho <= 0.
PrimitiveState cell_primitive(const ConservedField& w, const RelaxationField& r,
                              std::size_t k, double mach);
// Inverse of cell_primitive for the physical variables.
void set_cell(ConservedField& w, std::size_t k, const PrimitiveState& v,
              double mach);

// Throws AdmissibilityError naming the first offending interior cell.
void check_admissible(const ConservedField& w, const Grid& g, double mach);

double internal_energy(double rho, double mx, double my, double E, double mach);

struct WellPreparedReport {
  double rho_deviation = 0.0;  // max |rho - mean(rho)|
  double p_deviation = 0.0;    // max |p - mean(p)| / mean(p)
  double max_divergence = 0.0; // max |centered div u| over interior cells
  bool verdict = false;
};

// Diagnostic only: deviations must scale as O(M), O(M^2) for well-prepared
// data; verdict compares against tol*M, tol*M^2 and tol for the divergence.
WellPreparedReport well_prepared_report(const ConservedField& w, const Grid& g,
                                        double mach, double gamma, double tol);

} // namespace lowmach

#endif
