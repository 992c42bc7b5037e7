#ifndef LOWMACH_CORE_DIAGNOSTICS_HPP
#define LOWMACH_CORE_DIAGNOSTICS_HPP

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

#include "fields.hpp"
#include "grid.hpp"

namespace lowmach {

// Volume-weighted interior sums of (rho, mx, my, E); drift in these measures
// conservation of the update.
std::array<double, 4> conserved_totals(const ConservedField& w, const Grid& g);

// Integral of 0.5 rho |u|^2 over the interior (non-dimensional velocities).
double kinetic_energy(const ConservedField& w, const Grid& g);

// max |p - mean(p)| / mean(p) over interior cells.
double pressure_fluctuation(const ConservedField& w, const Grid& g, double mach,
                            double gamma);

// max |centered div u| over interior cells (ghosts must be filled).
double max_divergence(const ConservedField& w, const Grid& g);

// Volume-weighted L1 norm of (field - ref) over interior cells.
double l1_error(const std::vector<double>& field, const Grid& g,
                const std::function<double(double, double)>& ref);
double l1_error(const std::vector<double>& f1, const std::vector<double>& f2,
                const Grid& g);

// rates[k] = log(err[k]/err[k+1]) / log(n[k+1]/n[k]).
std::vector<double> convergence_rates(const std::vector<double>& errors,
                                      const std::vector<int>& resolutions);

// First d+2 components of the numerical diffusion at an interface:
//   D = (F(vl) + F(vr))/2 - F_num
// where F_num evaluates the flux at the sampled fan state. With
// naive_fast_pressure the fast pressure is replaced by the slow one
// throughout, which reintroduces an O(a du / M^2) momentum diffusion.
struct DiffusionVector {
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;
};

DiffusionVector numerical_diffusion(const PrimitiveState& vl,
                                    const PrimitiveState& vr, double a,
                                    double mach, bool naive_fast_pressure);

// One resolution of a convergence study at a fixed Mach number.
struct ConvergenceRow {
  double mach = 0.0;
  int n = 0;
  double err_rho = 0.0, err_u1 = 0.0, err_u2 = 0.0, err_p = 0.0;
};

// CSV table M,N,err_*,rate_* with rates between consecutive rows of the same
// Mach number (blank on the first row of each block). Throws ConfigError on
// empty input.
void emit_convergence_table(const std::vector<ConvergenceRow>& rows,
                            std::ostream& os);

// Scalar time series (t, value) with a two-column CSV writer.
struct TimeSeries {
  std::vector<double> t, value;
  void append(double time, double v);
  void write_csv(std::ostream& os, const char* value_name) const;
};

} // namespace lowmach

#endif
