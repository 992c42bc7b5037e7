#ifndef LOWMACH_CORE_IMPLICIT_HPP
#define LOWMACH_CORE_IMPLICIT_HPP

#include <iosfwd>
#include <vector>

#include "fields.hpp"
#include "grid.hpp"

namespace lowmach {

// Sparse banded system for the implicit fast-pressure update:
//   psi_i - (dt^2 a^2 / M^2) tau_i div(tau grad psi)_i = rhs_i
// discretized with centered differences (3-point stencil in 1D, 5-point in
// 2D). Unknowns are the interior cells, row-major k = j*nx + i. Zero-gradient
// boundaries fold the ghost coupling into the diagonal at assembly; periodic
// boundaries wrap in matvec and in the solver.
struct EllipticSystem {
  int nx = 0, ny = 1;
  BoundaryKind bcx = BoundaryKind::ZeroGradient;
  BoundaryKind bcy = BoundaryKind::ZeroGradient;
  std::vector<double> diag, cw, ce, cs, cn;
  std::vector<double> rhs;

  std::size_t n() const { return rhs.size(); }
  void matvec(const std::vector<double>& x, std::vector<double>& y) const;
  double relative_residual(const std::vector<double>& x) const;
  // plain-text triplet dump (row col value, then the RHS) for external checks
  void dump(std::ostream& os) const;
};

EllipticSystem assemble_psi_system(const ConservedField& w,
                                   const RelaxationField& r, const Grid& g,
                                   double mach, double a, double dt);

struct LinearSolveReport {
  int iterations = 0;
  double residual = 0.0;
};

// Direct banded solve in 1D (Thomas; periodic via Sherman-Morrison),
// ILUT-preconditioned GMRES(30) in 2D. Throws SolverError on non-convergence.
LinearSolveReport solve_psi_system(const EllipticSystem& sys,
                                   std::vector<double>& psi, double tol,
                                   int max_iter);

// Full implicit step: returns the relaxation field with psi replaced by
// psi^(1) (ghosts refreshed); pi and the physical variables are untouched.
RelaxationField implicit_step(const ConservedField& w, const RelaxationField& r,
                              const Grid& g, double mach, double a, double dt,
                              double tol, int max_iter,
                              LinearSolveReport* report = nullptr);

} // namespace lowmach

#endif
