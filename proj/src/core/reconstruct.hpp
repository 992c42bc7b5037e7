#ifndef LOWMACH_CORE_RECONSTRUCT_HPP
#define LOWMACH_CORE_RECONSTRUCT_HPP

#include <vector>

#include "fields.hpp"
#include "grid.hpp"

namespace lowmach {

// minmod(x,y): min if both non-negative, max if both non-positive, else 0.
double minmod(double x, double y);

// Limited slopes per cell for one axis: conserved variables plus psi.
struct SlopeField {
  std::vector<double> rho, mx, my, E, psi;
};

// Slopes from one-sided divided differences of the neighbouring cells.
// Requires filled ghosts; slopes are available one ghost layer deep.
SlopeField compute_slopes(const ConservedField& w, const RelaxationField& r,
                          const Grid& g, int axis);

} // namespace lowmach

#endif
