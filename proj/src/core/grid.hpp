#ifndef LOWMACH_CORE_GRID_HPP
#define LOWMACH_CORE_GRID_HPP

#include <cstddef>
#include <span>

namespace lowmach {

enum class BoundaryKind { Periodic, ZeroGradient };

// Cartesian cell grid (1D or 2D) with a two-cell ghost frame on each side.
// Interior cells are i in [ng, ng+nx), j in [ng, ng+ny) (j = 0, sy = 1 in 1D).
struct Grid {
  int dim = 1;
  int nx = 0, ny = 1;
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
  double dx = 0.0, dy = 0.0;
  BoundaryKind bcx = BoundaryKind::ZeroGradient;
  BoundaryKind bcy = BoundaryKind::ZeroGradient;

  static constexpr int ng = 2;

  static Grid make_1d(int nx, double x0, double x1, BoundaryKind bc);
  static Grid make_2d(int nx, int ny, double x0, double x1, double y0,
                      double y1, BoundaryKind bcx, BoundaryKind bcy);

  int sx() const { return nx + 2 * ng; }
  int sy() const { return dim == 2 ? ny + 2 * ng : 1; }
  std::size_t size() const {
    return static_cast<std::size_t>(sx()) * static_cast<std::size_t>(sy());
  }
  std::size_t idx(int i, int j = 0) const {
    return static_cast<std::size_t>(j) * sx() + i;
  }
  double xc(int i) const { return x0 + (i - ng + 0.5) * dx; }
  double yc(int j) const { return dim == 2 ? y0 + (j - ng + 0.5) * dy : 0.0; }
  std::size_t interior_count() const {
    return static_cast<std::size_t>(nx) * (dim == 2 ? ny : 1);
  }
  double cell_volume() const { return dim == 2 ? dx * dy : dx; }
  double min_spacing() const { return dim == 2 ? (dx < dy ? dx : dy) : dx; }
  // first/last y index of interior rows (0 in 1D so loops work unchanged)
  int jlo() const { return dim == 2 ? ng : 0; }
  int jhi() const { return dim == 2 ? ng + ny : 1; }
};

// Fill the ghost frame of a cell array according to the grid's boundary kinds.
void apply_boundary(const Grid& g, std::span<double> a);

} // namespace lowmach

#endif
