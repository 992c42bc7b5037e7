#include "grid.hpp"

#include "errors.hpp"

namespace lowmach {

Grid Grid::make_1d(int nx, double x0, double x1, BoundaryKind bc) {
  if (nx < 3) throw ConfigError("grid: nx must be >= 3");
  if (!(x1 > x0)) throw ConfigError("grid: x1 must exceed x0");
  Grid g;
  g.dim = 1;
  g.nx = nx;
  g.ny = 1;
  g.x0 = x0;
  g.x1 = x1;
  g.dx = (x1 - x0) / nx;
  g.bcx = bc;
  return g;
}

Grid Grid::make_2d(int nx, int ny, double x0, double x1, double y0, double y1,
                   BoundaryKind bcx, BoundaryKind bcy) {
  if (nx < 3 || ny < 3) throw ConfigError("grid: nx and ny must be >= 3");
  if (!(x1 > x0) || !(y1 > y0)) throw ConfigError("grid: empty extent");
  Grid g;
  g.dim = 2;
  g.nx = nx;
  g.ny = ny;
  g.x0 = x0;
  g.x1 = x1;
  g.y0 = y0;
  g.y1 = y1;
  g.dx = (x1 - x0) / nx;
  g.dy = (y1 - y0) / ny;
  g.bcx = bcx;
  g.bcy = bcy;
  return g;
}

namespace {

void fill_x(const Grid& g, std::span<double> a, int j) {
  const int ng = Grid::ng;
  const std::size_t row = g.idx(0, j);
  double* p = a.data() + row;
  for (int k = 0; k < ng; ++k) {
    if (g.bcx == BoundaryKind::Periodic) {
      p[ng - 1 - k] = p[ng + g.nx - 1 - k];
      p[ng + g.nx + k] = p[ng + k];
    } else {
      p[ng - 1 - k] = p[ng];
      p[ng + g.nx + k] = p[ng + g.nx - 1];
    }
  }
}

} // namespace

void apply_boundary(const Grid& g, std::span<double> a) {
  const int ng = Grid::ng;
  if (g.dim == 1) {
    fill_x(g, a, 0);
    return;
  }
  for (int j = ng; j < ng + g.ny; ++j) fill_x(g, a, j);
  // y ghosts over every column, so the corner blocks are consistent too
  for (int i = 0; i < g.sx(); ++i) {
    for (int k = 0; k < ng; ++k) {
      if (g.bcy == BoundaryKind::Periodic) {
        a[g.idx(i, ng - 1 - k)] = a[g.idx(i, ng + g.ny - 1 - k)];
        a[g.idx(i, ng + g.ny + k)] = a[g.idx(i, ng + k)];
      } else {
        a[g.idx(i, ng - 1 - k)] = a[g.idx(i, ng)];
        a[g.idx(i, ng + g.ny + k)] = a[g.idx(i, ng + g.ny - 1)];
      }
    }
  }
}

} // namespace lowmach
