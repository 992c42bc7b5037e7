#include "reconstruct.hpp"

namespace lowmach {

double minmod(double x, double y) {
  if (x >= 0.0 && y >= 0.0) return x < y ? x : y;
  if (x <= 0.0 && y <= 0.0) return x > y ? x : y;
  return 0.0;
}

namespace {

void slopes_of(const std::vector<double>& a, std::vector<double>& s,
               const Grid& g, int axis) {
  s.assign(a.size(), 0.0);
  const double h = axis == 0 ? g.dx : g.dy;
  const std::ptrdiff_t stride = axis == 0 ? 1 : g.sx();
  const int ilo = axis == 0 ? 1 : 0, ihi = axis == 0 ? g.sx() - 1 : g.sx();
  const int jlo = axis == 0 ? 0 : 1, jhi = axis == 0 ? g.sy() : g.sy() - 1;
  for (int j = jlo; j < jhi; ++j)
    for (int i = ilo; i < ihi; ++i) {
      const std::size_t k = g.idx(i, j);
      s[k] = minmod((a[k] - a[k - stride]) / h, (a[k + stride] - a[k]) / h);
    }
}

} // namespace

SlopeField compute_slopes(const ConservedField& w, const RelaxationField& r,
                          const Grid& g, int axis) {
  SlopeField s;
  slopes_of(w.rho, s.rho, g, axis);
  slopes_of(w.mx, s.mx, g, axis);
  slopes_of(w.my, s.my, g, axis);
  slopes_of(w.E, s.E, g, axis);
  slopes_of(r.psi, s.psi, g, axis);
  return s;
}

} // namespace lowmach
