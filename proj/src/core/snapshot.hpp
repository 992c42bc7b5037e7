#ifndef LOWMACH_CORE_SNAPSHOT_HPP
#define LOWMACH_CORE_SNAPSHOT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cases.hpp"
#include "integrator.hpp"

namespace lowmach {

// Point-sampled primitive output (cell centers, row-major). u/v and p are
// non-dimensional unless the snapshot was built with a scaling.
struct Snapshot {
  int dim = 1;
  int nx = 0, ny = 1;
  double t = 0.0;
  // mach_local = M |u_hat| / c_hat is dimensionless and never rescaled
  std::vector<double> x, y, rho, u, v, p, e, mach_local;

  std::size_t size() const { return rho.size(); }
};

// scale == nullptr keeps non-dimensional values; otherwise multiplies by the
// reference quantities (x_r, rho_r, u_r, p_r, t_r).
Snapshot make_snapshot(const State& s, double mach, double gamma,
                       const RefScaling* scale = nullptr);

// CSV with a "# t = ..." preamble and an x[,y],rho,u[,v],p,e,mach_local
// header; full double precision.
void write_csv(const Snapshot& snap, std::ostream& os);
Snapshot read_csv(std::istream& is);

// Legacy-format VTK structured points with one scalar block per field.
void write_vtk(const Snapshot& snap, std::ostream& os);

// Dispatch on format ("csv" or "vtk"); throws IoError if the file cannot be
// opened.
void write_snapshot_file(const Snapshot& snap, const std::string& path,
                         const std::string& format);
Snapshot read_snapshot_file(const std::string& path);

} // namespace lowmach

#endif
