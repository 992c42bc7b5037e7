#include "snapshot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "eos.hpp"
#include "errors.hpp"

namespace lowmach {

Snapshot make_snapshot(const State& s, double mach, double gamma,
                       const RefScaling* scale) {
  const Grid& g = s.grid;
  Snapshot snap;
  snap.dim = g.dim;
  snap.nx = g.nx;
  snap.ny = g.dim == 2 ? g.ny : 1;
  snap.t = s.t;
  const std::size_t n = g.interior_count();
  snap.x.reserve(n);
  snap.y.reserve(n);
  snap.rho.reserve(n);
  snap.u.reserve(n);
  snap.v.reserve(n);
  snap.p.reserve(n);

  RefScaling r;
  if (scale) r = *scale;
  snap.t *= r.t_r;
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      const double rho = s.w.rho[k];
      const double u = s.w.mx[k] / rho;
      const double v = s.w.my[k] / rho;
      const double e = internal_energy(rho, s.w.mx[k], s.w.my[k], s.w.E[k],
                                       mach);
      const double p = pressure(rho, e, gamma);
      const double c = sound_speed(rho, p, gamma);
      snap.x.push_back(g.xc(i) * r.x_r);
      snap.y.push_back(g.yc(j) * r.x_r);
      snap.rho.push_back(rho * r.rho_r);
      snap.u.push_back(u * r.u_r);
      snap.v.push_back(v * r.u_r);
      snap.p.push_back(p * r.p_r);
      snap.e.push_back(e * r.c_r * r.c_r);
      snap.mach_local.push_back(mach * std::sqrt(u * u + v * v) / c);
    }
  return snap;
}

void write_csv(const Snapshot& snap, std::ostream& os) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "# t = %.17g\n", snap.t);
  os << buf;
  os << (snap.dim == 2 ? "x,y,rho,u,v,p,e,mach_local\n"
                       : "x,rho,u,p,e,mach_local\n");
  for (std::size_t k = 0; k < snap.size(); ++k) {
    if (snap.dim == 2)
      std::snprintf(buf, sizeof buf,
                    "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    snap.x[k], snap.y[k], snap.rho[k], snap.u[k], snap.v[k],
                    snap.p[k], snap.e[k], snap.mach_local[k]);
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    snap.x[k], snap.rho[k], snap.u[k], snap.p[k], snap.e[k],
                    snap.mach_local[k]);
    os << buf;
  }
}

Snapshot read_csv(std::istream& is) {
  Snapshot snap;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq != std::string::npos && line.find("t") < eq)
        snap.t = std::strtod(line.c_str() + eq + 1, nullptr);
      continue;
    }
    if (!have_header) {
      snap.dim = line.find(",y,") != std::string::npos ? 2 : 1;
      have_header = true;
      continue;
    }
    std::istringstream row(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(row, cell, ','))
      vals.push_back(std::strtod(cell.c_str(), nullptr));
    const std::size_t want = snap.dim == 2 ? 8u : 6u;
    if (vals.size() != want)
      throw IoError("snapshot row has " + std::to_string(vals.size()) +
                    " columns, expected " + std::to_string(want));
    std::size_t c = 0;
    snap.x.push_back(vals[c++]);
    snap.y.push_back(snap.dim == 2 ? vals[c++] : 0.0);
    snap.rho.push_back(vals[c++]);
    snap.u.push_back(vals[c++]);
    snap.v.push_back(snap.dim == 2 ? vals[c++] : 0.0);
    snap.p.push_back(vals[c++]);
    snap.e.push_back(vals[c++]);
    snap.mach_local.push_back(vals[c++]);
  }
  if (!have_header) throw IoError("snapshot file has no header");
  // infer the grid shape from the coordinate pattern
  if (snap.dim == 2) {
    std::size_t nx = 1;
    while (nx < snap.size() && snap.y[nx] == snap.y[0]) ++nx;
    snap.nx = static_cast<int>(nx);
    snap.ny = static_cast<int>(snap.size() / nx);
    if (snap.nx * static_cast<std::size_t>(snap.ny) != snap.size())
      throw IoError("snapshot is not a full rectangular grid");
  } else {
    snap.nx = static_cast<int>(snap.size());
    snap.ny = 1;
  }
  return snap;
}

void write_vtk(const Snapshot& snap, std::ostream& os) {
  char buf[96];
  const double dx = snap.nx > 1 ? snap.x[1] - snap.x[0] : 1.0;
  const double dy =
      snap.dim == 2 && snap.ny > 1 ? snap.y[snap.nx] - snap.y[0] : 1.0;
  os << "# vtk DataFile Version 3.0\n";
  std::snprintf(buf, sizeof buf, "t = %.17g\n", snap.t);
  os << buf << "ASCII\nDATASET STRUCTURED_POINTS\n";
  os << "DIMENSIONS " << snap.nx << " " << snap.ny << " 1\n";
  std::snprintf(buf, sizeof buf, "ORIGIN %.17g %.17g 0\n", snap.x[0],
                snap.dim == 2 ? snap.y[0] : 0.0);
  os << buf;
  std::snprintf(buf, sizeof buf, "SPACING %.17g %.17g 1\n", dx, dy);
  os << buf;
  os << "POINT_DATA " << snap.size() << "\n";

  auto scalar = [&](const char* name, const std::vector<double>& f) {
    os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (double v : f) {
      std::snprintf(buf, sizeof buf, "%.17g\n", v);
      os << buf;
    }
  };
  scalar("rho", snap.rho);
  scalar("u", snap.u);
  if (snap.dim == 2) scalar("v", snap.v);
  scalar("p", snap.p);
  scalar("e", snap.e);
  scalar("mach_local", snap.mach_local);
}

void write_snapshot_file(const Snapshot& snap, const std::string& path,
                         const std::string& format) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  if (format == "vtk") write_vtk(snap, f);
  else if (format == "csv") write_csv(snap, f);
  else throw ConfigError("format: must be csv or vtk");
  if (!f) throw IoError("write failed for '" + path + "'");
}

Snapshot read_snapshot_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open snapshot file '" + path + "'");
  return read_csv(f);
}

} // namespace lowmach
