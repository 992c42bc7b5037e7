#include "diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "eos.hpp"
#include "errors.hpp"
#include "riemann.hpp"

namespace lowmach {

std::array<double, 4> conserved_totals(const ConservedField& w, const Grid& g) {
  std::array<double, 4> s{0.0, 0.0, 0.0, 0.0};
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      s[0] += w.rho[k];
      s[1] += w.mx[k];
      s[2] += w.my[k];
      s[3] += w.E[k];
    }
  const double vol = g.cell_volume();
  for (double& v : s) v *= vol;
  return s;
}

double kinetic_energy(const ConservedField& w, const Grid& g) {
  double s = 0.0;
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      s += 0.5 * (w.mx[k] * w.mx[k] + w.my[k] * w.my[k]) / w.rho[k];
    }
  return s * g.cell_volume();
}

double pressure_fluctuation(const ConservedField& w, const Grid& g, double mach,
                            double gamma) {
  double mean = 0.0;
  std::vector<double> p;
  p.reserve(g.interior_count());
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      const double e = internal_energy(w.rho[k], w.mx[k], w.my[k], w.E[k], mach);
      p.push_back(pressure(w.rho[k], e, gamma));
      mean += p.back();
    }
  mean /= static_cast<double>(p.size());
  double dev = 0.0;
  for (double v : p) dev = std::max(dev, std::fabs(v - mean));
  return dev / mean;
}

double max_divergence(const ConservedField& w, const Grid& g) {
  double d = 0.0;
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const std::size_t k = g.idx(i, j);
      double div = (w.mx[k + 1] / w.rho[k + 1] - w.mx[k - 1] / w.rho[k - 1]) /
                   (2.0 * g.dx);
      if (g.dim == 2) {
        const std::size_t kn = g.idx(i, j + 1), ks = g.idx(i, j - 1);
        div += (w.my[kn] / w.rho[kn] - w.my[ks] / w.rho[ks]) / (2.0 * g.dy);
      }
      d = std::max(d, std::fabs(div));
    }
  return d;
}

double l1_error(const std::vector<double>& field, const Grid& g,
                const std::function<double(double, double)>& ref) {
  double s = 0.0;
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i)
      s += std::fabs(field[g.idx(i, j)] - ref(g.xc(i), g.yc(j)));
  return s * g.cell_volume();
}

double l1_error(const std::vector<double>& f1, const std::vector<double>& f2,
                const Grid& g) {
  double s = 0.0;
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i)
      s += std::fabs(f1[g.idx(i, j)] - f2[g.idx(i, j)]);
  return s * g.cell_volume();
}

std::vector<double> convergence_rates(const std::vector<double>& errors,
                                      const std::vector<int>& resolutions) {
  if (errors.size() != resolutions.size())
    throw ConfigError("convergence_rates: size mismatch");
  std::vector<double> rates;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k)
    rates.push_back(std::log(errors[k] / errors[k + 1]) /
                    std::log(double(resolutions[k + 1]) / resolutions[k]));
  return rates;
}

namespace {

std::array<double, 3> physical_flux(const PrimitiveState& s, double mach,
                                    bool naive) {
  const double m2 = mach * mach;
  const double fast = (1.0 - m2) / m2;
  const double psi = naive ? s.pi : s.psi;
  const double E = s.rho * s.e + 0.5 * m2 * s.rho * (s.u * s.u + s.v * s.v);
  return {s.rho * s.u, s.rho * s.u * s.u + s.pi + fast * psi,
          s.u * (E + m2 * s.pi + (1.0 - m2) * psi)};
}

} // namespace

DiffusionVector numerical_diffusion(const PrimitiveState& vl,
                                    const PrimitiveState& vr, double a,
                                    double mach, bool naive_fast_pressure) {
  const auto fl = physical_flux(vl, mach, naive_fast_pressure);
  const auto fr = physical_flux(vr, mach, naive_fast_pressure);
  const PrimitiveState s = sample_fan(solve_riemann(vl, vr, a, mach));
  const auto fn = physical_flux(s, mach, naive_fast_pressure);

  DiffusionVector d;
  d.mass = 0.5 * (fl[0] + fr[0]) - fn[0];
  d.momentum = 0.5 * (fl[1] + fr[1]) - fn[1];
  d.energy = 0.5 * (fl[2] + fr[2]) - fn[2];
  return d;
}

void emit_convergence_table(const std::vector<ConvergenceRow>& rows,
                            std::ostream& os) {
  if (rows.empty())
    throw ConfigError("convergence table: no results");
  os << "M,N,err_rho,rate_rho,err_u1,rate_u1,err_u2,rate_u2,err_p,rate_p\n";
  char buf[64];
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const ConvergenceRow& r = rows[k];
    const bool rated =
        k > 0 && rows[k - 1].mach == r.mach && rows[k - 1].n < r.n;
    const double lr = rated ? std::log(double(r.n) / rows[k - 1].n) : 1.0;
    std::snprintf(buf, sizeof buf, "%g,%d", r.mach, r.n);
    os << buf;
    const double errs[4] = {r.err_rho, r.err_u1, r.err_u2, r.err_p};
    const double prev[4] = {rows[k ? k - 1 : 0].err_rho,
                            rows[k ? k - 1 : 0].err_u1,
                            rows[k ? k - 1 : 0].err_u2,
                            rows[k ? k - 1 : 0].err_p};
    for (int v = 0; v < 4; ++v) {
      std::snprintf(buf, sizeof buf, ",%.6e", errs[v]);
      os << buf;
      if (rated && errs[v] > 0.0 && prev[v] > 0.0) {
        std::snprintf(buf, sizeof buf, ",%.3f", std::log(prev[v] / errs[v]) / lr);
        os << buf;
      } else {
        os << ",";
      }
    }
    os << "\n";
  }
}

void TimeSeries::append(double time, double v) {
  t.push_back(time);
  value.push_back(v);
}

void TimeSeries::write_csv(std::ostream& os, const char* value_name) const {
  os << "t," << value_name << "\n";
  char buf[64];
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", t[k], value[k]);
    os << buf;
  }
}

} // namespace lowmach
