#include "cases.hpp"

#include <cmath>

#include "eos.hpp"
#include "errors.hpp"

namespace lowmach {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double gresho_u_phi(double r) {
  if (r < 0.2) return 5.0 * r;
  if (r < 0.4) return 2.0 - 5.0 * r;
  return 0.0;
}

double gresho_pressure(double r, double p0) {
  if (r < 0.2) return p0 + 12.5 * r * r;
  if (r < 0.4)
    return p0 + 12.5 * r * r +
           4.0 * (1.0 - 5.0 * r - std::log(0.2) + std::log(r));
  return p0 - 2.0 + 4.0 * std::log(2.0);
}

double smooth_gresho_u_phi(double r) {
  if (r < 0.2) return 75.0 * r * r - 250.0 * r * r * r;
  if (r < 0.4)
    return -4.0 + 60.0 * r - 225.0 * r * r + 250.0 * r * r * r;
  return 0.0;
}

double smooth_gresho_pressure(double r, double p0) {
  const double c6 = 10416.0 + 2.0 / 3.0;
  auto p2 = [&](double s) {
    return 65.8843399322788 - 480.0 * s + 2700.0 * s * s -
           (9666.0 + 2.0 / 3.0) * s * s * s + 20156.25 * s * s * s * s -
           22500.0 * std::pow(s, 5) + c6 * std::pow(s, 6) + 16.0 * std::log(s);
  };
  if (r < 0.2)
    return p0 + 1406.25 * std::pow(r, 4) - 7500.0 * std::pow(r, 5) +
           c6 * std::pow(r, 6);
  if (r < 0.4) return p0 + p2(r);
  return p0 + p2(0.4);
}

CaseSpec init_sod() {
  CaseSpec c;
  c.name = "sod";
  c.dim = 1;
  c.gamma = 1.4;
  c.mach = 1.0;
  c.t_end = 0.1644;
  c.bcx = BoundaryKind::ZeroGradient;
  c.init = [](double x, double) -> std::array<double, 4> {
    if (x < 0.5) return {1.0, 0.0, 0.0, 1.0};
    return {0.125, 0.0, 0.0, 0.1};
  };
  return c;
}

CaseSpec init_mach_shock(double mach) {
  if (!(mach > 0.0)) throw ConfigError("mach_shock: mach must be positive");
  CaseSpec c;
  c.name = "mach_shock";
  c.dim = 1;
  c.gamma = 1.4;
  c.mach = mach;
  // dimensional end time 0.25 s with t_r = x_r/u_r = (1/M) s
  c.t_end = 0.25 * mach;
  c.bcx = BoundaryKind::ZeroGradient;
  c.ref.u_r = mach;
  c.ref.c_r = 1.0;
  c.ref.t_r = 1.0 / mach;
  c.ref.p_r = 1.0;
  const double u_right = 0.008 / mach;
  c.init = [u_right](double x, double) -> std::array<double, 4> {
    if (x < 0.5) return {1.0, 0.0, 0.0, 0.4};
    return {1.0, u_right, 0.0, 0.399};
  };
  return c;
}

namespace {

CaseSpec vortex_common(const std::string& name, double mach) {
  if (!(mach > 0.0) || mach > 1.0)
    throw ConfigError(name + ": mach must be in (0, 1]");
  CaseSpec c;
  c.name = name;
  c.dim = 2;
  c.gamma = 5.0 / 3.0;
  c.mach = mach;
  c.bcx = c.bcy = BoundaryKind::Periodic;
  const double ur = 2.0 * 0.2 * kPi;
  c.ref.u_r = ur;
  c.ref.c_r = ur / mach;
  c.ref.t_r = 1.0 / ur;
  c.ref.p_r = c.ref.c_r * c.ref.c_r;
  return c;
}

std::function<std::array<double, 4>(double, double)>
vortex_init(double mach, double gamma, double (*u_phi)(double),
            double (*pprof)(double, double)) {
  const double ur = 2.0 * 0.2 * kPi;
  const double p0 = 1.0 / (gamma * mach * mach);
  const double pscale = mach * mach / (ur * ur);
  return [=](double x, double y) -> std::array<double, 4> {
    const double rx = x - 0.5, ry = y - 0.5;
    const double r = std::sqrt(rx * rx + ry * ry);
    const double up = u_phi(r);
    double u = 0.0, v = 0.0;
    if (r > 0.0) {
      u = -up * ry / r / ur;
      v = up * rx / r / ur;
    }
    return {1.0, u, v, pprof(r, p0) * pscale};
  };
}

} // namespace

CaseSpec init_gresho(double mach) {
  CaseSpec c = vortex_common("gresho", mach);
  c.t_end = 1.0;
  c.init = vortex_init(mach, c.gamma, &gresho_u_phi, &gresho_pressure);
  return c;
}

CaseSpec init_smooth_gresho(double mach) {
  CaseSpec c = vortex_common("smooth_gresho", mach);
  c.t_end = 0.05;
  c.init =
      vortex_init(mach, c.gamma, &smooth_gresho_u_phi, &smooth_gresho_pressure);
  return c;
}

CaseSpec init_uniform(double mach, double gamma) {
  CaseSpec c;
  c.name = "uniform";
  c.dim = 1;
  c.gamma = gamma;
  c.mach = mach;
  c.t_end = 0.0;
  c.bcx = BoundaryKind::Periodic;
  c.init = [](double, double) -> std::array<double, 4> {
    return {1.0, 0.0, 0.0, 1.0};
  };
  return c;
}

CaseSpec make_case(const std::string& name, double mach) {
  if (name == "sod") return init_sod();
  if (name == "mach_shock") return init_mach_shock(mach);
  if (name == "gresho") return init_gresho(mach);
  if (name == "smooth_gresho") return init_smooth_gresho(mach);
  if (name == "uniform" || name == "custom") return init_uniform(mach, 1.4);
  throw ConfigError("case: unknown case '" + name + "'");
}

State initialize(const CaseSpec& spec, int nx, int ny) {
  Grid g = spec.dim == 2
               ? Grid::make_2d(nx, ny, spec.x0, spec.x1, spec.y0, spec.y1,
                               spec.bcx, spec.bcy)
               : Grid::make_1d(nx, spec.x0, spec.x1, spec.bcx);
  State s(g);
  for (int j = g.jlo(); j < g.jhi(); ++j)
    for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
      const auto [rho, u, v, p] = spec.init(g.xc(i), g.yc(j));
      PrimitiveState prim;
      prim.rho = rho;
      prim.u = u;
      prim.v = v;
      prim.e = p / ((spec.gamma - 1.0) * rho);
      set_cell(s.w, g.idx(i, j), prim, spec.mach);
    }
  fill_ghosts(g, s.w);
  project_to_equilibrium(s.w, s.relax, g, spec.gamma, spec.mach);
  return s;
}

} // namespace lowmach
