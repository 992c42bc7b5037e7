#include <cmath>
#include <random>

#include "core/diagnostics.hpp"
#include "core/eos.hpp"
#include "core/fields.hpp"
#include "core/implicit.hpp"
#include "core/riemann.hpp"
#include "doctest.h"

using namespace lowmach;

namespace {
constexpr double kPi = 3.14159265358979323846;

void fill_uniform(ConservedField& w, RelaxationField& r, const Grid& g,
                  double rho, double u, double e, double gamma, double mach) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    set_cell(w, k, {rho, u, 0.0, e, 0.0, 0.0}, mach);
  }
  project_to_equilibrium(w, r, g, gamma, mach);
}

} // namespace

TEST_CASE("uniform state: psi unchanged") {
  Grid g = Grid::make_1d(32, 0.0, 1.0, BoundaryKind::Periodic);
  ConservedField w(g);
  RelaxationField r(g);
  fill_uniform(w, r, g, 1.0, 0.3, 2.5, 1.4, 1e-2);
  RelaxationField out = implicit_step(w, r, g, 1e-2, 2.0, 0.01, 1e-12, 500);
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK(out.psi[k] == doctest::Approx(r.psi[k]).epsilon(1e-12));
    CHECK(out.pi[k] == r.pi[k]);
  }
}

TEST_CASE("1D periodic row structure with unit specific volume") {
  // tau = 1 everywhere: each row must be [-beta, 1 + 2 beta, -beta]
  Grid g = Grid::make_1d(8, 0.0, 1.0, BoundaryKind::Periodic);
  ConservedField w(g);
  RelaxationField r(g);
  fill_uniform(w, r, g, 1.0, 0.0, 2.5, 1.4, 0.1);
  const double a = 1.3, dt = 0.02, mach = 0.1;
  const double beta = dt * dt * a * a / (mach * mach * g.dx * g.dx);
  EllipticSystem sys = assemble_psi_system(w, r, g, mach, a, dt);
  REQUIRE(sys.n() == 8);
  std::vector<double> e(8, 0.0), y(8, 0.0);
  e[3] = 1.0;
  sys.matvec(e, y);
  CHECK(y[3] == doctest::Approx(1.0 + 2.0 * beta).epsilon(1e-13));
  CHECK(y[2] == doctest::Approx(-beta).epsilon(1e-13));
  CHECK(y[4] == doctest::Approx(-beta).epsilon(1e-13));
  CHECK(y[5] == doctest::Approx(0.0).epsilon(1e-15));
  // periodic wrap
  e.assign(8, 0.0);
  e[0] = 1.0;
  sys.matvec(e, y);
  CHECK(y[7] == doctest::Approx(-beta).epsilon(1e-13));
}

TEST_CASE("manufactured eigenfunction of the discrete operator") {
  Grid g = Grid::make_1d(64, 0.0, 1.0, BoundaryKind::Periodic);
  ConservedField w(g);
  RelaxationField r(g);
  fill_uniform(w, r, g, 1.0, 0.0, 2.5, 1.4, 0.1);
  const double a = 1.3, dt = 0.02, mach = 0.1, tol = 1e-12;
  const double beta = dt * dt * a * a / (mach * mach * g.dx * g.dx);
  EllipticSystem sys = assemble_psi_system(w, r, g, mach, a, dt);
  const double lam = 1.0 + beta * (2.0 - 2.0 * std::cos(2.0 * kPi * g.dx));
  for (int i = 0; i < 64; ++i)
    sys.rhs[i] = lam * std::sin(2.0 * kPi * g.xc(Grid::ng + i));
  std::vector<double> psi(64, 0.0);
  solve_psi_system(sys, psi, tol, 500);
  for (int i = 0; i < 64; ++i)
    CHECK(psi[i] == doctest::Approx(std::sin(2.0 * kPi * g.xc(Grid::ng + i)))
                        .epsilon(1e-10)
                        .scale(1.0));
}

TEST_CASE("dt -> 0 leaves psi exact") {
  Grid g = Grid::make_1d(16, 0.0, 1.0, BoundaryKind::ZeroGradient);
  ConservedField w(g);
  RelaxationField r(g);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> d(0.5, 2.0);
  for (std::size_t k = 0; k < g.size(); ++k)
    set_cell(w, k, {d(rng), d(rng) - 1.25, 0.0, d(rng) + 1.0, 0.0, 0.0}, 1.0);
  fill_ghosts(g, w);
  project_to_equilibrium(w, r, g, 1.4, 1.0);
  RelaxationField out = implicit_step(w, r, g, 1.0, 2.0, 0.0, 1e-12, 500);
  for (std::size_t k = 0; k < g.size(); ++k)
    CHECK(out.psi[k] == doctest::Approx(r.psi[k]).epsilon(1e-13));
}

TEST_CASE("residual oracle on a random instance") {
  Grid g = Grid::make_1d(50, 0.0, 1.0, BoundaryKind::ZeroGradient);
  ConservedField w(g);
  RelaxationField r(g);
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> d(0.5, 3.0);
  for (std::size_t k = 0; k < g.size(); ++k)
    set_cell(w, k, {d(rng), 0.5 * (d(rng) - 1.75), 0.0, d(rng), 0.0, 0.0},
             1e-2);
  fill_ghosts(g, w);
  project_to_equilibrium(w, r, g, 1.4, 1e-2);
  EllipticSystem sys = assemble_psi_system(w, r, g, 1e-2, 3.5, 0.004);
  std::vector<double> psi(sys.n(), 0.0);
  LinearSolveReport rep = solve_psi_system(sys, psi, 1e-11, 500);
  CHECK(sys.relative_residual(psi) <= 1e-10);
  CHECK(rep.residual <= 1e-10);
}

TEST_CASE("maximum principle at zero divergence") {
  Grid g = Grid::make_1d(40, 0.0, 1.0, BoundaryKind::Periodic);
  ConservedField w(g);
  RelaxationField r(g);
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> d(1.0, 2.0);
  for (std::size_t k = 0; k < g.size(); ++k)
    set_cell(w, k, {d(rng), 0.25, 0.0, d(rng), 0.0, 0.0}, 1e-1);
  fill_ghosts(g, w);
  project_to_equilibrium(w, r, g, 1.4, 1e-1);
  fill_ghosts(g, r);
  double lo = 1e300, hi = -1e300;
  for (int i = Grid::ng; i < Grid::ng + 40; ++i) {
    lo = std::min(lo, r.psi[i]);
    hi = std::max(hi, r.psi[i]);
  }
  RelaxationField out = implicit_step(w, r, g, 1e-1, 3.0, 0.01, 1e-12, 500);
  for (int i = Grid::ng; i < Grid::ng + 40; ++i) {
    CHECK(out.psi[i] >= lo - 1e-10);
    CHECK(out.psi[i] <= hi + 1e-10);
  }
}

TEST_CASE("mesh convergence of the discrete solve") {
  // variable-coefficient manufactured solution on a periodic domain:
  // rho(x) = 1/(2 + cos(2 pi x)), psi_exact = sin(2 pi x); the continuous
  // rhs is psi - (dt a / M)^2 tau (tau psi')' evaluated analytically
  const double a = 1.1, dt = 0.015, mach = 0.25;
  const double kap = dt * a / mach;
  std::vector<double> errs;
  std::vector<int> res;
  for (int n : {32, 64, 128, 256}) {
    Grid g = Grid::make_1d(n, 0.0, 1.0, BoundaryKind::Periodic);
    ConservedField w(g);
    RelaxationField r(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
      // index back to a coordinate (ghosts wrap periodically)
      const double x = g.x0 + (static_cast<double>(static_cast<int>(k)) -
                               Grid::ng + 0.5) *
                                  g.dx;
      const double rho = 1.0 / (2.0 + std::cos(2.0 * kPi * x));
      set_cell(w, k, {rho, 0.0, 0.0, 2.5, 0.0, 0.0}, mach);
    }
    project_to_equilibrium(w, r, g, 1.4, mach);
    EllipticSystem sys = assemble_psi_system(w, r, g, mach, a, dt);
    for (int i = 0; i < n; ++i) {
      const double x = g.xc(Grid::ng + i);
      const double c = std::cos(2.0 * kPi * x), s = std::sin(2.0 * kPi * x);
      const double tau = 2.0 + c;
      const double dtau = -2.0 * kPi * s;
      const double dpsi = 2.0 * kPi * c;
      const double d2psi = -4.0 * kPi * kPi * s;
      // (tau psi')' = tau' psi' + tau psi''
      sys.rhs[i] = s - kap * kap * tau * (dtau * dpsi + tau * d2psi);
    }
    std::vector<double> psi(n, 0.0);
    solve_psi_system(sys, psi, 1e-13, 2000);
    double err = 0.0;
    for (int i = 0; i < n; ++i)
      err += std::fabs(psi[i] - std::sin(2.0 * kPi * g.xc(Grid::ng + i)));
    errs.push_back(err / n);
    res.push_back(n);
  }
  auto rates = convergence_rates(errs, res);
  for (double rt : rates) {
    CHECK(rt >= 1.8);
    CHECK(rt <= 2.2);
  }
}

TEST_CASE("2D solve reaches the requested residual") {
  Grid g = Grid::make_2d(24, 24, 0.0, 1.0, 0.0, 1.0, BoundaryKind::Periodic,
                         BoundaryKind::Periodic);
  ConservedField w(g);
  RelaxationField r(g);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> d(-0.05, 0.05);
  const double mach = 1e-2;
  for (std::size_t k = 0; k < g.size(); ++k)
    set_cell(w, k, {1.0, 0.3 + d(rng), -0.2 + d(rng), 2.5, 0.0, 0.0}, mach);
  fill_ghosts(g, w);
  project_to_equilibrium(w, r, g, 1.4, mach);
  EllipticSystem sys = assemble_psi_system(w, r, g, mach, 2.0, 0.005);
  std::vector<double> psi(sys.n(), 0.0);
  LinearSolveReport rep = solve_psi_system(sys, psi, 1e-10, 500);
  CHECK(sys.relative_residual(psi) <= 1e-9);
  CHECK(rep.iterations >= 1);
}

TEST_CASE("psi fluctuation scales as M^2 on well-prepared data") {
  auto fluctuation = [](double mach) {
    Grid g = Grid::make_2d(32, 32, 0.0, 1.0, 0.0, 1.0, BoundaryKind::Periodic,
                           BoundaryKind::Periodic);
    ConservedField w(g);
    RelaxationField r(g);
    const double gamma = 1.4;
    for (int j = 0; j < g.sy(); ++j)
      for (int i = 0; i < g.sx(); ++i) {
        const double x = g.xc(i), y = g.yc(j);
        // divergence-free velocity from the stream function
        // sin(2 pi x) sin(4 pi y) / (4 pi); mixed wavenumbers keep the
        // discrete divergence at the generic O(dx^2), driving the psi source
        const double u = std::sin(2 * kPi * x) * std::cos(4 * kPi * y);
        const double v =
            -0.5 * std::cos(2 * kPi * x) * std::sin(4 * kPi * y);
        const double p =
            (1.0 + 0.1 * mach * mach * std::sin(2 * kPi * (x + y))) / gamma;
        set_cell(w, g.idx(i, j), {1.0, u, v, p / (gamma - 1.0), 0.0, 0.0},
                 mach);
      }
    project_to_equilibrium(w, r, g, gamma, mach);
    const double a = select_relaxation_parameter(w, g, gamma, mach, 1.5);
    const double dt = 0.4 * g.dx / max_signal_speed(w, g, a);
    RelaxationField out = implicit_step(w, r, g, mach, a, dt, 1e-10, 2000);
    double lo = 1e300, hi = -1e300;
    for (int j = g.jlo(); j < g.jhi(); ++j)
      for (int i = Grid::ng; i < Grid::ng + g.nx; ++i) {
        lo = std::min(lo, out.psi[g.idx(i, j)]);
        hi = std::max(hi, out.psi[g.idx(i, j)]);
      }
    return (hi - lo) * gamma; // relative to the O(1) background pressure
  };
  const double f1 = fluctuation(1e-1);
  const double f2 = fluctuation(1e-2);
  const double f3 = fluctuation(1e-3);
  const double e12 = std::log10(f1 / f2);
  const double e23 = std::log10(f2 / f3);
  CHECK(e12 >= 1.8);
  CHECK(e12 <= 2.2);
  CHECK(e23 >= 1.8);
  CHECK(e23 <= 2.2);
}
