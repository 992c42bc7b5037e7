#include <cmath>
#include <random>

#include "core/diagnostics.hpp"
#include "core/eos.hpp"
#include "core/fields.hpp"
#include "core/reconstruct.hpp"
#include "doctest.h"

using namespace lowmach;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("minmod") {
  CHECK(minmod(1.0, 2.0) == 1.0);
  CHECK(minmod(-1.0, 2.0) == 0.0);
  CHECK(minmod(-1.0, -3.0) == -1.0);
  CHECK(minmod(0.0, 5.0) == 0.0);
  CHECK(minmod(3.0, 3.0) == 3.0);
}

TEST_CASE("slopes") {
  Grid g = Grid::make_1d(16, 0.0, 1.0, BoundaryKind::Periodic);
  ConservedField w(g);
  RelaxationField r(g);

  SUBCASE("constant data has zero slopes") {
    for (std::size_t k = 0; k < g.size(); ++k)
      set_cell(w, k, {1.0, 0.2, 0.0, 2.5, 0.0, 0.0}, 1.0);
    project_to_equilibrium(w, r, g, 1.4, 1.0);
    SlopeField s = compute_slopes(w, r, g, 0);
    for (int i = Grid::ng; i < Grid::ng + 16; ++i) {
      CHECK(s.rho[i] == 0.0);
      CHECK(s.mx[i] == 0.0);
      CHECK(s.E[i] == 0.0);
      CHECK(s.psi[i] == 0.0);
    }
  }

  SUBCASE("linear ramp is reproduced exactly") {
    Grid gz = Grid::make_1d(16, 0.0, 1.0, BoundaryKind::ZeroGradient);
    ConservedField wz(gz);
    RelaxationField rz(gz);
    for (int i = 0; i < gz.sx(); ++i) {
      wz.rho[i] = 1.0 + 0.5 * gz.xc(i);
      wz.mx[i] = 0.0;
      wz.E[i] = 2.0;
      rz.psi[i] = 3.0 - gz.xc(i);
    }
    SlopeField s = compute_slopes(wz, rz, gz, 0);
    for (int i = Grid::ng + 1; i < Grid::ng + 15; ++i) {
      CHECK(s.rho[i] == doctest::Approx(0.5).epsilon(1e-13));
      CHECK(s.psi[i] == doctest::Approx(-1.0).epsilon(1e-13));
    }
  }

  SUBCASE("extrema are flattened") {
    for (std::size_t k = 0; k < g.size(); ++k)
      set_cell(w, k, {1.0, 0.0, 0.0, 2.0, 0.0, 0.0}, 1.0);
    w.rho[Grid::ng + 8] = 2.0; // isolated spike
    fill_ghosts(g, w);
    project_to_equilibrium(w, r, g, 1.4, 1.0);
    SlopeField s = compute_slopes(w, r, g, 0);
    CHECK(s.rho[Grid::ng + 8] == 0.0);
  }

  SUBCASE("interface traces stay between neighbouring averages") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> d(0.5, 2.0);
    for (std::size_t k = 0; k < g.size(); ++k)
      set_cell(w, k, {d(rng), d(rng) - 1.25, 0.0, d(rng), 0.0, 0.0}, 1.0);
    fill_ghosts(g, w);
    project_to_equilibrium(w, r, g, 1.4, 1.0);
    SlopeField s = compute_slopes(w, r, g, 0);
    for (int i = Grid::ng; i < Grid::ng + 16; ++i) {
      const double left = w.rho[i] - 0.5 * g.dx * s.rho[i];
      const double right = w.rho[i] + 0.5 * g.dx * s.rho[i];
      const double lo = std::min({w.rho[i - 1], w.rho[i], w.rho[i + 1]});
      const double hi = std::max({w.rho[i - 1], w.rho[i], w.rho[i + 1]});
      CHECK(left >= lo - 1e-13);
      CHECK(left <= hi + 1e-13);
      CHECK(right >= lo - 1e-13);
      CHECK(right <= hi + 1e-13);
    }
  }
}

TEST_CASE("second-order accuracy away from extrema") {
  // trace value at the right interface vs the smooth profile
  std::vector<double> errs;
  std::vector<int> res;
  for (int n : {32, 64, 128, 256}) {
    Grid g = Grid::make_1d(n, 0.0, 1.0, BoundaryKind::Periodic);
    ConservedField w(g);
    RelaxationField r(g);
    for (int i = 0; i < g.sx(); ++i) {
      w.rho[i] = 2.0 + std::sin(2.0 * kPi * g.xc(i));
      w.E[i] = 5.0;
    }
    SlopeField s = compute_slopes(w, r, g, 0);
    double err = 0.0;
    int count = 0;
    for (int i = Grid::ng; i < Grid::ng + n; ++i) {
      const double x = g.xc(i);
      // skip the cells whose stencil brackets an extremum of sin
      const double dist = std::min(std::fabs(x - 0.25), std::fabs(x - 0.75));
      if (dist < 3.0 * g.dx) continue;
      const double trace = w.rho[i] + 0.5 * g.dx * s.rho[i];
      err += std::fabs(trace - (2.0 + std::sin(2.0 * kPi * (x + 0.5 * g.dx))));
      ++count;
    }
    errs.push_back(err / count);
    res.push_back(n);
  }
  auto rates = convergence_rates(errs, res);
  // the limiter clips a thin band next to the excluded extrema, which
  // shaves a little off the asymptotic rate
  for (double rt : rates) {
    CHECK(rt >= 1.7);
    CHECK(rt <= 2.2);
  }
}

TEST_CASE("well-preparedness survives reconstruction") {
  // interface pressure deviation keeps its M^2 scaling
  auto deviation = [](double mach) {
    Grid g = Grid::make_1d(64, 0.0, 1.0, BoundaryKind::Periodic);
    ConservedField w(g);
    RelaxationField r(g);
    const double gamma = 1.4;
    for (int i = 0; i < g.sx(); ++i) {
      const double x = g.xc(i);
      const double p =
          (1.0 + 0.2 * mach * mach * std::sin(2 * kPi * x)) / gamma;
      set_cell(w, i,
               {1.0, std::sin(2 * kPi * x), 0.0, p / (gamma - 1.0), 0.0, 0.0},
               mach);
    }
    project_to_equilibrium(w, r, g, gamma, mach);
    SlopeField s = compute_slopes(w, r, g, 0);
    double lo = 1e300, hi = -1e300;
    for (int i = Grid::ng; i < Grid::ng + 64; ++i) {
      const double tr = r.psi[i] + 0.5 * g.dx * s.psi[i];
      lo = std::min(lo, tr);
      hi = std::max(hi, tr);
    }
    return (hi - lo) * gamma;
  };
  const double d1 = deviation(1e-1);
  const double d2 = deviation(1e-2);
  const double d3 = deviation(1e-3);
  const double e12 = std::log10(d1 / d2);
  const double e23 = std::log10(d2 / d3);
  CHECK(e12 >= 1.8);
  CHECK(e12 <= 2.2);
  CHECK(e23 >= 1.8);
  CHECK(e23 <= 2.2);
}
