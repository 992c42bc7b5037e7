#include <cmath>
#include <initializer_list>

#include "doctest.h"
#include "exact_riemann.hpp"

using oracle::EulerState;
using oracle::solve_exact_riemann;

TEST_CASE("Sod problem star values (frozen)") {
  auto sol = solve_exact_riemann({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 1.4);
  CHECK(sol.p_star == doctest::Approx(0.3031301780506468).epsilon(1e-12));
  CHECK(sol.u_star == doctest::Approx(0.9274526200489499).epsilon(1e-12));
  CHECK_FALSE(sol.left_shock);
  CHECK(sol.right_shock);
  // left rarefaction spans head to tail, contact between tail and shock
  CHECK(sol.speed_l_head < sol.speed_l_tail);
  CHECK(sol.speed_l_tail < sol.u_star);
  CHECK(sol.u_star < sol.speed_r_head);
}

TEST_CASE("equal states produce no waves") {
  EulerState s{1.3, 0.4, 2.0};
  auto sol = solve_exact_riemann(s, s, 1.4);
  CHECK(sol.p_star == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sol.u_star == doctest::Approx(0.4).epsilon(1e-12));
  auto mid = sol.sample(0.4);
  CHECK(mid.rho == doctest::Approx(1.3).epsilon(1e-12));
  CHECK(mid.p == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("symmetric collision produces two shocks") {
  auto sol = solve_exact_riemann({1.0, 2.0, 1.0}, {1.0, -2.0, 1.0}, 1.4);
  CHECK(sol.u_star == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(sol.left_shock);
  CHECK(sol.right_shock);
  CHECK(sol.p_star > 1.0);
  CHECK(sol.rho_star_l == doctest::Approx(sol.rho_star_r).epsilon(1e-12));
}

TEST_CASE("sampled solution is continuous across the rarefaction edges") {
  auto sol = solve_exact_riemann({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 1.4);
  const double eps = 1e-10;
  for (double xi : {sol.speed_l_head, sol.speed_l_tail}) {
    auto a = sol.sample(xi - eps);
    auto b = sol.sample(xi + eps);
    CHECK(a.rho == doctest::Approx(b.rho).epsilon(1e-7));
    CHECK(a.u == doctest::Approx(b.u).epsilon(1e-7).scale(1.0));
    CHECK(a.p == doctest::Approx(b.p).epsilon(1e-7));
  }
  // the contact carries a density jump but continuous u, p
  auto l = sol.sample(sol.u_star - eps);
  auto r = sol.sample(sol.u_star + eps);
  CHECK(l.u == doctest::Approx(r.u).epsilon(1e-12));
  CHECK(l.p == doctest::Approx(r.p).epsilon(1e-12));
  CHECK(l.rho != doctest::Approx(r.rho).epsilon(1e-3));
}

TEST_CASE("vacuum-generating data is rejected") {
  CHECK_THROWS(solve_exact_riemann({1.0, -10.0, 1.0}, {1.0, 10.0, 1.0}, 1.4));
}
