#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "lowmach.h"

namespace {

lm_solver* make_sod(int nx) {
  const char* keys[] = {"case", "nx", "t_end"};
  const std::string n = std::to_string(nx);
  const char* values[] = {"sod", n.c_str(), "0.02"};
  return lm_create(keys, values, 3);
}

} // namespace

TEST_CASE("version and error state") {
  CHECK(lm_version() != nullptr);
  CHECK(std::string(lm_version()).size() > 0);
}

TEST_CASE("creation failures") {
  SUBCASE("unknown key") {
    const char* keys[] = {"viscosity"};
    const char* values[] = {"1.0"};
    lm_solver* s = lm_create(keys, values, 1);
    CHECK(s == nullptr);
    CHECK(std::string(lm_last_error()).find("viscosity") != std::string::npos);
  }
  SUBCASE("invalid value") {
    const char* keys[] = {"case", "mach"};
    const char* values[] = {"sod", "0"};
    lm_solver* s = lm_create(keys, values, 2);
    CHECK(s == nullptr);
    CHECK(std::string(lm_last_error()).find("mach") != std::string::npos);
  }
  SUBCASE("missing config file") {
    lm_solver* s = lm_create_from_file("/nonexistent_xyz.cfg");
    CHECK(s == nullptr);
    CHECK(std::string(lm_last_error()).size() > 0);
  }
}

TEST_CASE("null-handle guards") {
  double d = 0.0;
  int i = 0;
  CHECK(lm_step(nullptr, &d) == LM_ERR_INVALID);
  CHECK(lm_run(nullptr, &i) == LM_ERR_INVALID);
  CHECK(lm_kinetic_energy(nullptr, &d) == LM_ERR_INVALID);
  lm_destroy(nullptr); // must be a no-op
}

TEST_CASE("stepping and field access") {
  lm_solver* s = make_sod(100);
  REQUIRE(s != nullptr);

  int dim = 0, nx = 0, ny = 0;
  CHECK(lm_grid_shape(s, &dim, &nx, &ny) == LM_OK);
  CHECK(dim == 1);
  CHECK(nx == 100);
  CHECK(ny == 1);

  double dt = 0.0;
  CHECK(lm_step(s, &dt) == LM_OK);
  CHECK(dt > 0.0);
  CHECK(lm_time(s) == doctest::Approx(dt));

  SUBCASE("advance refuses to go backwards") {
    CHECK(lm_advance(s, 0.0) != LM_OK);
  }

  SUBCASE("field copy and capacity check") {
    std::vector<double> rho(100, 0.0);
    CHECK(lm_get_field(s, "rho", rho.data(), 100) == LM_OK);
    CHECK(rho.front() == doctest::Approx(1.0));
    CHECK(rho.back() == doctest::Approx(0.125));
    CHECK(lm_get_field(s, "rho", rho.data(), 50) == LM_ERR_INVALID);
    CHECK(lm_get_field(s, "vorticity", rho.data(), 100) == LM_ERR_INVALID);
  }

  lm_destroy(s);
}

TEST_CASE("full run with diagnostics") {
  lm_solver* s = make_sod(100);
  REQUIRE(s != nullptr);
  int steps = 0;
  CHECK(lm_run(s, &steps) == LM_OK);
  CHECK(steps > 0);
  CHECK(lm_time(s) == doctest::Approx(0.02).epsilon(1e-12));

  double ekin = -1.0, pf = -1.0, totals[4];
  CHECK(lm_kinetic_energy(s, &ekin) == LM_OK);
  CHECK(ekin >= 0.0);
  CHECK(lm_pressure_fluctuation(s, &pf) == LM_OK);
  CHECK(pf > 0.0);
  CHECK(lm_conserved_totals(s, totals) == LM_OK);
  CHECK(totals[0] == doctest::Approx(0.5625).epsilon(1e-6));

  const char* path = "/tmp/lowmach_capi_snapshot.csv";
  CHECK(lm_write_snapshot(s, path, "csv") == LM_OK);
  std::FILE* f = std::fopen(path, "r");
  REQUIRE(f != nullptr);
  char header[256] = {0};
  CHECK(std::fgets(header, sizeof header, f) != nullptr); // "# t = ..."
  std::fclose(f);
  std::remove(path);
  CHECK(std::string(header).find("# t =") == 0);

  CHECK(lm_write_snapshot(s, "/nonexistent_dir_xyz/s.csv", "csv") ==
        LM_ERR_IO);
  lm_destroy(s);
}

TEST_CASE("deterministic reruns through the C API") {
  auto final_rho = [] {
    lm_solver* s = make_sod(64);
    REQUIRE(s != nullptr);
    REQUIRE(lm_run(s, nullptr) == LM_OK);
    std::vector<double> rho(64);
    REQUIRE(lm_get_field(s, "rho", rho.data(), 64) == LM_OK);
    lm_destroy(s);
    return rho;
  };
  CHECK(final_rho() == final_rho());
}
