// Command-line front end. Talks to the solver exclusively through the C API.
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lowmach.h"

namespace {

struct Options {
  std::string config;
  std::string case_name;
  std::vector<std::pair<std::string, std::string>> overrides;

  void add(const std::string& key, const std::string& value) {
    overrides.emplace_back(key, value);
  }
};

lm_solver* build_solver(const Options& opt) {
  if (!opt.config.empty()) {
    if (!opt.overrides.empty() || !opt.case_name.empty()) {
      std::fprintf(stderr,
                   "error: --config cannot be combined with other options\n");
      return nullptr;
    }
    lm_solver* s = lm_create_from_file(opt.config.c_str());
    if (!s) std::fprintf(stderr, "error: %s\n", lm_last_error());
    return s;
  }
  std::vector<const char*> keys, values;
  if (!opt.case_name.empty()) {
    keys.push_back("case");
    values.push_back(opt.case_name.c_str());
  }
  for (const auto& [k, v] : opt.overrides) {
    keys.push_back(k.c_str());
    values.push_back(v.c_str());
  }
  lm_solver* s =
      lm_create(keys.data(), values.data(), static_cast<int>(keys.size()));
  if (!s) std::fprintf(stderr, "error: %s\n", lm_last_error());
  return s;
}

void add_common_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config, "key = value config file");
  cmd->add_option("--case", opt.case_name,
                  "sod | mach_shock | gresho | smooth_gresho | uniform");
  auto fwd = [&opt](const std::string& key) {
    return [&opt, key](const std::string& v) { opt.add(key, v); };
  };
  cmd->add_option_function<std::string>("--mach", fwd("mach"), "Mach number");
  cmd->add_option_function<std::string>("--gamma", fwd("gamma"),
                                        "adiabatic exponent");
  cmd->add_option_function<std::string>("--nx", fwd("nx"), "cells in x");
  cmd->add_option_function<std::string>("--ny", fwd("ny"), "cells in y");
  cmd->add_option_function<std::string>("--order", fwd("order"),
                                        "spatial/temporal order (1 or 2)");
  cmd->add_option_function<std::string>("--cfl", fwd("cfl"), "CFL number");
  cmd->add_option_function<std::string>("--t-end", fwd("t_end"),
                                        "non-dimensional end time");
  cmd->add_option_function<std::string>("--a-safety", fwd("a_safety"),
                                        "relaxation-parameter safety factor");
  cmd->add_option_function<std::string>("--output", fwd("output_dir"),
                                        "snapshot directory");
  cmd->add_option_function<std::string>("--format", fwd("format"),
                                        "csv or vtk");
  cmd->add_option_function<std::string>("--output-every", fwd("output_every"),
                                        "steps between snapshots");
  cmd->add_flag_callback(
      "--dimensional", [&opt] { opt.add("dimensional_output", "true"); },
      "write snapshots in dimensional units");
  cmd->add_flag_callback(
      "--variable-steps", [&opt] { opt.add("variable_stage_steps", "true"); },
      "recompute the step size between the two stages (order 2)");
}

int report_state(lm_solver* s) {
  int dim = 0, nx = 0, ny = 0;
  lm_grid_shape(s, &dim, &nx, &ny);
  double ekin = 0.0, pfluct = 0.0, totals[4] = {0, 0, 0, 0};
  if (lm_kinetic_energy(s, &ekin) != LM_OK ||
      lm_pressure_fluctuation(s, &pfluct) != LM_OK ||
      lm_conserved_totals(s, totals) != LM_OK) {
    std::fprintf(stderr, "error: %s\n", lm_last_error());
    return 1;
  }
  std::printf("grid %dD %d", dim, nx);
  if (dim == 2) std::printf(" x %d", ny);
  std::printf("\nt %.17g\nkinetic_energy %.17g\npressure_fluctuation %.6g\n"
              "mass %.17g\nenergy %.17g\n",
              lm_time(s), ekin, pfluct, totals[0], totals[3]);
  return 0;
}

int cmd_run(const Options& opt) {
  lm_solver* s = build_solver(opt);
  if (!s) return 1;
  int steps = 0;
  if (lm_run(s, &steps) != LM_OK) {
    std::fprintf(stderr, "error: %s\n", lm_last_error());
    lm_destroy(s);
    return 1;
  }
  std::printf("steps %d\n", steps);
  const int rc = report_state(s);
  lm_destroy(s);
  return rc;
}

int cmd_validate(const Options& opt) {
  lm_solver* s = build_solver(opt);
  if (!s) return 1;
  std::printf("configuration ok\n");
  const int rc = report_state(s);
  lm_destroy(s);
  return rc;
}

// Self-convergence: run each resolution to the same end time, coarsen the
// finer density field by block averaging, report L1 differences and rates.
int cmd_convergence(const Options& opt, const std::vector<int>& res) {
  if (res.size() < 2) {
    std::fprintf(stderr, "error: need at least two resolutions\n");
    return 1;
  }
  std::vector<std::vector<double>> rho(res.size());
  int dim = 1;
  for (std::size_t r = 0; r < res.size(); ++r) {
    Options o = opt;
    o.add("nx", std::to_string(res[r]));
    lm_solver* s = build_solver(o);
    if (!s) return 1;
    if (lm_run(s, nullptr) != LM_OK) {
      std::fprintf(stderr, "error at nx=%d: %s\n", res[r], lm_last_error());
      lm_destroy(s);
      return 1;
    }
    int nx = 0, ny = 0;
    lm_grid_shape(s, &dim, &nx, &ny);
    rho[r].resize(static_cast<std::size_t>(nx) * ny);
    if (lm_get_field(s, "rho", rho[r].data(),
                     static_cast<int>(rho[r].size())) != LM_OK) {
      std::fprintf(stderr, "error: %s\n", lm_last_error());
      lm_destroy(s);
      return 1;
    }
    lm_destroy(s);
  }

  std::vector<double> errors;
  for (std::size_t r = 0; r + 1 < res.size(); ++r) {
    const int nc = res[r], nf = res[r + 1];
    if (nf % nc != 0) {
      std::fprintf(stderr, "error: %d does not divide %d\n", nc, nf);
      return 1;
    }
    const int f = nf / nc;
    const int nyc = dim == 2 ? nc : 1;
    double err = 0.0;
    for (int j = 0; j < nyc; ++j)
      for (int i = 0; i < nc; ++i) {
        double avg = 0.0;
        const int fy = dim == 2 ? f : 1;
        for (int jj = 0; jj < fy; ++jj)
          for (int ii = 0; ii < f; ++ii)
            avg += rho[r + 1][static_cast<std::size_t>(j * fy + jj) * nf +
                              i * f + ii];
        avg /= f * fy;
        err += std::fabs(rho[r][static_cast<std::size_t>(j) * nc + i] - avg);
      }
    err /= static_cast<double>(nc) * nyc;
    errors.push_back(err);
    std::printf("nx %d vs %d: L1(rho) %.6e\n", nc, nf, err);
  }
  for (std::size_t r = 0; r + 1 < errors.size(); ++r)
    std::printf("rate %.3f\n",
                std::log(errors[r] / errors[r + 1]) /
                    std::log(double(res[r + 1]) / res[r]));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-Mach relaxation solver"};
  app.require_subcommand(1);

  Options run_opt, val_opt, conv_opt;
  std::vector<int> resolutions{20, 40, 80};

  CLI::App* run = app.add_subcommand("run", "advance a case to its end time");
  add_common_options(run, run_opt);

  CLI::App* val =
      app.add_subcommand("validate", "check a configuration and initial data");
  add_common_options(val, val_opt);

  CLI::App* conv = app.add_subcommand(
      "convergence", "self-convergence study over a resolution ladder");
  add_common_options(conv, conv_opt);
  conv->add_option("--resolutions", resolutions,
                   "grid sizes, each dividing the next")
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cmd_run(run_opt);
  if (val->parsed()) return cmd_validate(val_opt);
  if (conv->parsed()) return cmd_convergence(conv_opt, resolutions);
  return 1;
}
