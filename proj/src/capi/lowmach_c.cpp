#include "lowmach.h"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <string>

#include "../core/cases.hpp"
#include "../core/config.hpp"
#include "../core/diagnostics.hpp"
#include "../core/eos.hpp"
#include "../core/errors.hpp"
#include "../core/snapshot.hpp"

using namespace lowmach;

struct lm_solver {
  Session session;
  int snapshot_index = 0;
};

namespace {

thread_local std::string g_last_error;

lm_status record(lm_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

template <typename F> lm_status guarded(F&& f) {
  try {
    f();
    return LM_OK;
  } catch (const ConfigError& e) {
    return record(LM_ERR_CONFIG, e.what());
  } catch (const AdmissibilityError& e) {
    return record(LM_ERR_ADMISSIBILITY, e.what());
  } catch (const PositivityBreach& e) {
    return record(LM_ERR_POSITIVITY, e.what());
  } catch (const SolverError& e) {
    return record(LM_ERR_SOLVER, e.what());
  } catch (const IoError& e) {
    return record(LM_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return record(LM_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(LM_ERR_INTERNAL, "unknown error");
  }
}

lm_status take_step(lm_solver* s, double* dt_taken) {
  Session& ss = s->session;
  const double remaining = ss.run.t_end - ss.state.t;
  double dt = compute_dt(ss.state, ss.run);
  if (remaining > 0.0) dt = std::min(dt, remaining);
  StepStats st;
  if (ss.run.order == 1) st = first_order_step(ss.state, ss.run, dt);
  else st = second_order_step(ss.state, ss.run, dt, dt);
  if (dt_taken) *dt_taken = st.dt;
  return LM_OK;
}

void write_one_snapshot(const lm_solver* s, const std::string& path,
                        const std::string& format) {
  const Session& ss = s->session;
  const RefScaling* scale =
      ss.run.dimensional_output ? &ss.spec.ref : nullptr;
  const Snapshot snap =
      make_snapshot(ss.state, ss.run.mach, ss.run.gamma, scale);
  write_snapshot_file(snap, path, format);
}

} // namespace

extern "C" {

const char* lm_last_error(void) { return g_last_error.c_str(); }

const char* lm_version(void) { return "0.1.0"; }

lm_solver* lm_create(const char* const* keys, const char* const* values,
                     int n) {
  lm_solver* s = nullptr;
  const lm_status st = guarded([&] {
    if (n > 0 && (!keys || !values))
      throw ConfigError("option arrays must not be null");
    CaseConfig cfg;
    for (int k = 0; k < n; ++k) {
      if (!keys[k] || !values[k])
        throw ConfigError("option key/value must not be null");
      apply_option(cfg, keys[k], values[k]);
    }
    s = new lm_solver{make_session(cfg)};
  });
  return st == LM_OK ? s : nullptr;
}

lm_solver* lm_create_from_file(const char* path) {
  lm_solver* s = nullptr;
  const lm_status st = guarded([&] {
    if (!path) throw ConfigError("path must not be null");
    s = new lm_solver{make_session(parse_config_file(path))};
  });
  return st == LM_OK ? s : nullptr;
}

void lm_destroy(lm_solver* s) { delete s; }

lm_status lm_step(lm_solver* s, double* dt_taken) {
  if (!s) return record(LM_ERR_INVALID, "null solver handle");
  return guarded([&] { take_step(s, dt_taken); });
}

lm_status lm_advance(lm_solver* s, double t_target) {
  if (!s) return record(LM_ERR_INVALID, "null solver handle");
  return guarded([&] {
    State& st = s->session.state;
    if (t_target < st.t - 1e-13)
      throw ConfigError("t_target is behind the current time");
    RunConfig run = s->session.run;
    run.t_end = t_target;
    lowmach::run(st, run);
  });
}

lm_status lm_run(lm_solver* s, int* steps_taken) {
  if (!s) return record(LM_ERR_INVALID, "null solver handle");
  return guarded([&] {
    Session& ss = s->session;
    RunObserver obs;
    if (!ss.run.output_dir.empty()) {
      std::filesystem::create_directories(ss.run.output_dir);
      obs = [s](const State&, int) {
        const Session& ses = s->session;
        const std::string path = ses.run.output_dir + "/" + ses.spec.name +
                                 "_" + std::to_string(s->snapshot_index++) +
                                 "." + ses.run.format;
        write_one_snapshot(s, path, ses.run.format);
      };
    }
    const RunReport rep = lowmach::run(ss.state, ss.run, obs);
    if (steps_taken) *steps_taken = rep.steps;
  });
}

double lm_time(const lm_solver* s) {
  return s ? s->session.state.t : 0.0;
}

lm_status lm_grid_shape(const lm_solver* s, int* dim, int* nx, int* ny) {
  if (!s) return record(LM_ERR_INVALID, "null solver handle");
  const Grid& g = s->session.state.grid;
  if (dim) *dim = g.dim;
  if (nx) *nx = g.nx;
  if (ny) *ny = g.dim == 2 ? g.ny : 1;
  return LM_OK;
}

lm_status lm_get_field(const lm_solver* s, const char* name, double* out,
                       int capacity) {
  if (!s) return record(LM_ERR_INVALID, "null solver handle");
  if (!name || !out) return record(LM_ERR_INVALID, "null argument");
  const Session& ss = s->session;
  const Grid& g = ss.state.grid;
  if (capacity < static_cast<int>(g.interior_count()))
    return record(LM_ERR_INVALID,
                  "buffer holds " + std::to_string(capacity) +
                      " values, need " + std::to_string(g.interior_count()));
  const std::string f = name;
  static const char* known[] = {"rho", "u", "v", "e", "p", "psi", "x", "y"};
  bool ok = false;
  for (const char* k : known) ok = ok || f == k;
  if (!ok) return record(LM_ERR_INVALID, "unknown field '" + f + "'");
  return guarded([&] {
    const ConservedField& w = ss.state.w;
    std::size_t m = 0;
    for (int j = g.jlo(); j < g.jhi(); ++j)
      for (int i = Grid::ng; i < Grid::ng + g.nx; ++i, ++m) {
        const std::size_t k = g.idx(i, j);
        double v;
        if (f == "rho") v = w.rho[k];
        else if (f == "u") v = w.mx[k] / w.rho[k];
        else if (f == "v") v = w.my[k] / w.rho[k];
        else if (f == "e")
          v = internal_energy(w.rho[k], w.mx[k], w.my[k], w.E[k], ss.run.mach);
        else if (f == "p")
          v = pressure(w.rho[k],
                       internal_energy(w.rho[k], w.mx[k], w.my[k], w.E[k],
                                       ss.run.mach),
                       ss.run.gamma);
        else if (f == "psi") v = ss.state.relax.psi[k];
        else if (f == "x") v = g.xc(i);
        else v = g.yc(j);
        out[m] = v;
      }
  });
}

lm_status lm_kinetic_energy(const lm_solver* s, double* out) {
  if (!s || !out) return record(LM_ERR_INVALID, "null argument");
  return guarded(
      [&] { *out = kinetic_energy(s->session.state.w, s->session.state.grid); });
}

lm_status lm_pressure_fluctuation(const lm_solver* s, double* out) {
  if (!s || !out) return record(LM_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = pressure_fluctuation(s->session.state.w, s->session.state.grid,
                                s->session.run.mach, s->session.run.gamma);
  });
}

lm_status lm_conserved_totals(const lm_solver* s, double* out) {
  if (!s || !out) return record(LM_ERR_INVALID, "null argument");
  return guarded([&] {
    const auto t = conserved_totals(s->session.state.w, s->session.state.grid);
    std::copy(t.begin(), t.end(), out);
  });
}

lm_status lm_write_snapshot(const lm_solver* s, const char* path,
                            const char* format) {
  if (!s || !path) return record(LM_ERR_INVALID, "null argument");
  return guarded([&] {
    write_one_snapshot(s, path, format ? format : s->session.run.format);
  });
}

} // extern "C"
