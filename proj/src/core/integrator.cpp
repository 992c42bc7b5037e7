#include "integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eos.hpp"
#include "errors.hpp"
#include "riemann.hpp"

namespace lowmach {

double RunConfig::effective_cfl(int) const {
  if (cfl > 0.0) return cfl;
  return order == 1 ? 0.45 : 0.40;
}

void RunConfig::validate(int) const {
  if (!(mach > 0.0)) throw ConfigError("mach: must be positive");
  if (!(gamma > 1.0)) throw ConfigError("gamma: must exceed 1");
  if (order != 1 && order != 2) throw ConfigError("order: must be 1 or 2");
  if (!(t_end >= 0.0)) throw ConfigError("t_end: must be non-negative");
  if (!(a_safety > 1.0)) throw ConfigError("a_safety: must exceed 1");
  if (!(lin_tol > 0.0)) throw ConfigError("lin_tol: must be positive");
  if (lin_maxiter < 1) throw ConfigError("lin_maxiter: must be >= 1");
  if (cfl > 0.0 && !(cfl < 0.5))
    throw ConfigError("cfl: must be below 0.5 (per-sweep Courant number)");
  if (format != "csv" && format != "vtk")
    throw ConfigError("format: must be csv or vtk");
}

double compute_dt(const State& s, const RunConfig& cfg) {
  const double a = s.a_boost * select_relaxation_parameter(s.w, s.grid,
                                                           cfg.gamma, cfg.mach,
                                                           cfg.a_safety);
  const double speed = max_signal_speed(s.w, s.grid, a);
  return cfg.effective_cfl(s.grid.dim) * s.grid.min_spacing() / speed;
}

namespace {

StepStats stage(State& s, const RunConfig& cfg, double dt, int order) {
  StepStats st;
  st.dt = dt;
  st.a = s.a_boost * select_relaxation_parameter(s.w, s.grid, cfg.gamma,
                                                 cfg.mach, cfg.a_safety);
  LinearSolveReport lin;
  RelaxationField after_implicit =
      implicit_step(s.w, s.relax, s.grid, cfg.mach, st.a, dt, cfg.lin_tol,
                    cfg.lin_maxiter, &lin);
  st.lin_iterations = lin.iterations;
  st.lin_residual = lin.residual;

  s.w = explicit_update(s.w, after_implicit, s.grid, st.a, cfg.mach, cfg.gamma,
                        dt, order, s.sweep_parity);
  s.sweep_parity ^= 1;
  fill_ghosts(s.grid, s.w);
  check_admissible(s.w, s.grid, cfg.mach);
  project_to_equilibrium(s.w, s.relax, s.grid, cfg.gamma, cfg.mach);
  s.t += dt;
  return st;
}

} // namespace

StepStats first_order_step(State& s, const RunConfig& cfg, double dt) {
  return stage(s, cfg, dt, 1);
}

StepStats second_order_step(State& s, const RunConfig& cfg, double dt1,
                            double dt2) {
  const double t0 = s.t;
  ConservedField w0 = s.w;

  StepStats st1 = stage(s, cfg, dt1, 2);
  if (dt2 < 0.0) dt2 = std::min(dt1, compute_dt(s, cfg)); // variable steps
  StepStats st2 = stage(s, cfg, dt2, 2);

  const double sum = dt1 + dt2;
  const double alpha = 2.0 * dt1 * dt2 / (sum * sum);
  for (std::size_t k = 0; k < s.grid.size(); ++k) {
    s.w.rho[k] = (1.0 - alpha) * w0.rho[k] + alpha * s.w.rho[k];
    s.w.mx[k] = (1.0 - alpha) * w0.mx[k] + alpha * s.w.mx[k];
    s.w.my[k] = (1.0 - alpha) * w0.my[k] + alpha * s.w.my[k];
    s.w.E[k] = (1.0 - alpha) * w0.E[k] + alpha * s.w.E[k];
  }
  fill_ghosts(s.grid, s.w);
  check_admissible(s.w, s.grid, cfg.mach);
  project_to_equilibrium(s.w, s.relax, s.grid, cfg.gamma, cfg.mach);
  s.t = t0 + 2.0 * dt1 * dt2 / sum;

  StepStats st;
  st.dt = 2.0 * dt1 * dt2 / sum;
  st.a = st1.a;
  st.lin_iterations = st1.lin_iterations + st2.lin_iterations;
  st.lin_residual = std::max(st1.lin_residual, st2.lin_residual);
  return st;
}

std::string RunReport::summary() const {
  std::ostringstream os;
  os << "steps " << steps << "\n"
     << "total_linear_iterations " << total_lin_iterations << "\n"
     << "max_linear_residual " << max_lin_residual << "\n";
  if (!dt_history.empty()) {
    double mn = dt_history.front(), mx = mn;
    for (double d : dt_history) {
      mn = std::min(mn, d);
      mx = std::max(mx, d);
    }
    os << "dt_min " << mn << "\ndt_max " << mx << "\n";
  }
  return os.str();
}

RunReport run(State& s, const RunConfig& cfg, const RunObserver& observer) {
  cfg.validate(s.grid.dim);
  RunReport rep;
  if (observer) observer(s, 0);
  const double eps = 1e-13 * std::max(1.0, cfg.t_end);

  while (s.t < cfg.t_end - eps) {
    StepStats st;
    // Retry a failed step with a doubled relaxation parameter: positivity of
    // the intermediate states is always recoverable by enlarging a, at the
    // price of extra diffusion and a smaller dt.
    for (State backup = s;;) {
      try {
        const double remaining = cfg.t_end - s.t;
        if (cfg.order == 1) {
          const double dt = std::min(compute_dt(s, cfg), remaining);
          st = first_order_step(s, cfg, dt);
        } else {
          double dt1 = compute_dt(s, cfg);
          if (cfg.variable_stage_steps && dt1 < remaining) {
            st = second_order_step(s, cfg, dt1, -1.0);
          } else {
            dt1 = std::min(dt1, remaining);
            st = second_order_step(s, cfg, dt1, dt1);
          }
        }
        break;
      } catch (const PositivityBreach&) {
        if (backup.a_boost >= 4096.0) throw;
        s = backup;
        s.a_boost = backup.a_boost = 2.0 * backup.a_boost;
      }
    }
    ++rep.steps;
    rep.total_lin_iterations += st.lin_iterations;
    rep.max_lin_residual = std::max(rep.max_lin_residual, st.lin_residual);
    rep.dt_history.push_back(st.dt);
    if (observer && cfg.output_every > 0 && rep.steps % cfg.output_every == 0 &&
        s.t < cfg.t_end - eps)
      observer(s, rep.steps);
  }
  if (observer && rep.steps > 0) observer(s, rep.steps);
  return rep;
}

} // namespace lowmach
