#ifndef LOWMACH_CORE_INTEGRATOR_HPP
#define LOWMACH_CORE_INTEGRATOR_HPP

#include <functional>
#include <string>
#include <vector>

#include "fields.hpp"
#include "grid.hpp"
#include "implicit.hpp"

namespace lowmach {

struct RunConfig {
  double mach = 1.0;
  double gamma = 1.4;
  double cfl = -1.0; // < 0: use 0.45 (order 1) or 0.40 (order 2), per sweep
  int order = 1;
  double t_end = 0.0;
  double a_safety = 1.5; // >1; shear flows at low Mach need ~1.5 for stability
  double lin_tol = 1e-10;
  int lin_maxiter = 500;
  int output_every = 0; // 0: only initial and final snapshot
  std::string output_dir;
  std::string format = "csv";
  bool variable_stage_steps = false;
  bool dimensional_output = false;
  int nx = 100, ny = 1;

  double effective_cfl(int dim) const;
  void validate(int dim) const; // throws ConfigError naming the offending key
};

// Field state plus clock; stage inputs are kept at relaxation equilibrium.
struct State {
  Grid grid;
  ConservedField w;
  RelaxationField relax;
  double t = 0.0;
  int sweep_parity = 0;  // leading sweep direction of the next stage (2D)
  double a_boost = 1.0;  // positivity-driven enlargement of the relaxation
                         // parameter; grows when a step has to be retried

  State() = default;
  explicit State(const Grid& g) : grid(g), w(g), relax(g) {}
};

struct StepStats {
  double dt = 0.0;
  double a = 0.0;
  int lin_iterations = 0;
  double lin_residual = 0.0;
};

// CFL time step for the current field: cfl * min spacing / max signal speed.
double compute_dt(const State& s, const RunConfig& cfg);

// Implicit psi solve, explicit Godunov update of the physical variables,
// projection back onto the equilibrium manifold.
StepStats first_order_step(State& s, const RunConfig& cfg, double dt);

// Convex combination of two first-order stages (with second-order
// reconstruction inside each stage). For dt1 == dt2 this is
// w^{n+1} = (w^n + w_twostage)/2 advancing dt; in general the weight is
// 2 dt1 dt2/(dt1+dt2)^2 and the step advances 2 dt1 dt2/(dt1+dt2).
StepStats second_order_step(State& s, const RunConfig& cfg, double dt1,
                            double dt2);

struct RunReport {
  int steps = 0;
  long total_lin_iterations = 0;
  double max_lin_residual = 0.0;
  std::vector<double> dt_history;
  std::string summary() const;
};

using RunObserver = std::function<void(const State&, int step)>;

// Advance to cfg.t_end, recomputing dt per step and clipping the final step.
// The observer (optional) fires on the initial state and after every
// output_every steps plus the final one.
RunReport run(State& s, const RunConfig& cfg, const RunObserver& observer = {});

} // namespace lowmach

#endif
