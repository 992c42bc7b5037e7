/* C interface to the low-Mach relaxation solver.
 *
 * All entry points return lm_status (except the constructors, which return
 * NULL on failure); lm_last_error() describes the most recent failure on the
 * calling thread. Handles are opaque and not thread-safe; distinct handles
 * may be used from distinct threads.
 */
#ifndef LOWMACH_H
#define LOWMACH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lm_solver lm_solver;

typedef enum lm_status {
  LM_OK = 0,
  LM_ERR_INVALID = 1,       /* null handle or bad argument */
  LM_ERR_CONFIG = 2,        /* unknown option or out-of-range value */
  LM_ERR_ADMISSIBILITY = 3, /* non-physical cell state */
  LM_ERR_POSITIVITY = 4,    /* intermediate state lost positivity */
  LM_ERR_SOLVER = 5,        /* linear solver did not converge */
  LM_ERR_IO = 6,
  LM_ERR_INTERNAL = 7
} lm_status;

/* Message for the last error on this thread; empty string if none. */
const char* lm_last_error(void);

const char* lm_version(void);

/* Build a solver from n key/value option pairs. Recognized keys match the
 * config-file format: case, mach, gamma, cfl, order, t_end, a_safety,
 * lin_tol, lin_maxiter, output_every, output_dir, format,
 * variable_stage_steps, dimensional_output, nx, ny.
 * Returns NULL on error (see lm_last_error). */
lm_solver* lm_create(const char* const* keys, const char* const* values,
                     int n);

/* Build a solver from a "key = value" config file. */
lm_solver* lm_create_from_file(const char* path);

void lm_destroy(lm_solver* s);

/* One time step of the configured order at the CFL step size (clipped to
 * t_end). dt_taken may be NULL. */
lm_status lm_step(lm_solver* s, double* dt_taken);

/* Advance to the given non-dimensional time (must not be behind the clock). */
lm_status lm_advance(lm_solver* s, double t_target);

/* Advance to the configured t_end, writing snapshots to output_dir if it is
 * set. steps_taken may be NULL. */
lm_status lm_run(lm_solver* s, int* steps_taken);

double lm_time(const lm_solver* s);

lm_status lm_grid_shape(const lm_solver* s, int* dim, int* nx, int* ny);

/* Copy an interior field (row-major, nx*ny values) into out. Known names:
 * rho, u, v, p, e, psi, x, y. capacity is the size of out in doubles. */
lm_status lm_get_field(const lm_solver* s, const char* name, double* out,
                       int capacity);

lm_status lm_kinetic_energy(const lm_solver* s, double* out);

/* max |p - mean p| / mean p over the interior. */
lm_status lm_pressure_fluctuation(const lm_solver* s, double* out);

/* Interior integrals of density, momentum, total energy. out must hold 4. */
lm_status lm_conserved_totals(const lm_solver* s, double* out);

/* Write the current state; format is "csv" or "vtk". Honors the
 * dimensional_output option. */
lm_status lm_write_snapshot(const lm_solver* s, const char* path,
                            const char* format);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LOWMACH_H */
