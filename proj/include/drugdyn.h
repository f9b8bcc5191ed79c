/* drugdyn.h - C interface to the two-drug competition model library.
 *
 * The library analyses a five-compartment population model of two addictive
 * substances (susceptible, two addicted groups, two recovered groups), its
 * reduction to a planar competitive Lotka-Volterra system, the closed-form
 * equilibria and their stability, and numerical integration of all three
 * model tiers. Everything is deterministic: no RNG, no clock, no global
 * state; identical inputs give bit-identical outputs.
 *
 * All functions returning ddn_status set *errmsg (when the argument is
 * non-NULL and an error occurs) to a malloc'd description that the caller
 * frees with ddn_string_free().
 */

#ifndef DRUGDYN_H
#define DRUGDYN_H

#include <stddef.h>

#if defined(_WIN32)
#define DDN_API __declspec(dllexport)
#else
#define DDN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ddn_status {
  DDN_OK = 0,
  DDN_ERR_VALIDATION = 1,   /* bad parameters / config / arguments */
  DDN_ERR_RUNTIME = 2,      /* integration or processing failure */
  DDN_ERR_VERIFICATION = 3, /* verify-paper found a must-match mismatch */
} ddn_status;

DDN_API const char* ddn_status_name(ddn_status s);

/* Frees strings returned through char** out-parameters. */
DDN_API void ddn_string_free(char* s);

/* ------------------------------------------------------------------ model */

typedef struct ddn_model ddn_model; /* opaque: validated parameters + derived
                                       reduced-system coefficients */

typedef struct ddn_parameters {
  double beta1, beta2;   /* influence rates, fraction/year, in [0,1] */
  double gamma1, gamma2; /* recovery rates */
  double delta1, delta2; /* relapse rates */
  double alpha1, alpha2; /* switchover rates */
  double mu;             /* mortality (= birth) rate */
  double n_total;        /* population size, persons, > 0 */
} ddn_parameters;

DDN_API ddn_status ddn_model_create(const ddn_parameters* params, ddn_model** out,
                                    char** errmsg);

/* Accepts the same JSON object used under the "parameters" key of a run
 * config: {"beta1":..., ..., "mu":..., "N":...}. */
DDN_API ddn_status ddn_model_create_json(const char* parameters_json, ddn_model** out,
                                         char** errmsg);

DDN_API void ddn_model_destroy(ddn_model* m);

/* Reduced-system coefficients: out_r = {r1, r2},
 * out_a = {a11, a12, a21, a22} (row-major). */
DDN_API ddn_status ddn_model_coefficients(const ddn_model* m, double out_r[2],
                                          double out_a[4]);

/* Drug-free-state criterion values {theta1, theta2}; theta_i - mu is the
 * origin eigenvalue for drug i. */
DDN_API ddn_status ddn_model_origin_thetas(const ddn_model* m, double out_theta[2]);

/* Jacobian of the reduced system at (d1, d2), row-major
 * {j11, j12, j21, j22}. */
DDN_API ddn_status ddn_model_jacobian(const ddn_model* m, double d1, double d2,
                                      double out_j[4]);

/* Eigenvalues of a 2x2 matrix j = {j11, j12, j21, j22} (row-major), as
 * out_re/out_im pairs. Stateless helper. */
DDN_API ddn_status ddn_eigen2(const double j[4], double out_re[2], double out_im[2]);

typedef enum ddn_tier {
  DDN_TIER_FULL = 0,    /* 5 components: S, D1, D2, R1, R2 */
  DDN_TIER_EXACT4 = 1,  /* 4 components: D1, D2, R1, R2 */
  DDN_TIER_REDUCED = 2, /* 2 components: D1, D2 */
} ddn_tier;

DDN_API size_t ddn_tier_dim(ddn_tier tier);

/* Time derivative of `state` (persons/year). dim must equal
 * ddn_tier_dim(tier); out receives dim values. */
DDN_API ddn_status ddn_model_rhs(const ddn_model* m, ddn_tier tier, const double* state,
                                 size_t dim, double* out);

/* Steady recovered groups for given addicted groups:
 * out_r[i] = gamma_i d_i / (delta_i + mu). */
DDN_API ddn_status ddn_model_qss_recovered(const ddn_model* m, double d1, double d2,
                                           double out_r[2]);

/* Full closed-form analysis (coefficients, equilibria, stability, regime) as
 * a JSON document; free with ddn_string_free. */
DDN_API ddn_status ddn_model_analysis_json(const ddn_model* m, char** json_out);

/* ------------------------------------------------------------ integration */

typedef enum ddn_method {
  DDN_METHOD_ADAPTIVE = 0, /* embedded Dormand-Prince 5(4) pair */
  DDN_METHOD_RK4 = 1,      /* fixed-step classical Runge-Kutta */
} ddn_method;

typedef struct ddn_integrator_options {
  int method;      /* ddn_method */
  double step;     /* fixed-step size, years; <= 0 -> 0.01 */
  double abs_tol;  /* persons; < 0 -> 1e-8 * N */
  double rel_tol;  /* < 0 -> 1e-8 */
  double t_max;    /* years, must be > 0 */
  double equilibrium_stop_tol; /* persons; > 0 stop when ||rhs||*1yr < tol,
                                  == 0 never stop early, < 0 -> 1e-6 * N */
  long max_steps;
} ddn_integrator_options;

DDN_API ddn_integrator_options ddn_integrator_options_default(void);

typedef struct ddn_trajectory ddn_trajectory; /* opaque sample sequence */

typedef enum ddn_terminal_reason {
  DDN_TERMINAL_REACHED_T_MAX = 0,
  DDN_TERMINAL_CONVERGED = 1,
  DDN_TERMINAL_STEP_FAILURE = 2,
} ddn_terminal_reason;

/* Integrates the chosen tier from x0 (dim = ddn_tier_dim(tier)). A trajectory
 * is returned even on step failure; inspect the terminal reason. */
DDN_API ddn_status ddn_model_integrate(const ddn_model* m, ddn_tier tier,
                                       const double* x0, size_t dim,
                                       const ddn_integrator_options* opts,
                                       ddn_trajectory** out, char** errmsg);

DDN_API size_t ddn_trajectory_samples(const ddn_trajectory* t);
DDN_API size_t ddn_trajectory_dim(const ddn_trajectory* t);
DDN_API ddn_status ddn_trajectory_sample(const ddn_trajectory* t, size_t index,
                                         double* time, double* state, size_t dim);
DDN_API ddn_terminal_reason ddn_trajectory_terminal_reason(const ddn_trajectory* t);
DDN_API void ddn_trajectory_steps(const ddn_trajectory* t, long* taken, long* rejected);
DDN_API void ddn_trajectory_destroy(ddn_trajectory* t);

/* --------------------------------------------------------- subcommand runs */

/* A run produces a set of named output documents ("artifacts"). The caller
 * decides where to put them; contents never depend on time or environment. */
typedef struct ddn_artifacts ddn_artifacts;

typedef struct ddn_run_options {
  int normalized; /* -1: per config, 0/1: force off/on */
  int jobs;       /* sweep concurrency; <= 1 serial. Output is identical
                     regardless of the value. */
} ddn_run_options;

DDN_API ddn_run_options ddn_run_options_default(void);

DDN_API ddn_status ddn_run_analyze(const char* config_json,
                                   const ddn_run_options* opts, ddn_artifacts** out,
                                   char** errmsg);
DDN_API ddn_status ddn_run_simulate(const char* config_json,
                                    const ddn_run_options* opts, ddn_artifacts** out,
                                    char** errmsg);
DDN_API ddn_status ddn_run_portrait(const char* config_json,
                                    const ddn_run_options* opts, ddn_artifacts** out,
                                    char** errmsg);
DDN_API ddn_status ddn_run_sweep(const char* config_json, const ddn_run_options* opts,
                                 ddn_artifacts** out, char** errmsg);

/* Recomputes the published simulation-study numbers and tabulates them next
 * to the published values. Returns DDN_OK when every must-match item agrees
 * (known discrepancies are flagged but not fatal), DDN_ERR_VERIFICATION
 * otherwise; artifacts are produced either way. */
DDN_API ddn_status ddn_run_verify_paper(ddn_artifacts** out, char** errmsg);

DDN_API size_t ddn_artifacts_count(const ddn_artifacts* a);
DDN_API const char* ddn_artifacts_name(const ddn_artifacts* a, size_t index);
DDN_API const char* ddn_artifacts_data(const ddn_artifacts* a, size_t index);
DDN_API size_t ddn_artifacts_size(const ddn_artifacts* a, size_t index);
DDN_API void ddn_artifacts_destroy(ddn_artifacts* a);

/* Output directory named by a config document ("." when unset). */
DDN_API ddn_status ddn_config_output_directory(const char* config_json, char** dir_out,
                                               char** errmsg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DRUGDYN_H */
