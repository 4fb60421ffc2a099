/* C interface to the coulab numerical library. */
#ifndef COULAB_COULAB_H
#define COULAB_COULAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(COULAB_BUILDING_LIBRARY)
#define CLAB_API __attribute__((visibility("default")))
#else
#define CLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  CLAB_OK = 0,
  CLAB_VERIFY_FAILED = 1,
  CLAB_INVALID_INPUT = 2,
  CLAB_NUMERIC_FAILURE = 3,
  CLAB_INTERNAL = 4
} clab_status;

typedef struct clab_profile clab_profile;
typedef struct clab_sweep clab_sweep;

typedef struct {
  double rel_tol;
  double abs_tol;
  int max_subdiv;
} clab_quad;

typedef struct {
  double value;
  double error;
  int converged;
} clab_value;

typedef struct {
  double epsilon;
  double R;
  double S;
  double hs_norm_sq;
  double coulomb;
  double lp_norm_p;
  double energy_norm;
  double ratio;
  double lemma_ratio;
  int converged;
} clab_sweep_record;

typedef struct {
  int family_size;
  int restarts;
  int max_iters;
  uint64_t seed;
  double simplex_tol;
  int threads;
} clab_optimizer_config;

CLAB_API const char* clab_version(void);
/* Message of the last failed call on this thread; empty after a success. */
CLAB_API const char* clab_last_error(void);
/* Strings returned through char** outputs are released with this. */
CLAB_API void clab_free_string(char* s);

CLAB_API void clab_quad_default(clab_quad* quad);
CLAB_API void clab_optimizer_default(clab_optimizer_config* config);

/* Profiles. `source` is "builtin:gaussian", "builtin:ball", "builtin:zero",
   inline JSON or a path to a JSON file. A NULL quad means the defaults. */
CLAB_API clab_status clab_profile_load(const char* source, clab_profile** out);
CLAB_API clab_status clab_profile_tent(double epsilon, double R, double S, clab_profile** out);
CLAB_API clab_status clab_profile_gaussian_mixture(const double* coeffs, const double* widths, size_t n,
                                                   clab_profile** out);
CLAB_API clab_status clab_profile_piecewise_linear(const double* knots, const double* values, size_t n,
                                                   clab_profile** out);
CLAB_API clab_status clab_profile_scaled(const clab_profile* p, double t, clab_profile** out);
CLAB_API clab_status clab_profile_dilated(const clab_profile* p, double lambda, clab_profile** out);
CLAB_API void clab_profile_free(clab_profile* p);
CLAB_API clab_status clab_profile_evaluate(const clab_profile* p, double r, double* out);
CLAB_API clab_status clab_profile_json(const clab_profile* p, char** out);

/* Functionals. */
CLAB_API clab_status clab_lp_norm(const clab_profile* p, double exponent, const clab_quad* quad, clab_value* out);
CLAB_API clab_status clab_weighted_lq_norm(const clab_profile* p, double q, double a, const clab_quad* quad,
                                           clab_value* out);
CLAB_API clab_status clab_sobolev_spectral(const clab_profile* p, double s, const clab_quad* quad, clab_value* out);
CLAB_API clab_status clab_sobolev_gagliardo(const clab_profile* p, double s, const clab_quad* quad, clab_value* out);
CLAB_API clab_status clab_dirichlet_energy(const clab_profile* p, const clab_quad* quad, clab_value* out);
CLAB_API clab_status clab_coulomb_newton(const clab_profile* p, const clab_quad* quad, clab_value* out);
CLAB_API clab_status clab_coulomb_spectral(const clab_profile* p, const clab_quad* quad, clab_value* out);
CLAB_API clab_status clab_energy_norm(const clab_profile* p, double s, const clab_quad* quad, clab_value* out);
CLAB_API clab_status clab_ruiz_functional(const clab_profile* p, double alpha, const clab_quad* quad,
                                          clab_value* out);
CLAB_API clab_status clab_hardy_weight_integral(const clab_profile* p, double gamma, const clab_quad* quad,
                                                clab_value* out);
CLAB_API clab_status clab_pointwise_decay_ratio(const clab_profile* p, double s, double q, double a,
                                                const clab_quad* quad, clab_value* out);
CLAB_API clab_status clab_quotient_j(const clab_profile* p, double two_p, double s, const clab_quad* quad,
                                     clab_value* out);

/* Flat JSON report of every norm at (s, ps). */
CLAB_API clab_status clab_norms_report(const clab_profile* p, const char* profile_id, double s, const double* ps,
                                       size_t n_ps, const clab_quad* quad, char** json_out);

/* Counterexample sweep. */
CLAB_API clab_status clab_sweep_run(double s, double p, const double* epsilons, size_t n, const clab_quad* quad,
                                    int threads, clab_sweep** out);
CLAB_API void clab_sweep_free(clab_sweep* sweep);
CLAB_API size_t clab_sweep_size(const clab_sweep* sweep);
CLAB_API clab_status clab_sweep_record_at(const clab_sweep* sweep, size_t i, clab_sweep_record* out);
CLAB_API clab_status clab_sweep_csv(const clab_sweep* sweep, char** csv_out);
CLAB_API clab_status clab_sweep_fit(const clab_sweep* sweep, double* measured, double* predicted);

/* Optimization. */
CLAB_API clab_status clab_lambda_minimize(double A, double B, double a, double b, double* lambda_star,
                                          double* min_value);
CLAB_API clab_status clab_best_constant(double s, double two_p, const clab_optimizer_config* config,
                                        const clab_quad* quad, char** json_out);

/* Verification suites; returns CLAB_VERIFY_FAILED when any check fails. */
CLAB_API clab_status clab_verify(const char* suite, double tol, const clab_quad* quad, char** table_out,
                                 char** json_out);

/* Exponents from decimal or fraction strings; optional inputs may be NULL. */
CLAB_API clab_status clab_exponents(const char* s, const char* p, const char* q, const char* a, const char* d,
                                    const char* gamma, char** json_out, char** table_out);
CLAB_API clab_status clab_figure1_csv(char** csv_out);

#ifdef __cplusplus
}
#endif

#endif
