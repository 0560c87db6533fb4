/*
 * C interface to the torus-transport library: exact 1-D Wasserstein distances
 * on the circle and interval, Fourier-side bound functionals, discrepancy and
 * number-theoretic measure generators, and the reproducible experiment
 * driver.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every function returns a tt_status; on failure tt_last_error() describes
 * the problem for the calling thread.  Strings returned through char** are
 * owned by the caller and released with tt_string_free().
 */
#ifndef TORUS_TRANSPORT_H
#define TORUS_TRANSPORT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tt_status {
  TT_OK = 0,
  TT_EINVAL = 1,  /* invalid argument or violated precondition */
  TT_ENUMERIC = 2 /* iteration failed to converge */,
  TT_EIO = 3      /* file or format problem */
} tt_status;

typedef struct tt_atoms tt_atoms;     /* weighted point masses on [0,1) */
typedef struct tt_density tt_density; /* grid samples on the unit circle */
typedef struct tt_series tt_series;   /* Fourier coefficients, k = -K..K */
typedef struct tt_cdf tt_cdf;         /* cumulative distribution on [0,1] */
typedef struct tt_plan tt_plan;       /* discrete transport plan */

const char* tt_version(void);
const char* tt_last_error(void);
void tt_string_free(char* s);

/* ---- measures ---------------------------------------------------------- */

tt_status tt_atoms_create(const double* locations, const double* weights, int count,
                          tt_atoms** out);
tt_status tt_atoms_from_csv(const char* path, tt_atoms** out);
tt_status tt_atoms_to_csv(const tt_atoms* a, char** csv_out);
tt_status tt_atoms_count(const tt_atoms* a, int* out);
tt_status tt_atoms_get(const tt_atoms* a, int index, double* location, double* weight);
tt_status tt_atoms_total_mass(const tt_atoms* a, double* out);
void tt_atoms_destroy(tt_atoms* a);

tt_status tt_density_create(const double* samples, int grid_size, int is_signed,
                            tt_density** out);
tt_status tt_density_mean(const tt_density* d, double* out);
void tt_density_destroy(tt_density* d);

/* ---- Fourier ----------------------------------------------------------- */

tt_status tt_fourier_of_density(const tt_density* d, int max_freq, tt_series** out);
tt_status tt_fourier_of_atoms(const tt_atoms* a, int max_freq, tt_series** out);
tt_status tt_series_sine(int n, tt_series** out);
tt_status tt_series_coeff(const tt_series* s, int k, double* re, double* im);
tt_status tt_series_max_freq(const tt_series* s, int* out);
tt_status tt_synthesize_grid(const tt_series* s, int grid_size, tt_density** out);
void tt_series_destroy(tt_series* s);

/* ---- cdfs -------------------------------------------------------------- */

tt_status tt_cdf_of_atoms(const tt_atoms* a, tt_cdf** out);
tt_status tt_cdf_of_density(const tt_density* d, tt_cdf** out);
tt_status tt_cdf_uniform(double mass, tt_cdf** out);
void tt_cdf_destroy(tt_cdf* c);

/* ---- exact transport --------------------------------------------------- */

tt_status tt_w1_interval(const tt_cdf* mu, const tt_cdf* nu, double* cost);
tt_status tt_w1_circle(const tt_cdf* mu, const tt_cdf* nu, double* cost, double* shift);
tt_status tt_wp_interval(const tt_cdf* mu, const tt_cdf* nu, double p, double* cost);
tt_status tt_wp_circle(const tt_cdf* mu, const tt_cdf* nu, double p, double* cost,
                       double* shift);
/* plan_out may be NULL when only the cost is wanted; cost_pow is cost^p */
tt_status tt_discrete_ot(const tt_atoms* a, const tt_atoms* b, double p, double* cost_pow,
                         tt_plan** plan_out);
tt_status tt_plan_to_csv(const tt_plan* plan, char** csv_out);
void tt_plan_destroy(tt_plan* plan);
tt_status tt_mass_scaled_wp(const tt_density* fplus, const tt_density* fminus, double p,
                            double* out);

/* ---- Fourier-side bounds ----------------------------------------------- */

tt_status tt_erdos_turan(const tt_series* s, int n, double* out);
tt_status tt_leveque(const tt_series* s, double* out);
tt_status tt_h_minus_one_circle(const tt_series* s, double* out);
tt_status tt_h_minus_one_interval(const tt_density* h, double* out);
tt_status tt_peyre_w2_bound(const tt_density* d, double* out);
tt_status tt_thm1(const tt_series* s, double p, double* out);
tt_status tt_thm2_lower(const tt_series* s, double sup_norm, double* out);
tt_status tt_littlewood_lhs(const tt_series* s, double* out);
tt_status tt_bound_report_json(const tt_series* s, int n, const double* p_list, int p_count,
                               char** json_out);
tt_status tt_bound_report_csv(const tt_series* s, int n, const double* p_list, int p_count,
                              char** csv_out);

/* ---- discrepancy ------------------------------------------------------- */

tt_status tt_star_discrepancy(const double* points, int count, double* out);
tt_status tt_extreme_discrepancy(const double* points, int count, double* out);
tt_status tt_lp_discrepancy(const double* points, int count, double p, double* out);
tt_status tt_w1_vs_discrepancy_gap(const double* points, int count, double* w1, double* disc,
                                   double* ratio);

/* ---- number-theoretic sequences ---------------------------------------- */

tt_status tt_quadratic_residues(long long p, tt_atoms** out);
tt_status tt_gauss_magnitude_check(long long p, int j_max, double* out);
/* alpha: "sqrt2", "golden", or a decimal literal */
tt_status tt_kronecker_measure(const char* alpha, long long count, tt_atoms** out);
tt_status tt_nearest_int_distance(double x, double* out);
tt_status tt_badly_approximable_floor(const char* alpha, long long k_max, double* out);

/* ---- heat transport ----------------------------------------------------- */

tt_status tt_heat_evolve(const tt_series* s, double t, tt_series** out);
tt_status tt_heat_plan_cost(const tt_density* d, double t, double p, double* out);
tt_status tt_sign_split(const tt_series* s, int grid_size, tt_density** plus_out,
                        tt_density** minus_out);
tt_status tt_eigen_split_cost(int n, double p, double* out);
tt_status tt_count_sign_changes(const tt_series* s, int* out);
tt_status tt_uncertainty_sides(const tt_series* s, double* lhs, double* rhs, double* ratio);
tt_status tt_critical_point_sides(const tt_series* s, double* lhs, double* rhs, double* ratio);
tt_status tt_two_step_cost(const tt_series* s, double p, double* realized, double* exact);
tt_status tt_smoothing_decomposition(const tt_series* s, int n, double p,
                                     tt_series** truncated_out, double* tail_l1,
                                     double* kernel_cost);

/* ---- experiments and fits ---------------------------------------------- */

/*
 * config_json: {"seed": 42, "grid": 4096, "params": {"n": "1..64", ...}},
 * every field optional.  as_json selects the output encoding (0 = CSV).
 */
tt_status tt_run_experiment(const char* name, const char* config_json, int as_json, char** out);
tt_status tt_experiment_manifest_json(char** out);
tt_status tt_fit_loglog(const double* xs, const double* ys, int count, double* slope,
                        double* intercept, double* r_squared);
tt_status tt_fit_linear(const double* xs, const double* ys, int count, double* slope,
                        double* intercept, double* r_squared);

#ifdef __cplusplus
}
#endif

#endif /* TORUS_TRANSPORT_H */
