#include "torus_transport.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "torus_transport/bounds.hpp"
#include "torus_transport/cdf.hpp"
#include "torus_transport/discrepancy.hpp"
#include "torus_transport/errors.hpp"
#include "torus_transport/experiments.hpp"
#include "torus_transport/fit.hpp"
#include "torus_transport/fourier.hpp"
#include "torus_transport/heat.hpp"
#include "torus_transport/io.hpp"
#include "torus_transport/measures.hpp"
#include "torus_transport/ot.hpp"
#include "torus_transport/sequences.hpp"

namespace tt = torus_transport;

struct tt_atoms {
  tt::AtomicMeasure impl;
};
struct tt_density {
  tt::TorusDensity impl;
};
struct tt_series {
  tt::FourierSeries impl;
};
struct tt_cdf {
  tt::Cdf impl;
};
struct tt_plan {
  tt::DiscretePlan impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename F>
tt_status guarded(F&& body) {
  try {
    body();
    return TT_OK;
  } catch (const tt::invalid_input& e) {
    set_error(e.what());
    return TT_EINVAL;
  } catch (const tt::numeric_failure& e) {
    set_error(e.what());
    return TT_ENUMERIC;
  } catch (const tt::io_failure& e) {
    set_error(e.what());
    return TT_EIO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return TT_EINVAL;
  }
}

bool missing(const void* p) { return p == nullptr; }

tt_status einval(const char* message) {
  set_error(message);
  return TT_EINVAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* tt_version(void) { return "1.0.0"; }

const char* tt_last_error(void) { return g_last_error.c_str(); }

void tt_string_free(char* s) { std::free(s); }

/* ---- measures ---------------------------------------------------------- */

tt_status tt_atoms_create(const double* locations, const double* weights, int count,
                          tt_atoms** out) {
  if (missing(locations) || missing(weights) || missing(out) || count < 1)
    return einval("tt_atoms_create: bad arguments");
  return guarded([&] {
    *out = new tt_atoms{tt::AtomicMeasure(std::vector<double>(locations, locations + count),
                                          std::vector<double>(weights, weights + count))};
  });
}

tt_status tt_atoms_from_csv(const char* path, tt_atoms** out) {
  if (missing(path) || missing(out)) return einval("tt_atoms_from_csv: bad arguments");
  return guarded([&] { *out = new tt_atoms{tt::atoms_from_csv_file(path)}; });
}

tt_status tt_atoms_to_csv(const tt_atoms* a, char** csv_out) {
  if (missing(a) || missing(csv_out)) return einval("tt_atoms_to_csv: bad arguments");
  return guarded([&] { *csv_out = dup_string(tt::atoms_to_csv(a->impl)); });
}

tt_status tt_atoms_count(const tt_atoms* a, int* out) {
  if (missing(a) || missing(out)) return einval("tt_atoms_count: bad arguments");
  *out = static_cast<int>(a->impl.size());
  return TT_OK;
}

tt_status tt_atoms_get(const tt_atoms* a, int index, double* location, double* weight) {
  if (missing(a) || missing(location) || missing(weight))
    return einval("tt_atoms_get: bad arguments");
  if (index < 0 || index >= static_cast<int>(a->impl.size()))
    return einval("tt_atoms_get: index out of range");
  const auto& atom = a->impl.atoms()[static_cast<std::size_t>(index)];
  *location = atom.first;
  *weight = atom.second;
  return TT_OK;
}

tt_status tt_atoms_total_mass(const tt_atoms* a, double* out) {
  if (missing(a) || missing(out)) return einval("tt_atoms_total_mass: bad arguments");
  *out = a->impl.total_mass();
  return TT_OK;
}

void tt_atoms_destroy(tt_atoms* a) { delete a; }

tt_status tt_density_create(const double* samples, int grid_size, int is_signed,
                            tt_density** out) {
  if (missing(samples) || missing(out) || grid_size < 1)
    return einval("tt_density_create: bad arguments");
  return guarded([&] {
    std::vector<double> v(samples, samples + grid_size);
    *out = new tt_density{is_signed ? tt::TorusDensity::signed_density(std::move(v))
                                    : tt::TorusDensity::density(std::move(v))};
  });
}

tt_status tt_density_mean(const tt_density* d, double* out) {
  if (missing(d) || missing(out)) return einval("tt_density_mean: bad arguments");
  *out = d->impl.mean();
  return TT_OK;
}

void tt_density_destroy(tt_density* d) { delete d; }

/* ---- Fourier ----------------------------------------------------------- */

tt_status tt_fourier_of_density(const tt_density* d, int max_freq, tt_series** out) {
  if (missing(d) || missing(out)) return einval("tt_fourier_of_density: bad arguments");
  return guarded([&] { *out = new tt_series{tt::fourier_of_density(d->impl, max_freq)}; });
}

tt_status tt_fourier_of_atoms(const tt_atoms* a, int max_freq, tt_series** out) {
  if (missing(a) || missing(out)) return einval("tt_fourier_of_atoms: bad arguments");
  return guarded([&] { *out = new tt_series{tt::fourier_of_atoms(a->impl, max_freq)}; });
}

tt_status tt_series_sine(int n, tt_series** out) {
  if (missing(out)) return einval("tt_series_sine: bad arguments");
  return guarded([&] { *out = new tt_series{tt::sine_series(n)}; });
}

tt_status tt_series_coeff(const tt_series* s, int k, double* re, double* im) {
  if (missing(s) || missing(re) || missing(im)) return einval("tt_series_coeff: bad arguments");
  const auto c = s->impl.coeff(k);
  *re = c.real();
  *im = c.imag();
  return TT_OK;
}

tt_status tt_series_max_freq(const tt_series* s, int* out) {
  if (missing(s) || missing(out)) return einval("tt_series_max_freq: bad arguments");
  *out = s->impl.max_freq();
  return TT_OK;
}

tt_status tt_synthesize_grid(const tt_series* s, int grid_size, tt_density** out) {
  if (missing(s) || missing(out)) return einval("tt_synthesize_grid: bad arguments");
  return guarded([&] { *out = new tt_density{tt::synthesize_grid(s->impl, grid_size)}; });
}

void tt_series_destroy(tt_series* s) { delete s; }

/* ---- cdfs -------------------------------------------------------------- */

tt_status tt_cdf_of_atoms(const tt_atoms* a, tt_cdf** out) {
  if (missing(a) || missing(out)) return einval("tt_cdf_of_atoms: bad arguments");
  return guarded([&] { *out = new tt_cdf{tt::cdf(a->impl)}; });
}

tt_status tt_cdf_of_density(const tt_density* d, tt_cdf** out) {
  if (missing(d) || missing(out)) return einval("tt_cdf_of_density: bad arguments");
  return guarded([&] { *out = new tt_cdf{tt::cdf(d->impl)}; });
}

tt_status tt_cdf_uniform(double mass, tt_cdf** out) {
  if (missing(out)) return einval("tt_cdf_uniform: bad arguments");
  return guarded([&] { *out = new tt_cdf{tt::Cdf::uniform(mass)}; });
}

void tt_cdf_destroy(tt_cdf* c) { delete c; }

/* ---- exact transport --------------------------------------------------- */

tt_status tt_w1_interval(const tt_cdf* mu, const tt_cdf* nu, double* cost) {
  if (missing(mu) || missing(nu) || missing(cost)) return einval("tt_w1_interval: bad arguments");
  return guarded([&] { *cost = tt::w1_interval(mu->impl, nu->impl); });
}

tt_status tt_w1_circle(const tt_cdf* mu, const tt_cdf* nu, double* cost, double* shift) {
  if (missing(mu) || missing(nu) || missing(cost)) return einval("tt_w1_circle: bad arguments");
  return guarded([&] {
    const auto r = tt::w1_circle(mu->impl, nu->impl);
    *cost = r.cost;
    if (shift != nullptr) *shift = r.shift;
  });
}

tt_status tt_wp_interval(const tt_cdf* mu, const tt_cdf* nu, double p, double* cost) {
  if (missing(mu) || missing(nu) || missing(cost)) return einval("tt_wp_interval: bad arguments");
  return guarded([&] { *cost = tt::wp_interval(mu->impl, nu->impl, p); });
}

tt_status tt_wp_circle(const tt_cdf* mu, const tt_cdf* nu, double p, double* cost,
                       double* shift) {
  if (missing(mu) || missing(nu) || missing(cost)) return einval("tt_wp_circle: bad arguments");
  return guarded([&] {
    const auto r = tt::wp_circle(mu->impl, nu->impl, p);
    *cost = r.cost;
    if (shift != nullptr) *shift = r.shift;
  });
}

tt_status tt_discrete_ot(const tt_atoms* a, const tt_atoms* b, double p, double* cost_pow,
                         tt_plan** plan_out) {
  if (missing(a) || missing(b) || missing(cost_pow))
    return einval("tt_discrete_ot: bad arguments");
  return guarded([&] {
    auto [cost, plan] = tt::discrete_ot_oracle(a->impl, b->impl, p);
    *cost_pow = cost;
    if (plan_out != nullptr) *plan_out = new tt_plan{std::move(plan)};
  });
}

tt_status tt_plan_to_csv(const tt_plan* plan, char** csv_out) {
  if (missing(plan) || missing(csv_out)) return einval("tt_plan_to_csv: bad arguments");
  return guarded([&] { *csv_out = dup_string(tt::plan_to_csv(plan->impl)); });
}

void tt_plan_destroy(tt_plan* plan) { delete plan; }

tt_status tt_mass_scaled_wp(const tt_density* fplus, const tt_density* fminus, double p,
                            double* out) {
  if (missing(fplus) || missing(fminus) || missing(out))
    return einval("tt_mass_scaled_wp: bad arguments");
  return guarded([&] { *out = tt::mass_scaled_wp(fplus->impl, fminus->impl, p); });
}

/* ---- Fourier-side bounds ----------------------------------------------- */

tt_status tt_erdos_turan(const tt_series* s, int n, double* out) {
  if (missing(s) || missing(out)) return einval("tt_erdos_turan: bad arguments");
  return guarded([&] { *out = tt::erdos_turan_functional(s->impl, n); });
}

tt_status tt_leveque(const tt_series* s, double* out) {
  if (missing(s) || missing(out)) return einval("tt_leveque: bad arguments");
  return guarded([&] { *out = tt::leveque_functional(s->impl); });
}

tt_status tt_h_minus_one_circle(const tt_series* s, double* out) {
  if (missing(s) || missing(out)) return einval("tt_h_minus_one_circle: bad arguments");
  return guarded([&] { *out = tt::h_minus_one_circle(s->impl); });
}

tt_status tt_h_minus_one_interval(const tt_density* h, double* out) {
  if (missing(h) || missing(out)) return einval("tt_h_minus_one_interval: bad arguments");
  return guarded([&] { *out = tt::h_minus_one_interval(h->impl); });
}

tt_status tt_peyre_w2_bound(const tt_density* d, double* out) {
  if (missing(d) || missing(out)) return einval("tt_peyre_w2_bound: bad arguments");
  return guarded([&] { *out = tt::peyre_w2_bound(d->impl); });
}

tt_status tt_thm1(const tt_series* s, double p, double* out) {
  if (missing(s) || missing(out)) return einval("tt_thm1: bad arguments");
  return guarded([&] { *out = tt::thm1_functional(s->impl, p); });
}

tt_status tt_thm2_lower(const tt_series* s, double sup_norm, double* out) {
  if (missing(s) || missing(out)) return einval("tt_thm2_lower: bad arguments");
  return guarded([&] { *out = tt::thm2_lower_functional(s->impl, sup_norm); });
}

tt_status tt_littlewood_lhs(const tt_series* s, double* out) {
  if (missing(s) || missing(out)) return einval("tt_littlewood_lhs: bad arguments");
  return guarded([&] { *out = tt::littlewood_lhs(s->impl); });
}

tt_status tt_bound_report_json(const tt_series* s, int n, const double* p_list, int p_count,
                               char** json_out) {
  if (missing(s) || missing(json_out) || (p_count > 0 && missing(p_list)))
    return einval("tt_bound_report_json: bad arguments");
  return guarded([&] {
    const std::vector<double> ps(p_list, p_list + p_count);
    *json_out = dup_string(tt::to_json(tt::bound_report(s->impl, n, ps)));
  });
}

tt_status tt_bound_report_csv(const tt_series* s, int n, const double* p_list, int p_count,
                              char** csv_out) {
  if (missing(s) || missing(csv_out) || (p_count > 0 && missing(p_list)))
    return einval("tt_bound_report_csv: bad arguments");
  return guarded([&] {
    const std::vector<double> ps(p_list, p_list + p_count);
    *csv_out = dup_string(tt::bound_report_to_csv(tt::bound_report(s->impl, n, ps)));
  });
}

/* ---- discrepancy ------------------------------------------------------- */

tt_status tt_star_discrepancy(const double* points, int count, double* out) {
  if (missing(points) || missing(out) || count < 1)
    return einval("tt_star_discrepancy: bad arguments");
  return guarded([&] {
    *out = tt::star_discrepancy(tt::PointSet(std::vector<double>(points, points + count)));
  });
}

tt_status tt_extreme_discrepancy(const double* points, int count, double* out) {
  if (missing(points) || missing(out) || count < 1)
    return einval("tt_extreme_discrepancy: bad arguments");
  return guarded([&] {
    *out = tt::extreme_discrepancy(tt::PointSet(std::vector<double>(points, points + count)));
  });
}

tt_status tt_lp_discrepancy(const double* points, int count, double p, double* out) {
  if (missing(points) || missing(out) || count < 1)
    return einval("tt_lp_discrepancy: bad arguments");
  return guarded([&] {
    *out = tt::lp_discrepancy(tt::PointSet(std::vector<double>(points, points + count)), p);
  });
}

tt_status tt_w1_vs_discrepancy_gap(const double* points, int count, double* w1, double* disc,
                                   double* ratio) {
  if (missing(points) || missing(w1) || missing(disc) || missing(ratio) || count < 1)
    return einval("tt_w1_vs_discrepancy_gap: bad arguments");
  return guarded([&] {
    const auto gap =
        tt::w1_vs_discrepancy_gap(tt::PointSet(std::vector<double>(points, points + count)));
    *w1 = gap.w1;
    *disc = gap.disc;
    *ratio = gap.ratio;
  });
}

/* ---- number-theoretic sequences ---------------------------------------- */

tt_status tt_quadratic_residues(long long p, tt_atoms** out) {
  if (missing(out)) return einval("tt_quadratic_residues: bad arguments");
  return guarded([&] {
    *out = new tt_atoms{tt::quadratic_residue_measure(tt::PrimeResidueSpec(p))};
  });
}

tt_status tt_gauss_magnitude_check(long long p, int j_max, double* out) {
  if (missing(out)) return einval("tt_gauss_magnitude_check: bad arguments");
  return guarded([&] {
    *out = tt::gauss_magnitude_check(tt::PrimeResidueSpec(p), j_max);
  });
}

tt_status tt_kronecker_measure(const char* alpha, long long count, tt_atoms** out) {
  if (missing(alpha) || missing(out)) return einval("tt_kronecker_measure: bad arguments");
  return guarded([&] {
    *out = new tt_atoms{tt::kronecker_measure(tt::KroneckerAlpha::from_tag(alpha), count)};
  });
}

tt_status tt_nearest_int_distance(double x, double* out) {
  if (missing(out)) return einval("tt_nearest_int_distance: bad arguments");
  return guarded([&] { *out = tt::nearest_int_distance(x); });
}

tt_status tt_badly_approximable_floor(const char* alpha, long long k_max, double* out) {
  if (missing(alpha) || missing(out))
    return einval("tt_badly_approximable_floor: bad arguments");
  return guarded([&] {
    *out = tt::badly_approximable_floor(tt::KroneckerAlpha::from_tag(alpha), k_max);
  });
}

/* ---- heat transport ----------------------------------------------------- */

tt_status tt_heat_evolve(const tt_series* s, double t, tt_series** out) {
  if (missing(s) || missing(out)) return einval("tt_heat_evolve: bad arguments");
  return guarded([&] { *out = new tt_series{tt::heat_evolve(s->impl, t)}; });
}

tt_status tt_heat_plan_cost(const tt_density* d, double t, double p, double* out) {
  if (missing(d) || missing(out)) return einval("tt_heat_plan_cost: bad arguments");
  return guarded([&] { *out = tt::heat_plan_cost(d->impl, t, p); });
}

tt_status tt_sign_split(const tt_series* s, int grid_size, tt_density** plus_out,
                        tt_density** minus_out) {
  if (missing(s) || missing(plus_out) || missing(minus_out))
    return einval("tt_sign_split: bad arguments");
  return guarded([&] {
    auto pair = tt::sign_split(s->impl, grid_size);
    *plus_out = new tt_density{std::move(pair.fplus)};
    *minus_out = new tt_density{std::move(pair.fminus)};
  });
}

tt_status tt_eigen_split_cost(int n, double p, double* out) {
  if (missing(out)) return einval("tt_eigen_split_cost: bad arguments");
  return guarded([&] { *out = tt::eigen_split_cost(n, p); });
}

tt_status tt_count_sign_changes(const tt_series* s, int* out) {
  if (missing(s) || missing(out)) return einval("tt_count_sign_changes: bad arguments");
  return guarded([&] { *out = tt::count_sign_changes(s->impl); });
}

tt_status tt_uncertainty_sides(const tt_series* s, double* lhs, double* rhs, double* ratio) {
  if (missing(s) || missing(lhs) || missing(rhs) || missing(ratio))
    return einval("tt_uncertainty_sides: bad arguments");
  return guarded([&] {
    const auto sides = tt::uncertainty_sides(s->impl);
    *lhs = sides.lhs;
    *rhs = sides.rhs;
    *ratio = sides.ratio;
  });
}

tt_status tt_critical_point_sides(const tt_series* s, double* lhs, double* rhs, double* ratio) {
  if (missing(s) || missing(lhs) || missing(rhs) || missing(ratio))
    return einval("tt_critical_point_sides: bad arguments");
  return guarded([&] {
    const auto sides = tt::critical_point_sides(s->impl);
    *lhs = sides.lhs;
    *rhs = sides.rhs;
    *ratio = sides.ratio;
  });
}

tt_status tt_two_step_cost(const tt_series* s, double p, double* realized, double* exact) {
  if (missing(s) || missing(realized) || missing(exact))
    return einval("tt_two_step_cost: bad arguments");
  return guarded([&] {
    const auto cost = tt::high_freq_two_step_cost(s->impl, p);
    *realized = cost.realized;
    *exact = cost.exact;
  });
}

tt_status tt_smoothing_decomposition(const tt_series* s, int n, double p,
                                     tt_series** truncated_out, double* tail_l1,
                                     double* kernel_cost) {
  if (missing(s) || missing(truncated_out) || missing(tail_l1) || missing(kernel_cost))
    return einval("tt_smoothing_decomposition: bad arguments");
  return guarded([&] {
    auto d = tt::smoothing_decomposition(s->impl, n, p);
    *truncated_out = new tt_series{std::move(d.truncated)};
    *tail_l1 = d.tail_l1;
    *kernel_cost = d.kernel_cost;
  });
}

/* ---- experiments and fits ---------------------------------------------- */

tt_status tt_run_experiment(const char* name, const char* config_json, int as_json,
                            char** out) {
  if (missing(name) || missing(out)) return einval("tt_run_experiment: bad arguments");
  return guarded([&] {
    tt::ExperimentConfig cfg;
    cfg.name = name;
    if (config_json != nullptr && config_json[0] != '\0') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(config_json);
      } catch (const std::exception& e) {
        throw tt::invalid_input(std::string("experiment config: bad json: ") + e.what());
      }
      cfg.seed = j.value("seed", cfg.seed);
      cfg.grid = j.value("grid", cfg.grid);
      if (j.contains("params"))
        for (const auto& [key, value] : j.at("params").items())
          cfg.params[key] = value.get<std::string>();
    }
    const auto table = tt::run_experiment(cfg);
    *out = dup_string(as_json ? tt::table_to_json(table) : tt::table_to_csv(table));
  });
}

tt_status tt_experiment_manifest_json(char** out) {
  if (missing(out)) return einval("tt_experiment_manifest_json: bad arguments");
  return guarded([&] {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& info : tt::experiment_manifest()) {
      nlohmann::json defaults = nlohmann::json::object();
      for (const auto& [key, value] : info.defaults) defaults[key] = value;
      list.push_back({{"name", info.name},
                      {"description", info.description},
                      {"expected", info.expected},
                      {"defaults", defaults}});
    }
    *out = dup_string(list.dump(2));
  });
}

tt_status tt_fit_loglog(const double* xs, const double* ys, int count, double* slope,
                        double* intercept, double* r_squared) {
  if (missing(xs) || missing(ys) || missing(slope) || missing(intercept) ||
      missing(r_squared) || count < 3)
    return einval("tt_fit_loglog: bad arguments");
  return guarded([&] {
    const auto fit = tt::fit_loglog(std::vector<double>(xs, xs + count),
                                    std::vector<double>(ys, ys + count));
    *slope = fit.slope;
    *intercept = fit.intercept;
    *r_squared = fit.r_squared;
  });
}

tt_status tt_fit_linear(const double* xs, const double* ys, int count, double* slope,
                        double* intercept, double* r_squared) {
  if (missing(xs) || missing(ys) || missing(slope) || missing(intercept) ||
      missing(r_squared) || count < 3)
    return einval("tt_fit_linear: bad arguments");
  return guarded([&] {
    const auto fit = tt::fit_linear(std::vector<double>(xs, xs + count),
                                    std::vector<double>(ys, ys + count));
    *slope = fit.slope;
    *intercept = fit.intercept;
    *r_squared = fit.r_squared;
  });
}

}  // extern "C"
