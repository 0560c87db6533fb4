// torus-transport: experiment driver and exact 1-D optimal transport CLI.
// Talks to the library exclusively through the C API in torus_transport.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "torus_transport.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(tt_status status) {
  switch (status) {
    case TT_OK:
      return 0;
    case TT_ENUMERIC:
      return kExitNumeric;
    default:
      return kExitValidation;
  }
}

int fail(tt_status status) {
  std::cerr << "error: " << tt_last_error() << "\n";
  return exit_code_for(status);
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitValidation;
  }
  out << text;
  return 0;
}

std::string take_string(char* owned) {
  std::string s(owned != nullptr ? owned : "");
  tt_string_free(owned);
  return s;
}

struct CommonOpts {
  std::string format = "csv";
  std::string out;
  long long seed = 42;
  int grid = 4096;
  double p = 2.0;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts->out, "Write output to this path instead of stdout");
  cmd->add_option("--seed", opts->seed, "Random seed for seeded experiments");
  cmd->add_option("--grid", opts->grid, "Grid size M for densities");
  cmd->add_option("--p", opts->p, "Wasserstein exponent");
}

// Minimal CSV reader for the fit subcommand: header row + numeric rows,
// '#' lines skipped.
bool read_csv_column(const std::string& path, const std::string& name,
                     std::vector<double>* out) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  int column = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (column < 0) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i] == name) column = static_cast<int>(i);
      if (column < 0) return false;
      continue;
    }
    if (static_cast<std::size_t>(column) >= cells.size()) return false;
    try {
      out->push_back(std::stod(cells[static_cast<std::size_t>(column)]));
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out->empty();
}

int run_experiment_cmd(const std::string& id, const CommonOpts& common,
                       const std::map<std::string, std::string>& params, bool describe) {
  if (describe) {
    char* manifest = nullptr;
    const auto status = tt_experiment_manifest_json(&manifest);
    if (status != TT_OK) return fail(status);
    return emit(take_string(manifest) + "\n", common.out);
  }
  nlohmann::json cfg{{"seed", common.seed}, {"grid", common.grid}};
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [key, value] : params)
    if (!value.empty()) p[key] = value;
  cfg["params"] = p;
  char* out = nullptr;
  const auto status =
      tt_run_experiment(id.c_str(), cfg.dump().c_str(), common.format == "json" ? 1 : 0, &out);
  if (status != TT_OK) return fail(status);
  return emit(take_string(out), common.out);
}

int run_ot_cmd(const std::string& mu_path, const std::string& nu_path,
               const std::string& metric, const CommonOpts& common,
               const std::string& plan_out) {
  tt_atoms* mu = nullptr;
  auto status = tt_atoms_from_csv(mu_path.c_str(), &mu);
  if (status != TT_OK) return fail(status);

  tt_atoms* nu = nullptr;
  if (!nu_path.empty()) {
    status = tt_atoms_from_csv(nu_path.c_str(), &nu);
    if (status != TT_OK) {
      tt_atoms_destroy(mu);
      return fail(status);
    }
  }

  tt_cdf* mu_cdf = nullptr;
  tt_cdf* nu_cdf = nullptr;
  status = tt_cdf_of_atoms(mu, &mu_cdf);
  if (status == TT_OK) {
    if (nu != nullptr) {
      status = tt_cdf_of_atoms(nu, &nu_cdf);
    } else {
      double mass = 0.0;
      tt_atoms_total_mass(mu, &mass);
      status = tt_cdf_uniform(mass, &nu_cdf);
    }
  }

  double cost = 0.0, shift = 0.0;
  if (status == TT_OK) {
    status = (metric == "interval") ? tt_wp_interval(mu_cdf, nu_cdf, common.p, &cost)
                                    : tt_wp_circle(mu_cdf, nu_cdf, common.p, &cost, &shift);
  }

  int rc = 0;
  if (status == TT_OK && !plan_out.empty()) {
    if (nu == nullptr) {
      std::cerr << "error: --plan-out needs an atomic --nu measure\n";
      rc = kExitValidation;
    } else {
      double cost_pow = 0.0;
      tt_plan* plan = nullptr;
      status = tt_discrete_ot(mu, nu, common.p, &cost_pow, &plan);
      if (status == TT_OK) {
        char* csv = nullptr;
        status = tt_plan_to_csv(plan, &csv);
        if (status == TT_OK) rc = emit(take_string(csv), plan_out);
        tt_plan_destroy(plan);
      }
    }
  }

  if (status == TT_OK && rc == 0) {
    std::string text;
    if (common.format == "json") {
      nlohmann::json j{{"p", common.p}, {"cost", cost}, {"metric", metric}};
      if (metric == "circle") j["shift"] = shift;
      text = j.dump() + "\n";
    } else {
      std::ostringstream ss;
      ss.precision(17);
      ss << "# schema=1\np,cost,shift\n" << common.p << "," << cost << "," << shift << "\n";
      text = ss.str();
    }
    rc = emit(text, common.out);
  }

  tt_cdf_destroy(mu_cdf);
  tt_cdf_destroy(nu_cdf);
  tt_atoms_destroy(mu);
  tt_atoms_destroy(nu);
  return status == TT_OK ? rc : fail(status);
}

int run_bounds_cmd(const std::string& atoms_path, const std::string& density_path,
                   int max_freq, int n, const std::string& p_list_text,
                   const CommonOpts& common) {
  tt_series* series = nullptr;
  tt_status status = TT_OK;
  if (!atoms_path.empty()) {
    tt_atoms* atoms = nullptr;
    status = tt_atoms_from_csv(atoms_path.c_str(), &atoms);
    if (status != TT_OK) return fail(status);
    status = tt_fourier_of_atoms(atoms, max_freq, &series);
    tt_atoms_destroy(atoms);
  } else {
    std::ifstream in(density_path);
    if (!in) {
      std::cerr << "error: cannot read " << density_path << "\n";
      return kExitValidation;
    }
    std::vector<double> samples;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      try {
        samples.push_back(std::stod(line));
      } catch (const std::exception&) {
        std::cerr << "error: bad sample line: " << line << "\n";
        return kExitValidation;
      }
    }
    tt_density* density = nullptr;
    status = tt_density_create(samples.data(), static_cast<int>(samples.size()), 0, &density);
    if (status != TT_OK) return fail(status);
    const int k = max_freq > 0 ? max_freq : static_cast<int>(samples.size()) / 2;
    status = tt_fourier_of_density(density, k, &series);
    tt_density_destroy(density);
  }
  if (status != TT_OK) return fail(status);

  std::vector<double> ps;
  std::stringstream list(p_list_text);
  std::string piece;
  while (std::getline(list, piece, ','))
    if (!piece.empty()) ps.push_back(std::stod(piece));

  char* out = nullptr;
  status = common.format == "json"
               ? tt_bound_report_json(series, n, ps.data(), static_cast<int>(ps.size()), &out)
               : tt_bound_report_csv(series, n, ps.data(), static_cast<int>(ps.size()), &out);
  tt_series_destroy(series);
  if (status != TT_OK) return fail(status);
  return emit(take_string(out), common.out);
}

int run_generate_cmd(const std::string& kind, long long prime, const std::string& alpha,
                     long long count, const CommonOpts& common) {
  tt_atoms* atoms = nullptr;
  tt_status status = TT_OK;
  if (kind == "quadres") {
    status = tt_quadratic_residues(prime, &atoms);
  } else {
    status = tt_kronecker_measure(alpha.c_str(), count, &atoms);
    if (status == TT_OK) {
      int distinct = 0;
      tt_atoms_count(atoms, &distinct);
      if (distinct < count)
        std::cerr << "warning: alpha " << alpha << " looks rational; " << count - distinct
                  << " atoms stacked\n";
    }
  }
  if (status != TT_OK) return fail(status);
  char* csv = nullptr;
  status = tt_atoms_to_csv(atoms, &csv);
  tt_atoms_destroy(atoms);
  if (status != TT_OK) return fail(status);
  return emit(take_string(csv), common.out);
}

int run_fit_cmd(const std::string& in_path, const std::string& x_col, const std::string& y_col,
                bool linear, const CommonOpts& common) {
  std::vector<double> xs, ys;
  if (!read_csv_column(in_path, x_col, &xs) || !read_csv_column(in_path, y_col, &ys) ||
      xs.size() != ys.size()) {
    std::cerr << "error: could not read columns '" << x_col << "', '" << y_col << "' from "
              << in_path << "\n";
    return kExitValidation;
  }
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
  const auto status =
      linear ? tt_fit_linear(xs.data(), ys.data(), static_cast<int>(xs.size()), &slope,
                             &intercept, &r2)
             : tt_fit_loglog(xs.data(), ys.data(), static_cast<int>(xs.size()), &slope,
                             &intercept, &r2);
  if (status != TT_OK) return fail(status);
  nlohmann::json j{{"slope", slope}, {"intercept", intercept}, {"r_squared", r2}};
  return emit(j.dump() + "\n", common.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 1-D Wasserstein distances, Fourier-side bounds, and desk-scale "
               "equidistribution experiments on the unit circle"};
  app.require_subcommand(1);

  CommonOpts common;

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a named reproducible experiment");
  std::string experiment_id;
  bool describe = false;
  std::map<std::string, std::string> params;
  experiment->add_option("id", experiment_id,
                         "quadres | kronecker | uncertainty | eigen | heat | littlewood | "
                         "sandwich");
  experiment->add_flag("--describe", describe, "Print the experiment manifest and exit");
  add_common(experiment, &common);
  for (const char* key : {"primes", "count", "alpha", "N", "n", "family", "samples", "degree",
                          "K", "factor", "quantization"})
    experiment->add_option(std::string("--") + key, params[key]);
  std::string p_list;
  experiment->add_option("--p-list", p_list, "Comma-separated exponents, e.g. 1,2");

  // ot
  auto* ot = app.add_subcommand("ot", "Exact transport cost between measures");
  std::string mu_path, nu_path, metric = "circle", plan_out;
  ot->add_option("--mu", mu_path, "Atoms CSV (location,weight)")->required();
  ot->add_option("--nu", nu_path, "Atoms CSV; omit for the uniform measure");
  ot->add_option("--metric", metric)->check(CLI::IsMember({"circle", "interval"}));
  ot->add_option("--plan-out", plan_out, "Write the oracle transport plan CSV here");
  add_common(ot, &common);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate the Fourier-side bound functionals");
  std::string atoms_path, density_path, bounds_p_list = "1,2";
  int bounds_K = 128, bounds_n = 64;
  auto* atoms_opt = bounds->add_option("--atoms", atoms_path, "Atoms CSV input");
  bounds->add_option("--density", density_path, "Density samples, one per line")
      ->excludes(atoms_opt);
  bounds->add_option("--K", bounds_K, "Fourier band to compute");
  bounds->add_option("--n", bounds_n, "Erdos-Turan truncation");
  bounds->add_option("--p-list", bounds_p_list);
  add_common(bounds, &common);

  // generate
  auto* gen = app.add_subcommand("generate", "Emit number-theoretic measures as atoms CSV");
  std::string gen_kind, gen_alpha = "sqrt2";
  long long gen_prime = 29, gen_count = 1024;
  gen->add_option("kind", gen_kind, "quadres | kronecker")
      ->required()
      ->check(CLI::IsMember({"quadres", "kronecker"}));
  gen->add_option("--prime", gen_prime, "Odd prime for quadres");
  gen->add_option("--alpha", gen_alpha, "sqrt2, golden, or a decimal literal");
  gen->add_option("--N", gen_count, "Number of Kronecker points");
  add_common(gen, &common);

  // fit
  auto* fit = app.add_subcommand("fit", "Least-squares slope of one CSV column against another");
  std::string fit_in, fit_x, fit_y;
  bool fit_linear_flag = false;
  fit->add_option("--in", fit_in)->required();
  fit->add_option("--x", fit_x)->required();
  fit->add_option("--y", fit_y)->required();
  fit->add_flag("--linear", fit_linear_flag, "Fit y against x directly instead of log-log");
  add_common(fit, &common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  if (experiment->parsed()) {
    if (!describe && experiment_id.empty()) {
      std::cerr << "error: experiment id required (or pass --describe)\n";
      return kExitValidation;
    }
    if (!p_list.empty()) params["p_list"] = p_list;
    return run_experiment_cmd(experiment_id, common, params, describe);
  }
  if (ot->parsed()) return run_ot_cmd(mu_path, nu_path, metric, common, plan_out);
  if (bounds->parsed()) {
    if (atoms_path.empty() && density_path.empty()) {
      std::cerr << "error: bounds needs --atoms or --density\n";
      return kExitValidation;
    }
    return run_bounds_cmd(atoms_path, density_path, bounds_K, bounds_n, bounds_p_list, common);
  }
  if (gen->parsed()) return run_generate_cmd(gen_kind, gen_prime, gen_alpha, gen_count, common);
  if (fit->parsed()) return run_fit_cmd(fit_in, fit_x, fit_y, fit_linear_flag, common);
  return kExitValidation;
}
