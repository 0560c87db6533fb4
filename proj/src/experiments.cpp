#include "torus_transport/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "torus_transport/bounds.hpp"
#include "torus_transport/discrepancy.hpp"
#include "torus_transport/errors.hpp"
#include "torus_transport/heat.hpp"
#include "torus_transport/io.hpp"
#include "torus_transport/ot.hpp"
#include "torus_transport/sequences.hpp"

namespace torus_transport {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string get_param(const ExperimentConfig& cfg, const std::string& key,
                      const std::string& fallback) {
  const auto it = cfg.params.find(key);
  return it == cfg.params.end() ? fallback : it->second;
}

long long get_int(const ExperimentConfig& cfg, const std::string& key, long long fallback) {
  const auto it = cfg.params.find(key);
  if (it == cfg.params.end()) return fallback;
  try {
    return std::stoll(it->second);
  } catch (const std::exception&) {
    throw invalid_input("experiment: parameter '" + key + "' is not an integer");
  }
}

std::vector<double> column(const Table& t, const std::string& name) {
  const auto it = std::find(t.columns.begin(), t.columns.end(), name);
  if (it == t.columns.end()) throw invalid_input("table: no column " + name);
  const auto idx = static_cast<std::size_t>(it - t.columns.begin());
  std::vector<double> out;
  out.reserve(t.rows.size());
  for (const auto& row : t.rows) out.push_back(row[idx]);
  return out;
}

}  // namespace

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw invalid_input("range: expected 'a..b', got '" + text + "'");
  try {
    const long long lo = std::stoll(text.substr(0, pos));
    const long long hi = std::stoll(text.substr(pos + 2));
    if (lo > hi) throw invalid_input("range: empty range '" + text + "'");
    return {lo, hi};
  } catch (const invalid_input&) {
    throw;
  } catch (const std::exception&) {
    throw invalid_input("range: bad endpoints in '" + text + "'");
  }
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!piece.empty()) {
      try {
        out.push_back(std::stod(piece));
      } catch (const std::exception&) {
        throw invalid_input("list: bad number '" + piece + "'");
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw invalid_input("list: empty");
  return out;
}

std::vector<long long> geometric_primes(long long lo, long long hi, int count) {
  if (lo < 3 || hi < lo || count < 1) throw invalid_input("geometric_primes: bad range");
  std::set<long long> chosen;
  const double ratio = static_cast<double>(hi) / static_cast<double>(lo);
  for (int i = 0; i < count; ++i) {
    const double frac = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    const auto target = static_cast<long long>(std::llround(lo * std::pow(ratio, frac)));
    long long p = next_prime(std::max<long long>(3, target));
    while (chosen.count(p)) p = next_prime(p + 1);
    if (p <= hi) chosen.insert(p);
  }
  if (static_cast<int>(chosen.size()) < count)
    throw invalid_input("geometric_primes: range too narrow for requested count");
  return {chosen.begin(), chosen.end()};
}

FourierSeries random_positive_density_series(std::mt19937_64& rng, int max_degree) {
  if (max_degree < 1) throw invalid_input("random_positive_density_series: degree must be >= 1");
  const double decay = 1.0 + uniform01(rng);
  std::vector<std::complex<double>> nonneg(static_cast<std::size_t>(max_degree) + 1);
  nonneg[0] = {1.0, 0.0};
  for (int k = 1; k <= max_degree; ++k) {
    const double mag = 0.45 * (0.25 + 0.75 * uniform01(rng)) /
                       std::pow(static_cast<double>(k), decay);
    const double phase = kTwoPi * uniform01(rng);
    nonneg[static_cast<std::size_t>(k)] = std::polar(mag, phase);
  }
  auto series = FourierSeries::hermitian(max_degree, nonneg);
  const int grid = std::max(8192, 128 * max_degree);
  double low = 1.0;
  for (double v : synthesize_grid(series, grid).samples()) low = std::min(low, v);
  if (low < 0.05) {
    const double scale = 0.95 / (1.0 - low);
    for (int k = 1; k <= max_degree; ++k)
      nonneg[static_cast<std::size_t>(k)] *= scale;
    series = FourierSeries::hermitian(max_degree, nonneg);
  }
  return series;
}

FourierSeries random_mean_zero_series(std::mt19937_64& rng, int max_degree) {
  if (max_degree < 1) throw invalid_input("random_mean_zero_series: degree must be >= 1");
  const double decay = 0.5 + uniform01(rng);
  std::vector<std::complex<double>> nonneg(static_cast<std::size_t>(max_degree) + 1);
  nonneg[0] = {0.0, 0.0};
  for (int k = 1; k <= max_degree; ++k) {
    const double mag = (0.2 + 0.8 * uniform01(rng)) / std::pow(static_cast<double>(k), decay);
    const double phase = kTwoPi * uniform01(rng);
    nonneg[static_cast<std::size_t>(k)] = std::polar(mag, phase);
  }
  return FourierSeries::hermitian(max_degree, nonneg);
}

AtomicMeasure quantile_quantization(const Cdf& c, int count) {
  if (count < 1) throw invalid_input("quantile_quantization: count must be >= 1");
  const double m = c.total_mass();
  std::vector<double> locs(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    locs[static_cast<std::size_t>(i)] =
        wrap_unit(c.quantile((static_cast<double>(i) + 0.5) * m / count));
  std::vector<double> weights(static_cast<std::size_t>(count), m / count);
  return AtomicMeasure(std::move(locs), std::move(weights));
}

namespace {

Table run_quadres(const ExperimentConfig& cfg) {
  const auto [lo, hi] = parse_range(get_param(cfg, "primes", "101..4999"));
  const auto count = static_cast<int>(get_int(cfg, "count", 25));
  const auto primes = geometric_primes(std::max<long long>(3, lo), hi, count);

  Table t;
  t.columns = {"p",           "w2",          "w2_sqrt_p", "h_minus_one",
               "peyre_bound", "extreme_disc", "erdos_turan_at_p"};
  int peyre_violations = 0;
  for (long long p : primes) {
    const PrimeResidueSpec spec(p);
    const auto mu = quadratic_residue_measure(spec);
    const auto series = fourier_of_atoms(mu, static_cast<int>(4 * p));
    const double w2 = wp_circle(cdf(mu), Cdf::uniform(), 2.0).cost;
    const double hmo = h_minus_one_circle(minus_mean(series));
    std::vector<double> raw(static_cast<std::size_t>(p));
    for (long long k = 1; k <= p; ++k)
      raw[static_cast<std::size_t>(k - 1)] =
          static_cast<double>((k * k) % p) / static_cast<double>(p);
    const double ext = extreme_discrepancy(PointSet(std::move(raw)));
    const double et = erdos_turan_functional(series, static_cast<int>(p));
    if (w2 > 2.0 * hmo) ++peyre_violations;
    t.rows.push_back({static_cast<double>(p), w2, w2 * std::sqrt(static_cast<double>(p)), hmo,
                      2.0 * hmo, ext, et});
  }
  t.fits.emplace_back("w2_vs_p", fit_loglog(column(t, "p"), column(t, "w2")));
  t.scalars.emplace_back("peyre_violations", peyre_violations);
  return t;
}

Table run_kronecker(const ExperimentConfig& cfg) {
  const auto alpha = KroneckerAlpha::from_tag(get_param(cfg, "alpha", "sqrt2"));
  const auto [lo, hi] = parse_range(get_param(cfg, "N", "128..16384"));
  const auto factor = get_int(cfg, "factor", 2);
  if (factor < 2) throw invalid_input("kronecker: factor must be >= 2");

  Table t;
  t.columns = {"N", "w2", "n_w2", "n_w2_over_sqrtlog", "star_disc", "n_star_disc"};
  for (long long N = lo; N <= hi; N *= factor) {
    const auto mu = kronecker_measure(alpha, N);
    const double w2 = wp_circle(cdf(mu), Cdf::uniform(), 2.0).cost;
    std::vector<double> pts;
    pts.reserve(mu.size());
    for (const auto& [x, w] : mu.atoms()) pts.push_back(x);
    const double star = star_discrepancy(PointSet(std::move(pts)));
    const double n = static_cast<double>(N);
    t.rows.push_back({n, w2, n * w2, n * w2 / std::sqrt(std::log(n)), star, n * star});
  }
  if (t.rows.size() >= 3) {
    t.fits.emplace_back("w2_vs_N", fit_loglog(column(t, "N"), column(t, "w2")));
    std::vector<double> logn;
    for (double n : column(t, "N")) logn.push_back(std::log(n));
    t.fits.emplace_back("ndn_vs_logn", fit_linear(logn, column(t, "n_star_disc")));
  }
  const auto metric = column(t, "n_w2_over_sqrtlog");
  const auto [mn, mx] = std::minmax_element(metric.begin(), metric.end());
  t.scalars.emplace_back("n_w2_over_sqrtlog_max_min_ratio", *mx / *mn);
  return t;
}

Table run_uncertainty(const ExperimentConfig& cfg) {
  const auto family = get_param(cfg, "family", "sin");
  Table t;
  t.columns = {"index", "roots", "lhs", "rhs", "ratio"};
  if (family == "sin") {
    const auto [lo, hi] = parse_range(get_param(cfg, "n", "1..64"));
    for (long long n = lo; n <= hi; ++n) {
      const auto sides = uncertainty_sides(sine_series(static_cast<int>(n)));
      t.rows.push_back({static_cast<double>(n), static_cast<double>(sides.roots), sides.lhs,
                       sides.rhs, sides.ratio});
    }
  } else if (family == "random") {
    const auto samples = get_int(cfg, "samples", 1000);
    const auto degree = static_cast<int>(get_int(cfg, "degree", 32));
    std::mt19937_64 rng(cfg.seed);
    for (long long i = 0; i < samples; ++i) {
      const auto sides = uncertainty_sides(random_mean_zero_series(rng, degree));
      t.rows.push_back({static_cast<double>(i), static_cast<double>(sides.roots), sides.lhs,
                       sides.rhs, sides.ratio});
    }
  } else {
    throw invalid_input("uncertainty: family must be sin or random");
  }
  const auto ratios = column(t, "ratio");
  const auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
  t.scalars.emplace_back("ratio_min", *mn);
  t.scalars.emplace_back("ratio_max", *mx);
  t.scalars.emplace_back("ratio_rel_spread", (*mx - *mn) / (0.5 * (*mx + *mn)));
  return t;
}

Table run_eigen(const ExperimentConfig& cfg) {
  const auto [lo, hi] = parse_range(get_param(cfg, "n", "1..64"));
  const auto p_list = parse_real_list(get_param(cfg, "p_list", "1,2"));
  Table t;
  t.columns = {"n", "p", "cost", "n_cost"};
  for (double p : p_list)
    for (long long n = lo; n <= hi; ++n) {
      const double c = eigen_split_cost(static_cast<int>(n), p);
      t.rows.push_back({static_cast<double>(n), p, c, static_cast<double>(n) * c});
    }
  for (double p : p_list) {
    std::vector<double> ns, costs;
    for (const auto& row : t.rows)
      if (row[1] == p) {
        ns.push_back(row[0]);
        costs.push_back(row[2]);
      }
    if (ns.size() >= 3)
      t.fits.emplace_back("slope_p" + format_double(p), fit_loglog(ns, costs));
  }
  return t;
}

Table run_heat(const ExperimentConfig& cfg) {
  const auto [lo, hi] = parse_range(get_param(cfg, "n", "2..64"));
  const auto p_list = parse_real_list(get_param(cfg, "p_list", "1,2"));
  Table t;
  t.columns = {"n", "p", "t", "realized", "exact", "ratio", "ratio_over_sqrtlog"};
  int violations = 0;
  for (double p : p_list)
    for (long long n = std::max<long long>(2, lo); n <= hi; ++n) {
      const auto cost = high_freq_two_step_cost(sine_series(static_cast<int>(n)), p);
      const double ratio = cost.realized / cost.exact;
      if (cost.realized < cost.exact) ++violations;
      t.rows.push_back({static_cast<double>(n), p, cost.params.t, cost.realized, cost.exact,
                        ratio, ratio / std::sqrt(std::log(static_cast<double>(n)))});
    }
  for (double p : p_list) {
    double c = 0.0;
    for (const auto& row : t.rows)
      if (row[1] == p) c = std::max(c, row[6]);
    t.scalars.emplace_back("c_p" + format_double(p), c);
  }
  t.scalars.emplace_back("feasibility_violations", violations);
  return t;
}

Table run_littlewood(const ExperimentConfig& cfg) {
  const auto [lo, hi] = parse_range(get_param(cfg, "K", "16..256"));
  const auto factor = get_int(cfg, "factor", 2);
  if (factor < 2) throw invalid_input("littlewood: factor must be >= 2");
  Table t;
  t.columns = {"K", "lhs", "l1_norm", "ratio"};
  for (long long K = lo; K <= hi; K *= factor) {
    std::vector<std::complex<double>> nonneg(static_cast<std::size_t>(K) + 1, {1.0, 0.0});
    const auto dirichlet = FourierSeries::hermitian(static_cast<int>(K), nonneg);
    const double lhs = littlewood_lhs(dirichlet);
    const double l1 = synthesize_grid(dirichlet, std::max<long long>(4096, 64 * K)).l1_norm();
    t.rows.push_back({static_cast<double>(K), lhs, l1, l1 / lhs});
  }
  const auto ratios = column(t, "ratio");
  const auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
  t.scalars.emplace_back("ratio_min", *mn);
  t.scalars.emplace_back("ratio_max", *mx);
  return t;
}

Table run_sandwich(const ExperimentConfig& cfg) {
  const auto samples = get_int(cfg, "samples", 500);
  const auto degree = static_cast<int>(get_int(cfg, "degree", 64));
  const auto quant = static_cast<int>(get_int(cfg, "quantization", 4096));
  std::mt19937_64 rng(cfg.seed);

  Table t;
  t.columns = {"index", "w1",       "thm2",        "peyre",      "erdos_turan",
               "ext_disc", "thm2_over_w1", "w1_over_ext"};
  int violations = 0;
  for (long long i = 0; i < samples; ++i) {
    const auto series = random_positive_density_series(rng, degree);
    const auto g = to_density(synthesize_grid(series, cfg.grid));
    const auto f = cdf(g);
    const double w1 = w1_circle(f, Cdf::uniform()).cost;
    const double thm2 = thm2_lower_functional(series, g.sup_norm());
    const double peyre = 2.0 * h_minus_one_circle(minus_mean(series));
    const double et = erdos_turan_functional(series, 4 * degree);
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(quant));
    for (const auto& [x, w] : quantile_quantization(f, quant).atoms()) pts.push_back(x);
    const double ext = extreme_discrepancy(PointSet(std::move(pts)));
    if (thm2 > 10.0 * w1 || w1 > 2.0 * ext) ++violations;
    t.rows.push_back({static_cast<double>(i), w1, thm2, peyre, et, ext, thm2 / w1, w1 / ext});
  }
  const auto r1 = column(t, "thm2_over_w1");
  const auto r2 = column(t, "w1_over_ext");
  t.scalars.emplace_back("max_thm2_over_w1", *std::max_element(r1.begin(), r1.end()));
  t.scalars.emplace_back("max_w1_over_ext", *std::max_element(r2.begin(), r2.end()));
  t.scalars.emplace_back("violations", violations);
  return t;
}

}  // namespace

const std::vector<ExperimentInfo>& experiment_manifest() {
  static const std::vector<ExperimentInfo> manifest = {
      {"quadres",
       "Quadratic-residue measures against uniform: exact W2, H^-1 and discrepancy bounds",
       "slope(log W2 vs log p) in [-0.55,-0.45], W2 <= peyre_bound on every row",
       {{"primes", "101..4999"}, {"count", "25"}}},
      {"kronecker",
       "Kronecker sequence {n alpha}: exact W2 and star discrepancy across dyadic N",
       "slope(log W2 vs log N) in [-1.05,-0.95]; N*W2/sqrt(log N) max/min <= 3; "
       "N*D_N grows with log N",
       {{"alpha", "sqrt2"}, {"N", "128..16384"}, {"factor", "2"}}},
      {"uncertainty",
       "Oscillation functional: roots times spectral factor against L1^2/Linf",
       "sin family: ratio constant within 1%; random family: ratio > 0",
       {{"family", "sin"}, {"n", "1..64"}, {"samples", "1000"}, {"degree", "32"}}},
      {"eigen",
       "Exact transport between positive and negative parts of sin(2 pi n x)",
       "slope(log cost vs log n) in [-1.05,-0.95] for each p",
       {{"n", "1..64"}, {"p_list", "1,2"}}},
      {"heat",
       "Two-step heat plan cost against the exact split transport",
       "realized >= exact on every row; realized/exact <= C sqrt(log n) with C <= 10",
       {{"n", "2..64"}, {"p_list", "1,2"}}},
      {"littlewood",
       "Dirichlet-kernel L1 mass against the harmonic coefficient sum",
       "ratio bounded above and below across K",
       {{"K", "16..256"}, {"factor", "2"}}},
      {"sandwich",
       "Random positive trig densities: lower functional vs exact W1 vs discrepancy",
       "thm2 <= 10 W1 and W1 <= 2 extreme discrepancy, zero violations",
       {{"samples", "500"}, {"degree", "64"}, {"quantization", "4096"}}},
  };
  return manifest;
}

Table run_experiment(const ExperimentConfig& cfg) {
  if (cfg.grid < 4) throw invalid_input("experiment: grid must be >= 4");
  if (cfg.name == "quadres") return run_quadres(cfg);
  if (cfg.name == "kronecker") return run_kronecker(cfg);
  if (cfg.name == "uncertainty") return run_uncertainty(cfg);
  if (cfg.name == "eigen") return run_eigen(cfg);
  if (cfg.name == "heat") return run_heat(cfg);
  if (cfg.name == "littlewood") return run_littlewood(cfg);
  if (cfg.name == "sandwich") return run_sandwich(cfg);
  throw invalid_input("experiment: unknown id '" + cfg.name + "'");
}

std::string table_to_csv(const Table& t) {
  std::string out = "# schema=1\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ",";
    out += t.columns[c];
  }
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += format_double(row[c]);
    }
    out += "\n";
  }
  for (const auto& [name, fit] : t.fits)
    out += "# fit " + name + " slope=" + format_double(fit.slope) +
           " intercept=" + format_double(fit.intercept) +
           " r_squared=" + format_double(fit.r_squared) + "\n";
  for (const auto& [name, value] : t.scalars)
    out += "# const " + name + "=" + format_double(value) + "\n";
  return out;
}

std::string table_to_json(const Table& t) {
  std::string out = "{\"schema\":1,\"columns\":[";
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ",";
    out += "\"" + t.columns[c] + "\"";
  }
  out += "],\"rows\":[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c) out += ",";
      out += format_double(t.rows[r][c]);
    }
    out += "]";
  }
  out += "],\"fits\":{";
  for (std::size_t i = 0; i < t.fits.size(); ++i) {
    if (i) out += ",";
    out += "\"" + t.fits[i].first + "\":" + to_json(t.fits[i].second);
  }
  out += "},\"scalars\":{";
  for (std::size_t i = 0; i < t.scalars.size(); ++i) {
    if (i) out += ",";
    out += "\"" + t.scalars[i].first + "\":" + format_double(t.scalars[i].second);
  }
  out += "}}";
  return out;
}

}  // namespace torus_transport
