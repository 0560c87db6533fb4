#include "torus_transport/heat.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "torus_transport/cdf.hpp"
#include "torus_transport/errors.hpp"
#include "torus_transport/ot.hpp"

namespace torus_transport {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMeanZeroTol = 1e-10;

double eigenvalue(int k) { return 4.0 * kPi * kPi * static_cast<double>(k) * k; }

void require_mean_zero(const FourierSeries& s, const char* who) {
  if (std::fabs(s.mean()) > kMeanZeroTol)
    throw invalid_input(std::string(who) + ": series must have mean zero");
}

int synthesis_grid(const FourierSeries& s, int floor_size = 4096) {
  return std::max(floor_size, 128 * std::max(1, s.max_freq()));
}

}  // namespace

FourierSeries sine_series(int n) {
  if (n < 1) throw invalid_input("sine_series: n must be >= 1");
  std::vector<std::complex<double>> nonneg(static_cast<std::size_t>(n + 1), {0.0, 0.0});
  nonneg[static_cast<std::size_t>(n)] = {0.0, -0.5};
  return FourierSeries::hermitian(n, nonneg);
}

FourierSeries heat_evolve(const FourierSeries& s, double t) {
  if (t < 0.0) throw invalid_input("heat_evolve: t must be >= 0");
  return map_coeffs(s, [t](int k) { return std::exp(-eigenvalue(k) * t); });
}

double heat_kernel_moment(double t, double p) {
  if (!(t > 0.0)) throw invalid_input("heat_kernel_moment: t must be positive");
  if (!(p >= 1.0)) throw invalid_input("heat_kernel_moment: p must be >= 1");
  // e^{-4 pi^2 k^2 t} < 1e-300 once k exceeds 4.19/sqrt(t).
  const int k_top = static_cast<int>(std::ceil(4.19 / std::sqrt(t))) + 1;
  std::vector<std::complex<double>> damp(static_cast<std::size_t>(k_top) + 1, {0.0, 0.0});
  damp[0] = {1.0, 0.0};
  for (int k = 1; k <= k_top; ++k)
    damp[static_cast<std::size_t>(k)] = {std::exp(-eigenvalue(k) * t), 0.0};
  int grid = 4096;
  while (grid < 16 * k_top) grid *= 2;
  const auto kernel = synthesize_grid(FourierSeries::hermitian(k_top, damp), grid);
  double acc = 0.0;
  for (int j = 0; j < grid; ++j) {
    const double z = static_cast<double>(j) / grid;
    const double dist = z <= 0.5 ? z : 1.0 - z;
    acc += std::pow(dist, p) * kernel.samples()[static_cast<std::size_t>(j)];
  }
  return acc / grid;
}

double heat_plan_cost(const TorusDensity& d, double t, double p) {
  if (!(t > 0.0)) throw invalid_input("heat_plan_cost: t must be positive");
  return std::pow(d.l1_norm() * heat_kernel_moment(t, p), 1.0 / p);
}

SmoothingDecomposition smoothing_decomposition(const FourierSeries& s, int n, double p) {
  if (n < 2) throw invalid_input("smoothing_decomposition: n must be >= 2");
  const double t = 1.0 / (static_cast<double>(n) * n);
  const double cutoff = static_cast<double>(n) * std::log(static_cast<double>(n));
  const auto evolved = heat_evolve(s, t);

  const int keep = std::min(s.max_freq(), static_cast<int>(std::floor(cutoff)));
  std::vector<std::complex<double>> trunc(static_cast<std::size_t>(keep) + 1);
  for (int k = 0; k <= keep; ++k) trunc[static_cast<std::size_t>(k)] = evolved.coeff(k);

  double tail = 0.0;
  for (int k = keep + 1; k <= s.max_freq(); ++k)
    if (static_cast<double>(k) > cutoff) tail += 2.0 * std::abs(evolved.coeff(k));

  const double l1 = synthesize_grid(s, synthesis_grid(s)).l1_norm();
  const double kernel_cost = std::pow(l1 * heat_kernel_moment(t, p), 1.0 / p);
  return {FourierSeries::hermitian(keep, trunc), tail, kernel_cost, t, cutoff};
}

SplitPair sign_split(const FourierSeries& s, int grid_size) {
  require_mean_zero(s, "sign_split");
  const auto f = synthesize_grid(s, grid_size);
  std::vector<double> plus(f.samples().size()), minus(f.samples().size());
  for (std::size_t j = 0; j < f.samples().size(); ++j) {
    const double v = f.samples()[j];
    plus[j] = v > 0.0 ? v : 0.0;
    minus[j] = v < 0.0 ? -v : 0.0;
  }
  SplitPair pair{TorusDensity::density(std::move(plus)), TorusDensity::density(std::move(minus))};
  if (std::fabs(pair.fplus.mean() - pair.fminus.mean()) > 1e-8)
    throw numeric_failure("sign_split: part masses differ beyond quadrature tolerance");
  return pair;
}

double eigen_split_cost(int n, double p) {
  if (n < 1) throw invalid_input("eigen_split_cost: n must be >= 1");
  const auto s = sine_series(n);
  const auto pair = sign_split(s, synthesis_grid(s));
  return mass_scaled_wp(pair.fplus, pair.fminus, p);
}

int count_sign_changes(const FourierSeries& s) {
  if (s.max_freq() < 1 || s.max_abs_coeff() == 0.0)
    throw invalid_input("count_sign_changes: function is identically zero");
  require_mean_zero(s, "count_sign_changes");

  double coeff_mass = 0.0;
  for (int k = 1; k <= s.max_freq(); ++k) coeff_mass += 2.0 * std::abs(s.coeff(k));
  const double noise = 1e-11 * std::max(1.0, coeff_mass);

  const int grid = 64 * s.max_freq();
  const auto f = synthesize_grid(s, grid);
  // Indices of samples whose sign is trustworthy.
  std::vector<int> sig;
  sig.reserve(f.samples().size());
  for (int j = 0; j < grid; ++j)
    if (std::fabs(f.samples()[static_cast<std::size_t>(j)]) > noise) sig.push_back(j);
  if (sig.size() < 2) throw invalid_input("count_sign_changes: function is numerically zero");

  int count = 0;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const int ja = sig[i];
    const int jb = sig[(i + 1) % sig.size()];
    const double fa = f.samples()[static_cast<std::size_t>(ja)];
    const double fb = f.samples()[static_cast<std::size_t>(jb)];
    if ((fa > 0.0) == (fb > 0.0)) continue;
    // Confirm one transversal crossing inside the (possibly wrapped) bracket.
    double a = static_cast<double>(ja) / grid;
    double b = static_cast<double>(jb) / grid + (jb <= ja ? 1.0 : 0.0);
    double va = fa;
    while (b - a > 1e-12) {
      const double mtp = 0.5 * (a + b);
      const double vm = s.evaluate(mtp);
      if ((vm > 0.0) == (va > 0.0)) {
        a = mtp;
        va = vm;
      } else {
        b = mtp;
      }
    }
    ++count;
  }
  return count;
}

UncertaintySides uncertainty_sides(const FourierSeries& s) {
  require_mean_zero(s, "uncertainty_sides");
  const int roots = count_sign_changes(s);
  double spectral = 0.0;
  for (int k = 1; k <= s.max_freq(); ++k)
    spectral += std::norm(s.coeff(k)) / (static_cast<double>(k) * k);
  spectral = std::sqrt(spectral);
  const auto f = synthesize_grid(s, 64 * s.max_freq());
  const double l1 = f.l1_norm();
  const double sup = f.sup_norm();
  if (sup <= 0.0) throw invalid_input("uncertainty_sides: zero function");
  const double lhs = roots * spectral;
  const double rhs = l1 * l1 / sup;
  return {lhs, rhs, lhs / rhs, roots};
}

UncertaintySides critical_point_sides(const FourierSeries& s) {
  const auto derivative = map_coeffs(s, [](int k) {
    return std::complex<double>{0.0, 2.0 * kPi * static_cast<double>(k)};
  });
  if (derivative.max_abs_coeff() == 0.0)
    throw invalid_input("critical_point_sides: zero derivative");
  const int critical = count_sign_changes(derivative);
  double l2_osc = 0.0;
  for (int k = 1; k <= s.max_freq(); ++k) l2_osc += 2.0 * std::norm(s.coeff(k));
  l2_osc = std::sqrt(l2_osc);
  const auto df = synthesize_grid(derivative, 64 * derivative.max_freq());
  const double l1 = df.l1_norm();
  const double sup = df.sup_norm();
  const double lhs = critical * l2_osc;
  const double rhs = l1 * l1 / sup;
  return {lhs, rhs, lhs / rhs, critical};
}

TwoStepCost high_freq_two_step_cost(const FourierSeries& s, double p) {
  if (!(p >= 1.0)) throw invalid_input("high_freq_two_step_cost: p must be >= 1");
  require_mean_zero(s, "high_freq_two_step_cost");
  const int k0 = s.min_active_freq();
  if (k0 < 1) throw invalid_input("high_freq_two_step_cost: empty spectrum");
  const double lambda = eigenvalue(k0);

  const int grid = synthesis_grid(s);
  const double l1 = synthesize_grid(s, grid).l1_norm();
  const double l2 = std::sqrt(s.l2_norm_sq());

  bool single = true;
  for (int k = k0 + 1; k <= s.max_freq(); ++k)
    if (std::abs(s.coeff(k)) > 1e-14) single = false;
  const double t = single ? std::log(lambda) / lambda
                          : std::log(std::pow(lambda, p / 2.0) * l2 / l1) / lambda;

  const double moment = heat_kernel_moment(t, p);
  const double g_l1 = synthesize_grid(heat_evolve(s, t), grid).l1_norm();
  // Heat step for each part, then sweep the evolved residual across at most
  // half the circle.
  const double realized = 2.0 * std::pow(moment * l1 / 2.0, 1.0 / p) +
                          std::pow(std::pow(0.5, p) * g_l1 / 2.0, 1.0 / p);

  const auto pair = sign_split(s, grid);
  const double exact = mass_scaled_wp(pair.fplus, pair.fminus, p);
  if (realized < exact - 1e-9)
    throw numeric_failure("high_freq_two_step_cost: realized plan undercut the exact cost");
  return {realized, exact, {t, lambda, p}};
}

}  // namespace torus_transport
