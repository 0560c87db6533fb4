#include "torus_transport/bounds.hpp"

#include <cmath>
#include <numbers>

#include "torus_transport/errors.hpp"
#include "torus_transport/io.hpp"

namespace torus_transport {

namespace {

constexpr double kMeanZeroTol = 1e-10;

void require_mean_zero(const FourierSeries& s, const char* who) {
  if (std::fabs(s.mean()) > kMeanZeroTol)
    throw invalid_input(std::string(who) + ": series must have mean zero");
}

}  // namespace

double erdos_turan_functional(const FourierSeries& s, int n) {
  if (n < 1) throw invalid_input("erdos_turan_functional: n must be >= 1");
  double acc = 1.0 / static_cast<double>(n);
  const int top = std::min(n, s.max_freq());
  for (int k = 1; k <= top; ++k) acc += std::abs(s.coeff(k)) / static_cast<double>(k);
  return acc;
}

double leveque_functional(const FourierSeries& s) {
  double acc = 0.0;
  for (int k = 1; k <= s.max_freq(); ++k)
    acc += std::norm(s.coeff(k)) / (static_cast<double>(k) * k);
  return std::cbrt(acc);
}

double h_minus_one_circle(const FourierSeries& s) {
  require_mean_zero(s, "h_minus_one_circle");
  double acc = 0.0;
  for (int k = 1; k <= s.max_freq(); ++k)
    acc += 2.0 * std::norm(s.coeff(k)) / (static_cast<double>(k) * k);
  return std::sqrt(acc) / (2.0 * std::numbers::pi);
}

double h_minus_one_interval(const TorusDensity& h) {
  if (std::fabs(h.mean()) > kMeanZeroTol)
    throw invalid_input("h_minus_one_interval: grid mean must be zero");
  const auto& f = h.samples();
  const int M = h.grid_size();
  // H at the grid nodes by trapezoid accumulation, then the exact integral of
  // the piecewise-linear interpolant squared.
  double acc = 0.0;
  double prev = 0.0;
  const double dx = 1.0 / M;
  for (int j = 0; j < M; ++j) {
    const double fr = f[static_cast<std::size_t>((j + 1) % M)];
    const double next = prev + (f[static_cast<std::size_t>(j)] + fr) * 0.5 * dx;
    acc += dx * (prev * prev + prev * next + next * next) / 3.0;
    prev = next;
  }
  return std::sqrt(acc);
}

double h_minus_one_interval_to_uniform(const Cdf& f) {
  if (std::fabs(f.total_mass() - 1.0) > 1e-9)
    throw invalid_input("h_minus_one_interval_to_uniform: needs a probability cdf");
  double acc = 0.0;
  for (const auto& seg : f.graph_segments()) {
    const double len = seg.x1 - seg.x0;
    if (len <= 0.0) continue;
    // Integrand (x - F(x))^2 is affine-squared on the segment.
    const double a = seg.x0 - seg.v0;
    const double b = 1.0 - (seg.v1 - seg.v0) / len;
    acc += len * (a * a + a * b * len + b * b * len * len / 3.0);
  }
  return std::sqrt(acc);
}

double peyre_w2_bound(const TorusDensity& d) {
  if (d.is_signed()) throw invalid_input("peyre_w2_bound: needs a probability density");
  if (std::fabs(d.mean() - 1.0) > 1e-9)
    throw invalid_input("peyre_w2_bound: density must have total mass 1");
  const int max_freq = d.grid_size() / 2;
  return 2.0 * h_minus_one_circle(minus_mean(fourier_of_density(d, max_freq)));
}

double thm1_functional(const FourierSeries& s, double p) {
  if (!(p >= 1.0)) throw invalid_input("thm1_functional: p must be >= 1");
  require_mean_zero(s, "thm1_functional");
  double acc = 0.0;
  for (int k = 1; k <= s.max_freq(); ++k)
    acc += std::norm(s.coeff(k)) / std::pow(static_cast<double>(k), 2.0 * p - 2.0);
  return std::pow(acc, 1.0 / (2.0 * p));
}

double thm2_lower_functional(const FourierSeries& s, double sup_norm) {
  if (!(sup_norm > 0.0)) throw invalid_input("thm2_lower_functional: sup norm must be positive");
  double acc = 0.0;
  for (int k = 1; k <= s.max_freq(); ++k)
    acc += 2.0 * (1.0 + std::log(static_cast<double>(k))) * std::norm(s.coeff(k)) /
           (static_cast<double>(k) * k);
  return acc / sup_norm;
}

double littlewood_lhs(const FourierSeries& s) {
  double acc = 0.0;
  for (int k = 1; k <= s.max_freq(); ++k)
    acc += std::abs(s.coeff(k)) / static_cast<double>(k);
  return acc;
}

BoundReport bound_report(const FourierSeries& s, int n, const std::vector<double>& p_list) {
  BoundReport report;
  report.series_max_freq = s.max_freq();
  report.truncation_n = n;
  report.p_list = p_list;
  report.truncated = n > s.max_freq();
  if (report.truncated) report.flags["erdos_turan"] = "truncated to available band";

  const auto osc = minus_mean(s);
  report.entries["erdos_turan"] = erdos_turan_functional(s, n);
  report.entries["leveque"] = leveque_functional(s);
  report.entries["littlewood_lhs"] = littlewood_lhs(s);
  report.entries["h_minus_one_circle"] = h_minus_one_circle(osc);
  report.entries["peyre_w2"] = 2.0 * h_minus_one_circle(osc);
  for (double p : p_list)
    report.entries["thm1_p" + format_double(p)] = thm1_functional(osc, p);
  // Theorem 2 reads the series as the band-limited function it represents.
  if (s.max_freq() >= 1) {
    const int grid = std::max(4096, 4 * s.max_freq() + 4);
    const double sup = synthesize_grid(s, grid).sup_norm();
    if (sup > 0.0) {
      report.entries["thm2_lower"] = thm2_lower_functional(s, sup);
    } else {
      report.entries["thm2_lower"] = std::nan("");
      report.flags["thm2_lower"] = "zero function has no sup norm";
    }
  } else {
    report.entries["thm2_lower"] = 0.0;
  }
  return report;
}

}  // namespace torus_transport
