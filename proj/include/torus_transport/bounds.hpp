#pragma once

#include <map>
#include <string>
#include <vector>

#include "torus_transport/cdf.hpp"
#include "torus_transport/fourier.hpp"
#include "torus_transport/measures.hpp"

namespace torus_transport {

/// Erdos-Turan right-hand side, 1/n + sum_{k=1..n} |c_k|/k, raw (no absolute
/// constant applied).  When n exceeds the available band only the available
/// coefficients enter; bound_report records the truncation.
double erdos_turan_functional(const FourierSeries& s, int n);

/// LeVeque right-hand side, (sum_{k>=1} |c_k|^2/k^2)^{1/3}.
double leveque_functional(const FourierSeries& s);

/// Homogeneous H^{-1} norm on the unit circle of a mean-zero series:
/// (sum_{k != 0} |c_k|^2 / (4 pi^2 k^2))^{1/2}.  Matches the dual of
/// ||g'||_{L^2} under the circumference-1 convention.
double h_minus_one_circle(const FourierSeries& s);

/// H^{-1}([0,1]) norm of a mean-zero signed grid function h:
/// (integral of H(x)^2 dx)^{1/2} with H the antiderivative of h.
double h_minus_one_interval(const TorusDensity& h);

/// Same norm computed for h = 1 - g directly from the cdf F of a probability
/// measure g dx: (integral of (x - F(x))^2 dx)^{1/2}.  Exact for step and
/// piecewise-linear cdfs.
double h_minus_one_interval_to_uniform(const Cdf& f);

/// Peyre's W_2 upper bound for a probability density: 2 ||g - 1||_{H^{-1}}.
double peyre_w2_bound(const TorusDensity& d);

/// Theorem-1 style functional (sum_{k>=1} |c_k|^2 / k^{2p-2})^{1/(2p)} for a
/// mean-zero perturbation series.
double thm1_functional(const FourierSeries& s, double p);

/// Theorem-2 style lower functional:
/// (1/sup_norm) sum_{k != 0} (1 + log|k|)/k^2 |c_k|^2, natural log.
double thm2_lower_functional(const FourierSeries& s, double sup_norm);

/// McGehee-Pigno-Smith left-hand side, sum_{k=1..K} |c_k|/k.
double littlewood_lhs(const FourierSeries& s);

/// Named evaluation of every functional above on one series.  Mean-sensitive
/// functionals act on the mean-removed series; entries that cannot be
/// evaluated are NaN with a note in flags.
struct BoundReport {
  std::map<std::string, double> entries;
  std::map<std::string, std::string> flags;
  int series_max_freq = 0;
  int truncation_n = 0;
  std::vector<double> p_list;
  bool truncated = false;
};

BoundReport bound_report(const FourierSeries& s, int n, const std::vector<double>& p_list);

}  // namespace torus_transport
