#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "torus_transport/errors.hpp"

namespace torus_transport {

/// Geodesic distance on the circumference-1 circle, d(x,y) = min(|x-y|, 1-|x-y|).
inline double circle_distance(double x, double y) {
  double d = std::fabs(x - y);
  d -= std::floor(d);
  return d <= 0.5 ? d : 1.0 - d;
}

/// x reduced to [0,1).
inline double wrap_unit(double x) {
  double f = x - std::floor(x);
  return f < 1.0 ? f : 0.0;
}

/// Density sampled at the uniform grid x_j = j/M on the circumference-1 circle.
///
/// Nonnegative by default; the signed variant carries perturbations such as
/// f - mean(f). Operations that require an honest density reject signed input.
class TorusDensity {
 public:
  static TorusDensity density(std::vector<double> samples);
  static TorusDensity signed_density(std::vector<double> samples);

  const std::vector<double>& samples() const { return samples_; }
  int grid_size() const { return static_cast<int>(samples_.size()); }
  bool is_signed() const { return signed_; }

  /// (1/M) sum of samples; equals the integral for band-limited data.
  double mean() const { return mean_; }
  /// Grid L1 norm (1/M) sum |f_j|.
  double l1_norm() const;
  /// Grid sup norm max |f_j|.
  double sup_norm() const;

 private:
  TorusDensity(std::vector<double> samples, bool is_signed);

  std::vector<double> samples_;
  double mean_ = 0.0;
  bool signed_ = false;
};

/// Reinterpret a signed grid as a proper density.  Samples in [-tol, 0) are
/// clamped to zero; anything more negative is an error.
TorusDensity to_density(const TorusDensity& d, double tol = 1e-12);

/// Finitely many weighted point masses on [0,1).
///
/// Construction sorts by location and merges coincident atoms into stacked
/// weights, so an AtomicMeasure is a measure rather than a multiset.
class AtomicMeasure {
 public:
  AtomicMeasure(std::vector<double> locations, std::vector<double> weights);
  explicit AtomicMeasure(std::vector<std::pair<double, double>> atoms);

  const std::vector<std::pair<double, double>>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double total_mass() const { return total_mass_; }

  /// Equal weights 1/N at the given locations.
  static AtomicMeasure empirical(std::vector<double> locations);

 private:
  void normalize();

  std::vector<std::pair<double, double>> atoms_;  // (location, weight), sorted
  double total_mass_ = 0.0;
};

}  // namespace torus_transport
