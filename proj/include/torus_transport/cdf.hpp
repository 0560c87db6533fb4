#pragma once

#include <vector>

#include "torus_transport/measures.hpp"

namespace torus_transport {

enum class CdfKind { kStep, kPiecewiseLinear };

/// Monotone cumulative distribution on [0,1]: a right-continuous step
/// function for atomic measures, piecewise linear for grid densities.
///
/// Step: breakpoints are atom locations, values are cumulative masses
/// including the atom at the breakpoint.  PiecewiseLinear: breakpoints run
/// from 0 to 1, values from 0 to the total mass.
class Cdf {
 public:
  static Cdf from_breakpoints(std::vector<double> breakpoints, std::vector<double> values,
                              CdfKind kind);
  static Cdf uniform(double mass = 1.0);

  CdfKind kind() const { return kind_; }
  double total_mass() const { return values_.back(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }

  /// F(x), right-continuous.
  double value_at(double x) const;
  /// Left-continuous inverse: smallest x with F(x) >= t.  Ties resolve to
  /// the smaller location.
  double quantile(double t) const;

  /// q is affine from x0 to x1 over the mass interval [t0, t1].  Segments
  /// are contiguous and cover (0, total_mass]; jumps of q carry no mass.
  struct QuantileSeg {
    double t0, t1, x0, x1;
  };
  std::vector<QuantileSeg> quantile_segments() const;

  /// F is affine from v0 to v1 over [x0, x1] once jumps at atoms are read as
  /// right-continuous plateaus.  Covers [0, 1].
  struct GraphSeg {
    double x0, x1, v0, v1;
  };
  std::vector<GraphSeg> graph_segments() const;

 private:
  Cdf(std::vector<double> breakpoints, std::vector<double> values, CdfKind kind)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)), kind_(kind) {}

  std::vector<double> breakpoints_;
  std::vector<double> values_;
  CdfKind kind_;
};

/// Step cdf of an atomic measure.
Cdf cdf(const AtomicMeasure& m);

/// Piecewise-linear cdf of a grid density via trapezoid accumulation over
/// the periodic grid (the closing cell uses the wrap value f(1) = f(0)).
/// Signed input is rejected.
Cdf cdf(const TorusDensity& d);

}  // namespace torus_transport
