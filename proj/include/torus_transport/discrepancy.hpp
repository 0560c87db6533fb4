#pragma once

#include <vector>

#include "torus_transport/measures.hpp"

namespace torus_transport {

/// Sorted finite point set on [0,1); duplicates are allowed and act as
/// stacked equal-weight atoms.
class PointSet {
 public:
  explicit PointSet(std::vector<double> points);

  const std::vector<double>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<double> points_;
};

/// Star discrepancy sup_x |#{x_i <= x}/N - x| via the sorted-order formula.
double star_discrepancy(const PointSet& ps);

/// Extreme discrepancy: sup over all arcs (wrapping allowed) of
/// |mu(J) - |J||, evaluating both one-sided counts at every point.
double extreme_discrepancy(const PointSet& ps);

/// L^p discrepancy (integral of d(x)^p dx)^{1/p} with d anchored at 0,
/// integrated exactly between consecutive points.
double lp_discrepancy(const PointSet& ps, double p);

struct W1DiscrepancyGap {
  double w1 = 0.0;
  double disc = 0.0;
  double ratio = 0.0;
};

/// w1_circle(empirical measure, uniform), the extreme discrepancy, and their
/// ratio.
W1DiscrepancyGap w1_vs_discrepancy_gap(const PointSet& ps);

}  // namespace torus_transport
