#include "torus_transport/discrepancy.hpp"

#include <algorithm>
#include <cmath>

#include "torus_transport/cdf.hpp"
#include "torus_transport/errors.hpp"
#include "torus_transport/ot.hpp"

namespace torus_transport {

PointSet::PointSet(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw invalid_input("PointSet: need at least one point");
  for (double x : points_)
    if (!std::isfinite(x) || x < 0.0 || x >= 1.0)
      throw invalid_input("PointSet: points must lie in [0,1)");
  std::sort(points_.begin(), points_.end());
}

double star_discrepancy(const PointSet& ps) {
  const auto& x = ps.points();
  const double n = static_cast<double>(x.size());
  double best = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    best = std::max(best, (static_cast<double>(i) + 1.0) / n - xi);
    best = std::max(best, xi - static_cast<double>(i) / n);
  }
  return best;
}

double extreme_discrepancy(const PointSet& ps) {
  if (ps.size() > 100000) throw invalid_input("extreme_discrepancy: more than 1e5 points");
  const auto& x = ps.points();
  const double n = static_cast<double>(x.size());
  // G(x) = F(x) - x rises only at points and drifts down in between, so the
  // sup over arcs is (max of G just after a point) - (min of G just before).
  double g_hi = 0.0;
  double g_lo = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    g_hi = std::max(g_hi, (static_cast<double>(i) + 1.0) / n - x[i]);
    g_lo = std::min(g_lo, static_cast<double>(i) / n - x[i]);
  }
  return g_hi - g_lo;
}

double lp_discrepancy(const PointSet& ps, double p) {
  if (!(p >= 1.0)) throw invalid_input("lp_discrepancy: p must be >= 1");
  const auto& x = ps.points();
  const double n = static_cast<double>(x.size());
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i <= x.size(); ++i) {
    const double next = (i < x.size()) ? x[i] : 1.0;
    // F = i/n on [prev, next); integrand |i/n - x|^p.
    acc += detail::abs_pow_affine_integral(static_cast<double>(i) / n, -1.0, prev, next, p);
    prev = next;
  }
  return std::pow(acc, 1.0 / p);
}

W1DiscrepancyGap w1_vs_discrepancy_gap(const PointSet& ps) {
  const auto empirical = AtomicMeasure::empirical(ps.points());
  const double w1 = w1_circle(cdf(empirical), Cdf::uniform()).cost;
  const double disc = extreme_discrepancy(ps);
  return {w1, disc, w1 / disc};
}

}  // namespace torus_transport
