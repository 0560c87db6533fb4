#pragma once

#include <utility>
#include <vector>

#include "torus_transport/cdf.hpp"
#include "torus_transport/measures.hpp"

namespace torus_transport {

/// Result of a circle transport computation: the distance W_p (p-th root of
/// the optimal cost) and the optimal mass-rotation offset of the quantile
/// coupling (how much cumulative mass is rotated past the cut at 0).
struct TransportCost {
  double p = 1.0;
  double cost = 0.0;
  double shift = 0.0;
};

struct PlanEntry {
  int source = 0;
  int target = 0;
  double mass = 0.0;
};

/// Coupling between two atomic measures; row sums match source weights and
/// column sums match target weights within 1e-9.
struct DiscretePlan {
  std::vector<PlanEntry> entries;
};

/// W_1 on the interval [0,1]: integral of |F_mu - F_nu|.  Exact for
/// step/piecewise-linear cdfs.
double w1_interval(const Cdf& mu, const Cdf& nu);

/// W_1 on the circle: min over c of integral |F_mu - F_nu - c|, with the
/// optimal c the Lebesgue median of F_mu - F_nu.
TransportCost w1_circle(const Cdf& mu, const Cdf& nu);

/// W_p on the interval via the quantile coupling, exact piecewise integration.
double wp_interval(const Cdf& mu, const Cdf& nu, double p);

/// W_p on the circle via the shift-optimized quantile coupling.  For p = 1
/// the median formula is used; for p > 1 the convex shift objective is
/// minimized by a coarse scan plus ternary refinement.
TransportCost wp_circle(const Cdf& mu, const Cdf& nu, double p);

/// Exact small-scale transportation LP (network simplex).  Returns the
/// optimal cost^p and an optimal feasible plan.  Caps at 256 atoms per side.
std::pair<double, DiscretePlan> discrete_ot_oracle(const AtomicMeasure& a,
                                                   const AtomicMeasure& b, double p);

/// W_p between two nonnegative grid measures of equal total mass m:
/// normalizes to probability, solves on the circle, returns (m cost^p)^{1/p}.
double mass_scaled_wp(const TorusDensity& fplus, const TorusDensity& fminus, double p);

namespace detail {

/// Integral of |a + b s|^p over [s0, s1] in closed form.
double abs_pow_affine_integral(double a, double b, double s0, double s1, double p);

/// Precomputed quantile geometry for repeated shifted evaluations.
struct QuantileProfile {
  std::vector<Cdf::QuantileSeg> segs;
  std::vector<double> knots;  // t-values of segment boundaries, ascending
  double mass = 0.0;

  explicit QuantileProfile(const Cdf& c);
  /// Affine parameters of q on the segment containing t: q(t) = a + b t.
  void affine_at(double t, double* a, double* b) const;
};

/// Integral over [0, m] of |q_a(t) - q_b_lift(t + s)|^p dt, where the lifted
/// quantile satisfies q_lift(u + m) = q_lift(u) + 1.  With s = 0 and
/// circular = false this is the interval quantile coupling cost.
double quantile_coupling_cost_pow(const QuantileProfile& a, const QuantileProfile& b, double s,
                                  double p, bool circular);

}  // namespace detail

}  // namespace torus_transport
