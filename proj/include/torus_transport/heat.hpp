#pragma once

#include "torus_transport/fourier.hpp"
#include "torus_transport/measures.hpp"

namespace torus_transport {

/// Parameters chosen by the two-step transport recipe.
struct HeatParams {
  double t = 0.0;
  double lambda = 0.0;
  double p = 1.0;
};

/// Pointwise-disjoint positive and negative parts of a mean-zero function.
struct SplitPair {
  TorusDensity fplus;
  TorusDensity fminus;
};

/// Heat semigroup on the unit circle: c_k -> c_k e^{-4 pi^2 k^2 t}.
FourierSeries heat_evolve(const FourierSeries& s, double t);

/// p-th distance moment of the heat kernel, integral of d(z,0)^p p_t(z) dz,
/// synthesized from the Fourier side with terms below 1e-300 dropped.
double heat_kernel_moment(double t, double p);

/// Realized cost of the heat-kernel coupling moving |f| for time t:
/// (||f||_L1 * kernel moment)^{1/p}.  Upper-bounds W_p(f dx, e^{t Delta}f dx).
double heat_plan_cost(const TorusDensity& d, double t, double p);

struct SmoothingDecomposition {
  FourierSeries truncated;  // evolved series restricted to |k| <= n log n
  double tail_l1 = 0.0;     // sum_{|k| > cutoff} |c_k| e^{-4 pi^2 k^2 t}
  double kernel_cost = 0.0;
  double t = 0.0;
  double cutoff = 0.0;
};

/// Evolve by t = 1/n^2, cut at |k| <= n log n, and price the heat step.
SmoothingDecomposition smoothing_decomposition(const FourierSeries& s, int n, double p);

/// Grid-evaluated positive/negative parts of a mean-zero series.
SplitPair sign_split(const FourierSeries& s, int grid_size);

/// Exact W_p between the positive and negative parts of sin(2 pi n x),
/// carrying their common mass; decays like 1/n.
double eigen_split_cost(int n, double p);

/// Number of sign changes of the synthesized function, located on a 64K grid
/// and each confirmed by bisection to width 1e-12.  Tangential zeros are not
/// counted; the identically-zero series is rejected.
int count_sign_changes(const FourierSeries& s);

struct UncertaintySides {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  int roots = 0;
};

/// lhs = (#sign changes) (sum_{k>=1} |c_k|^2/k^2)^{1/2};
/// rhs = ||f||_L1^2 / ||f||_Linf via grid norms.
UncertaintySides uncertainty_sides(const FourierSeries& s);

/// The same machinery applied to f': lhs = (#critical points) ||f - mean||_L2,
/// rhs = ||f'||_L1^2 / ||f'||_Linf.
UncertaintySides critical_point_sides(const FourierSeries& s);

struct TwoStepCost {
  double realized = 0.0;
  double exact = 0.0;
  HeatParams params;
};

/// Two-step plan for a high-frequency mean-zero series (spectrum supported on
/// |k| >= k0): heat step at the recipe time t, then a diameter-1/2 sweep of
/// the leftover L1 mass.  realized >= exact is asserted.
TwoStepCost high_freq_two_step_cost(const FourierSeries& s, double p);

/// The series of sin(2 pi n x).
FourierSeries sine_series(int n);

}  // namespace torus_transport
