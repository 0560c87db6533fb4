#pragma once

#include <vector>

namespace torus_transport {

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares of y against x; needs at least 3 points.
SlopeFit fit_linear(const std::vector<double>& xs, const std::vector<double>& ys);

/// Least squares on (log x, log y); all data must be positive.
SlopeFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace torus_transport
