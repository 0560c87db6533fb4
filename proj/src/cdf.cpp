#include "torus_transport/cdf.hpp"

#include <algorithm>
#include <cmath>

#include "torus_transport/errors.hpp"

namespace torus_transport {

Cdf Cdf::from_breakpoints(std::vector<double> breakpoints, std::vector<double> values,
                          CdfKind kind) {
  if (breakpoints.empty() || breakpoints.size() != values.size())
    throw invalid_input("Cdf: breakpoints/values size mismatch");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw invalid_input("Cdf: breakpoints must be strictly increasing");
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i + 1] < values[i]) throw invalid_input("Cdf: values must be nondecreasing");
  if (values.front() < 0.0) throw invalid_input("Cdf: negative leading value");
  if (kind == CdfKind::kStep) {
    if (breakpoints.front() < 0.0 || breakpoints.back() >= 1.0)
      throw invalid_input("Cdf: step breakpoints must lie in [0,1)");
    if (values.front() <= 0.0) throw invalid_input("Cdf: first cumulative mass must be positive");
  } else {
    if (breakpoints.front() != 0.0 || breakpoints.back() != 1.0)
      throw invalid_input("Cdf: piecewise-linear cdf must span [0,1]");
    if (values.front() != 0.0)
      throw invalid_input("Cdf: piecewise-linear cdf must start at zero");
  }
  if (values.back() <= 0.0) throw invalid_input("Cdf: total mass must be positive");
  return Cdf(std::move(breakpoints), std::move(values), kind);
}

Cdf Cdf::uniform(double mass) {
  if (!(mass > 0.0)) throw invalid_input("Cdf::uniform: mass must be positive");
  return Cdf({0.0, 1.0}, {0.0, mass}, CdfKind::kPiecewiseLinear);
}

double Cdf::value_at(double x) const {
  if (kind_ == CdfKind::kStep) {
    // Last breakpoint <= x.
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.begin()) return 0.0;
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return values_.back();
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto hi = static_cast<std::size_t>(it - breakpoints_.begin());
  const auto lo = hi - 1;
  const double dx = breakpoints_[hi] - breakpoints_[lo];
  const double s = (x - breakpoints_[lo]) / dx;
  return values_[lo] + s * (values_[hi] - values_[lo]);
}

double Cdf::quantile(double t) const {
  if (t <= 0.0) t = 0.0;
  if (t > total_mass()) t = total_mass();
  // First index with values_[i] >= t.
  auto it = std::lower_bound(values_.begin(), values_.end(), t);
  auto i = static_cast<std::size_t>(it - values_.begin());
  if (i >= values_.size()) i = values_.size() - 1;
  if (kind_ == CdfKind::kStep) return breakpoints_[i];
  if (i == 0) return breakpoints_[0];
  const double v0 = values_[i - 1];
  const double v1 = values_[i];
  if (v1 == v0) return breakpoints_[i - 1];
  const double s = (t - v0) / (v1 - v0);
  return breakpoints_[i - 1] + s * (breakpoints_[i] - breakpoints_[i - 1]);
}

std::vector<Cdf::QuantileSeg> Cdf::quantile_segments() const {
  std::vector<QuantileSeg> segs;
  if (kind_ == CdfKind::kStep) {
    segs.reserve(values_.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      segs.push_back({prev, values_[i], breakpoints_[i], breakpoints_[i]});
      prev = values_[i];
    }
    return segs;
  }
  segs.reserve(values_.size());
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
    if (values_[i + 1] > values_[i])
      segs.push_back({values_[i], values_[i + 1], breakpoints_[i], breakpoints_[i + 1]});
  }
  if (segs.empty()) throw invalid_input("Cdf: no mass-carrying segments");
  return segs;
}

std::vector<Cdf::GraphSeg> Cdf::graph_segments() const {
  std::vector<GraphSeg> segs;
  if (kind_ == CdfKind::kStep) {
    double x = 0.0, v = 0.0;
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
      if (breakpoints_[i] > x) segs.push_back({x, breakpoints_[i], v, v});
      x = breakpoints_[i];
      v = values_[i];
    }
    segs.push_back({x, 1.0, v, v});
    return segs;
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    segs.push_back({breakpoints_[i], breakpoints_[i + 1], values_[i], values_[i + 1]});
  return segs;
}

Cdf cdf(const AtomicMeasure& m) {
  std::vector<double> xs, vs;
  xs.reserve(m.size());
  vs.reserve(m.size());
  double cum = 0.0;
  for (const auto& [x, w] : m.atoms()) {
    cum += w;
    xs.push_back(x);
    vs.push_back(cum);
  }
  return Cdf::from_breakpoints(std::move(xs), std::move(vs), CdfKind::kStep);
}

Cdf cdf(const TorusDensity& d) {
  if (d.is_signed()) throw invalid_input("cdf: signed density has no cdf");
  const auto& f = d.samples();
  const int M = d.grid_size();
  std::vector<double> xs(static_cast<std::size_t>(M) + 1), vs(static_cast<std::size_t>(M) + 1);
  xs[0] = 0.0;
  vs[0] = 0.0;
  double cum = 0.0;
  for (int j = 0; j < M; ++j) {
    const double fr = f[static_cast<std::size_t>((j + 1) % M)];
    cum += (f[static_cast<std::size_t>(j)] + fr) / (2.0 * M);
    xs[static_cast<std::size_t>(j + 1)] = (j + 1 == M) ? 1.0 : static_cast<double>(j + 1) / M;
    vs[static_cast<std::size_t>(j + 1)] = cum;
  }
  return Cdf::from_breakpoints(std::move(xs), std::move(vs), CdfKind::kPiecewiseLinear);
}

}  // namespace torus_transport
