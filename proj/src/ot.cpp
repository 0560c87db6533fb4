#include "torus_transport/ot.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "torus_transport/errors.hpp"

namespace torus_transport {

namespace detail {

double abs_pow_affine_integral(double a, double b, double s0, double s1, double p) {
  const double len = s1 - s0;
  if (len <= 0.0) return 0.0;
  const double c0 = a + b * s0;
  const double c1 = a + b * s1;
  const double spread = std::fabs(c1 - c0);
  if (spread <= 1e-9 * std::max(std::fabs(c0), std::fabs(c1))) {
    const double mid = 0.5 * (c0 + c1);
    return std::pow(std::fabs(mid), p) * len;
  }
  // phi' (u) = (p+1) |u|^p, smooth across the sign change.
  auto phi = [p](double u) { return u * std::pow(std::fabs(u), p); };
  return (phi(c1) - phi(c0)) * len / (spread * (p + 1.0)) * ((c1 >= c0) ? 1.0 : -1.0);
}

QuantileProfile::QuantileProfile(const Cdf& c) : segs(c.quantile_segments()) {
  knots.reserve(segs.size() + 1);
  knots.push_back(segs.front().t0);
  for (const auto& s : segs) knots.push_back(s.t1);
  mass = c.total_mass();
}

void QuantileProfile::affine_at(double t, double* a, double* b) const {
  auto it = std::upper_bound(knots.begin(), knots.end(), t);
  auto i = static_cast<std::size_t>(it - knots.begin());
  if (i == 0) i = 1;
  if (i > segs.size()) i = segs.size();
  const auto& s = segs[i - 1];
  const double dt = s.t1 - s.t0;
  const double slope = (s.x1 - s.x0) / dt;
  *b = slope;
  *a = s.x0 - slope * s.t0;
}

double quantile_coupling_cost_pow(const QuantileProfile& a, const QuantileProfile& b, double s,
                                  double p, bool circular) {
  const double m = a.mass;
  if (!circular && s != 0.0)
    throw invalid_input("quantile_coupling_cost_pow: interval coupling takes no shift");
  const double n0 = std::floor(s / m);
  const double sigma = s - n0 * m;  // in [0, m)
  const double seam = m - sigma;

  std::vector<double> cuts;
  cuts.reserve(a.knots.size() + b.knots.size() + 3);
  cuts.push_back(0.0);
  cuts.push_back(m);
  for (double t : a.knots)
    if (t > 0.0 && t < m) cuts.push_back(t);
  for (double tau : b.knots) {
    double t = tau - sigma;
    if (t < 0.0) t += m;
    if (t > 0.0 && t < m) cuts.push_back(t);
  }
  if (seam > 0.0 && seam < m) cuts.push_back(seam);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double t0 = cuts[i];
    const double t1 = cuts[i + 1];
    if (t1 <= t0) continue;
    const double tm = 0.5 * (t0 + t1);
    double aa = 0.0, ab = 0.0;
    a.affine_at(tm, &aa, &ab);
    const double win = (tm < seam) ? 0.0 : 1.0;
    const double tau_m = tm + sigma - win * m;
    double ba = 0.0, bb = 0.0;
    b.affine_at(tau_m, &ba, &bb);
    // q_b_lift(t+s) = ba + bb (t + sigma - win m) + (n0 + win) * 1
    const double lift_a = ba + bb * (sigma - win * m) + (n0 + win);
    acc += abs_pow_affine_integral(aa - lift_a, ab - bb, t0, t1, p);
  }
  return acc;
}

}  // namespace detail

namespace {

constexpr double kMassTol = 1e-9;

void require_equal_mass(const Cdf& mu, const Cdf& nu, const char* who) {
  if (std::fabs(mu.total_mass() - nu.total_mass()) > kMassTol)
    throw invalid_input(std::string(who) + ": total masses differ beyond 1e-9");
}

struct DiffSeg {
  double x0, x1, d0, d1;
};

// F_mu - F_nu as affine pieces on the merged breakpoints over [0,1].
std::vector<DiffSeg> difference_segments(const Cdf& mu, const Cdf& nu) {
  std::vector<double> xs{0.0, 1.0};
  for (double x : mu.breakpoints())
    if (x > 0.0 && x < 1.0) xs.push_back(x);
  for (double x : nu.breakpoints())
    if (x > 0.0 && x < 1.0) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto cell_values = [](const Cdf& c, double x0, double x1, double* v0, double* v1) {
    if (c.kind() == CdfKind::kStep) {
      *v0 = c.value_at(x0);
      *v1 = *v0;
    } else {
      *v0 = c.value_at(x0);
      *v1 = c.value_at(x1);
    }
  };

  std::vector<DiffSeg> segs;
  segs.reserve(xs.size());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double x0 = xs[i];
    const double x1 = xs[i + 1];
    if (x1 <= x0) continue;
    double a0, a1, b0, b1;
    cell_values(mu, x0, x1, &a0, &a1);
    cell_values(nu, x0, x1, &b0, &b1);
    segs.push_back({x0, x1, a0 - b0, a1 - b1});
  }
  return segs;
}

// Lebesgue median of D(x) over [0,1]: smallest level c with |{D <= c}| >= 1/2.
double lebesgue_median(const std::vector<DiffSeg>& segs) {
  struct Event {
    double level;
    double jump;   // point mass arriving at this level
    double slope;  // density change at this level
  };
  std::vector<Event> events;
  events.reserve(2 * segs.size());
  for (const auto& s : segs) {
    const double len = s.x1 - s.x0;
    if (len <= 0.0) continue;
    const double lo = std::min(s.d0, s.d1);
    const double hi = std::max(s.d0, s.d1);
    if (hi - lo <= 1e-15 * std::max(1.0, std::fabs(hi))) {
      events.push_back({lo, len, 0.0});
    } else {
      const double dens = len / (hi - lo);
      events.push_back({lo, 0.0, dens});
      events.push_back({hi, 0.0, -dens});
    }
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.level < b.level; });

  const double target = 0.5;
  double cum = 0.0;
  double dens = 0.0;
  double level = events.front().level;
  for (const auto& e : events) {
    if (e.level > level && dens > 0.0) {
      const double grow = dens * (e.level - level);
      if (cum + grow >= target) return level + (target - cum) / dens;
      cum += grow;
    }
    level = std::max(level, e.level);
    dens += e.slope;
    cum += e.jump;
    if (cum >= target) return e.level;
  }
  return level;
}

double integral_abs_shifted(const std::vector<DiffSeg>& segs, double c) {
  double acc = 0.0;
  for (const auto& s : segs) {
    const double len = s.x1 - s.x0;
    if (len <= 0.0) continue;
    const double slope = (s.d1 - s.d0) / len;
    acc += detail::abs_pow_affine_integral(s.d0 - c, slope, 0.0, len, 1.0);
  }
  return acc;
}

}  // namespace

double w1_interval(const Cdf& mu, const Cdf& nu) {
  require_equal_mass(mu, nu, "w1_interval");
  return integral_abs_shifted(difference_segments(mu, nu), 0.0);
}

TransportCost w1_circle(const Cdf& mu, const Cdf& nu) {
  require_equal_mass(mu, nu, "w1_circle");
  const auto segs = difference_segments(mu, nu);
  const double c = lebesgue_median(segs);
  return {1.0, integral_abs_shifted(segs, c), c};
}

double wp_interval(const Cdf& mu, const Cdf& nu, double p) {
  if (!(p >= 1.0)) throw invalid_input("wp_interval: p must be >= 1");
  require_equal_mass(mu, nu, "wp_interval");
  detail::QuantileProfile a(mu), b(nu);
  const double cost_pow = detail::quantile_coupling_cost_pow(a, b, 0.0, p, false);
  return std::pow(cost_pow, 1.0 / p);
}

TransportCost wp_circle(const Cdf& mu, const Cdf& nu, double p) {
  if (!(p >= 1.0)) throw invalid_input("wp_circle: p must be >= 1");
  require_equal_mass(mu, nu, "wp_circle");
  if (p == 1.0) return w1_circle(mu, nu);

  detail::QuantileProfile a(mu), b(nu);
  const double m = a.mass;
  auto objective = [&](double s) {
    return detail::quantile_coupling_cost_pow(a, b, s, p, true);
  };

  // The shift objective is convex; any optimal shift lies in [-m, m] since at
  // the endpoints every displacement has a single sign.
  constexpr int kCoarse = 64;
  double best_s = 0.0;
  double best_val = objective(0.0);
  for (int i = 0; i <= kCoarse; ++i) {
    const double s = -m + 2.0 * m * static_cast<double>(i) / kCoarse;
    const double val = objective(s);
    if (val < best_val) {
      best_val = val;
      best_s = s;
    }
  }
  double lo = best_s - 2.0 * m / kCoarse;
  double hi = best_s + 2.0 * m / kCoarse;

  int iters = 0;
  while (hi - lo > 1e-12) {
    if (++iters > 10000)
      throw numeric_failure("wp_circle: shift refinement exceeded 1e4 steps; lo=" +
                            std::to_string(lo) + " hi=" + std::to_string(hi));
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (objective(m1) <= objective(m2))
      hi = m2;
    else
      lo = m1;
  }
  const double s_star = 0.5 * (lo + hi);
  const double val = std::min(best_val, objective(s_star));
  return {p, std::pow(val, 1.0 / p), s_star};
}

double mass_scaled_wp(const TorusDensity& fplus, const TorusDensity& fminus, double p) {
  if (fplus.is_signed() || fminus.is_signed())
    throw invalid_input("mass_scaled_wp: parts must be nonnegative densities");
  const double mp = fplus.mean();
  const double mm = fminus.mean();
  if (std::fabs(mp - mm) > kMassTol)
    throw invalid_input("mass_scaled_wp: part masses differ beyond 1e-9");
  const double m = 0.5 * (mp + mm);
  if (m <= 0.0) return 0.0;
  auto normalize = [m](const TorusDensity& d) {
    std::vector<double> s = d.samples();
    for (double& v : s) v /= m;
    return TorusDensity::density(std::move(s));
  };
  const auto cost = wp_circle(cdf(normalize(fplus)), cdf(normalize(fminus)), p);
  return std::pow(m * std::pow(cost.cost, p), 1.0 / p);
}

}  // namespace torus_transport
