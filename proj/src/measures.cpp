#include "torus_transport/measures.hpp"

#include <algorithm>
#include <cmath>

namespace torus_transport {

TorusDensity::TorusDensity(std::vector<double> samples, bool is_signed)
    : samples_(std::move(samples)), signed_(is_signed) {
  if (samples_.size() < 4) throw invalid_input("TorusDensity: grid size must be >= 4");
  double sum = 0.0;
  for (double v : samples_) {
    if (!std::isfinite(v)) throw invalid_input("TorusDensity: non-finite sample");
    if (!signed_ && v < 0.0) throw invalid_input("TorusDensity: negative sample in density");
    sum += v;
  }
  mean_ = sum / static_cast<double>(samples_.size());
  if (!std::isfinite(mean_)) throw invalid_input("TorusDensity: non-finite mean");
}

TorusDensity TorusDensity::density(std::vector<double> samples) {
  return TorusDensity(std::move(samples), false);
}

TorusDensity TorusDensity::signed_density(std::vector<double> samples) {
  return TorusDensity(std::move(samples), true);
}

double TorusDensity::l1_norm() const {
  double sum = 0.0;
  for (double v : samples_) sum += std::fabs(v);
  return sum / static_cast<double>(samples_.size());
}

double TorusDensity::sup_norm() const {
  double m = 0.0;
  for (double v : samples_) m = std::max(m, std::fabs(v));
  return m;
}

TorusDensity to_density(const TorusDensity& d, double tol) {
  std::vector<double> s = d.samples();
  for (double& v : s) {
    if (v < -tol)
      throw invalid_input("to_density: sample below -tol, input is genuinely signed");
    if (v < 0.0) v = 0.0;
  }
  return TorusDensity::density(std::move(s));
}

AtomicMeasure::AtomicMeasure(std::vector<double> locations, std::vector<double> weights) {
  if (locations.size() != weights.size())
    throw invalid_input("AtomicMeasure: locations/weights size mismatch");
  atoms_.reserve(locations.size());
  for (std::size_t i = 0; i < locations.size(); ++i)
    atoms_.emplace_back(locations[i], weights[i]);
  normalize();
}

AtomicMeasure::AtomicMeasure(std::vector<std::pair<double, double>> atoms)
    : atoms_(std::move(atoms)) {
  normalize();
}

AtomicMeasure AtomicMeasure::empirical(std::vector<double> locations) {
  if (locations.empty()) throw invalid_input("AtomicMeasure: empty point list");
  const double w = 1.0 / static_cast<double>(locations.size());
  std::vector<std::pair<double, double>> atoms;
  atoms.reserve(locations.size());
  for (double x : locations) atoms.emplace_back(x, w);
  return AtomicMeasure(std::move(atoms));
}

void AtomicMeasure::normalize() {
  if (atoms_.empty()) throw invalid_input("AtomicMeasure: no atoms");
  for (auto& [x, w] : atoms_) {
    if (!std::isfinite(x) || x < 0.0 || x >= 1.0)
      throw invalid_input("AtomicMeasure: location outside [0,1)");
    if (!std::isfinite(w) || w <= 0.0)
      throw invalid_input("AtomicMeasure: weight must be positive");
  }
  std::sort(atoms_.begin(), atoms_.end());
  // Stack exactly coincident atoms.
  std::vector<std::pair<double, double>> merged;
  merged.reserve(atoms_.size());
  for (const auto& a : atoms_) {
    if (!merged.empty() && merged.back().first == a.first)
      merged.back().second += a.second;
    else
      merged.push_back(a);
  }
  atoms_ = std::move(merged);
  total_mass_ = 0.0;
  for (const auto& [x, w] : atoms_) total_mass_ += w;
}

}  // namespace torus_transport
