#include "torus_transport/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace torus_transport {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e^{-2 pi i r / M} for r = 0..M-1, each entry accurate to rounding.
std::vector<std::complex<double>> root_table(int M) {
  std::vector<std::complex<double>> w(static_cast<std::size_t>(M));
  for (int r = 0; r < M; ++r) {
    const double a = -kTwoPi * static_cast<double>(r) / static_cast<double>(M);
    w[static_cast<std::size_t>(r)] = {std::cos(a), std::sin(a)};
  }
  return w;
}

}  // namespace

FourierSeries::FourierSeries(int max_freq, std::vector<std::complex<double>> coeffs)
    : max_freq_(max_freq), coeffs_(std::move(coeffs)) {
  if (max_freq_ < 0) throw invalid_input("FourierSeries: negative max frequency");
  if (coeffs_.size() != static_cast<std::size_t>(2 * max_freq_ + 1))
    throw invalid_input("FourierSeries: expected 2K+1 coefficients");
  double scale = 0.0;
  for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
  const double tol = 1e-12 * std::max(1.0, scale);
  for (int k = 0; k <= max_freq_; ++k) {
    const auto cp = coeffs_[static_cast<std::size_t>(max_freq_ + k)];
    const auto cm = coeffs_[static_cast<std::size_t>(max_freq_ - k)];
    if (std::abs(cm - std::conj(cp)) > tol)
      throw invalid_input("FourierSeries: coefficients violate conjugate symmetry");
    // Exactify the symmetry so invariants hold bit-for-bit downstream.
    const auto sym = 0.5 * (cp + std::conj(cm));
    coeffs_[static_cast<std::size_t>(max_freq_ + k)] = sym;
    coeffs_[static_cast<std::size_t>(max_freq_ - k)] = std::conj(sym);
  }
  auto& c0 = coeffs_[static_cast<std::size_t>(max_freq_)];
  c0 = {c0.real(), 0.0};
}

FourierSeries FourierSeries::hermitian(int max_freq,
                                       const std::vector<std::complex<double>>& nonneg) {
  if (max_freq < 0 || nonneg.size() != static_cast<std::size_t>(max_freq + 1))
    throw invalid_input("FourierSeries::hermitian: expected K+1 coefficients");
  std::vector<std::complex<double>> full(static_cast<std::size_t>(2 * max_freq + 1));
  for (int k = 0; k <= max_freq; ++k) {
    full[static_cast<std::size_t>(max_freq + k)] = nonneg[static_cast<std::size_t>(k)];
    full[static_cast<std::size_t>(max_freq - k)] = std::conj(nonneg[static_cast<std::size_t>(k)]);
  }
  return FourierSeries(max_freq, std::move(full));
}

std::complex<double> FourierSeries::coeff(int k) const {
  if (k < -max_freq_ || k > max_freq_) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(k + max_freq_)];
}

double FourierSeries::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double FourierSeries::l2_norm_sq() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

int FourierSeries::min_active_freq(double tol) const {
  for (int k = 1; k <= max_freq_; ++k)
    if (std::abs(coeff(k)) > tol) return k;
  return 0;
}

double FourierSeries::evaluate(double x) const {
  const std::complex<double> w{std::cos(kTwoPi * x), std::sin(kTwoPi * x)};
  std::complex<double> z = w;
  double acc = mean();
  for (int k = 1; k <= max_freq_; ++k) {
    acc += 2.0 * (coeff(k) * z).real();
    z *= w;
  }
  return acc;
}

FourierSeries fourier_of_density(const TorusDensity& d, int max_freq) {
  const int M = d.grid_size();
  if (max_freq < 0) throw invalid_input("fourier_of_density: K must be >= 0");
  if (2 * max_freq > M)
    throw invalid_input("fourier_of_density: K > M/2 would alias frequencies");
  const auto w = root_table(M);
  const auto& f = d.samples();
  std::vector<std::complex<double>> nonneg(static_cast<std::size_t>(max_freq + 1));
  for (int k = 0; k <= max_freq; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j < M; ++j) {
      const auto r = static_cast<std::size_t>(
          (static_cast<long long>(k) * j) % M);
      acc += f[static_cast<std::size_t>(j)] * w[r];
    }
    nonneg[static_cast<std::size_t>(k)] = acc / static_cast<double>(M);
  }
  // k = 0 carries no phases; make c_0 the mean exactly.
  nonneg[0] = {d.mean(), 0.0};
  return FourierSeries::hermitian(max_freq, nonneg);
}

FourierSeries fourier_of_atoms(const AtomicMeasure& a, int max_freq) {
  if (max_freq < 0) throw invalid_input("fourier_of_atoms: K must be >= 0");
  std::vector<std::complex<double>> nonneg(static_cast<std::size_t>(max_freq + 1),
                                           std::complex<double>{0.0, 0.0});
  for (const auto& [x, weight] : a.atoms()) {
    const std::complex<double> step{std::cos(kTwoPi * x), -std::sin(kTwoPi * x)};
    std::complex<double> z{1.0, 0.0};
    for (int j = 0; j <= max_freq; ++j) {
      if (j > 0 && j % 1024 == 0) {
        // Resynchronize the phase recurrence against accumulated drift.
        const double frac = std::fmod(static_cast<double>(j) * x, 1.0);
        z = {std::cos(kTwoPi * frac), -std::sin(kTwoPi * frac)};
      }
      nonneg[static_cast<std::size_t>(j)] += weight * z;
      z *= step;
    }
  }
  nonneg[0] = {a.total_mass(), 0.0};
  return FourierSeries::hermitian(max_freq, nonneg);
}

FourierSeries minus_mean(const FourierSeries& s) {
  std::vector<std::complex<double>> nonneg(static_cast<std::size_t>(s.max_freq() + 1));
  for (int k = 1; k <= s.max_freq(); ++k) nonneg[static_cast<std::size_t>(k)] = s.coeff(k);
  nonneg[0] = {0.0, 0.0};
  return FourierSeries::hermitian(s.max_freq(), nonneg);
}

TorusDensity synthesize_grid(const FourierSeries& s, int grid_size) {
  const int M = grid_size;
  const int K = s.max_freq();
  if (M < 2 * K + 2)
    throw invalid_input("synthesize_grid: grid too small for the band, need M >= 2K+2");
  const auto w = root_table(M);
  std::vector<double> out(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    double acc = s.mean();
    for (int k = 1; k <= K; ++k) {
      // e^{+2 pi i k x_j} = conj(w[k j mod M])
      const auto r = static_cast<std::size_t>((static_cast<long long>(k) * j) % M);
      acc += 2.0 * (s.coeff(k) * std::conj(w[r])).real();
    }
    out[static_cast<std::size_t>(j)] = acc;
  }
  return TorusDensity::signed_density(std::move(out));
}

}  // namespace torus_transport
