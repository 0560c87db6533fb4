#pragma once

#include <complex>
#include <vector>

#include "torus_transport/measures.hpp"

namespace torus_transport {

/// Complex Fourier coefficients c_k, k = -K..K, with the convention
///   c_k = integral over [0,1) of f(x) e^{-2 pi i k x} dx.
///
/// Series built from real data satisfy c_{-k} = conj(c_k); the constructor
/// checks this and c_0 in particular is real.
class FourierSeries {
 public:
  FourierSeries(int max_freq, std::vector<std::complex<double>> coeffs);

  /// Build a Hermitian series from the coefficients for k = 0..K only.
  static FourierSeries hermitian(int max_freq, const std::vector<std::complex<double>>& nonneg);

  int max_freq() const { return max_freq_; }
  std::complex<double> coeff(int k) const;
  double mean() const { return coeffs_[static_cast<std::size_t>(max_freq_)].real(); }

  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  /// max_k |c_k|.
  double max_abs_coeff() const;
  /// Parseval: sum over all k of |c_k|^2 (equals the L2 norm squared when band-limited).
  double l2_norm_sq() const;
  /// Smallest |k| > 0 carrying a coefficient with |c_k| > tol; 0 when none.
  int min_active_freq(double tol = 1e-15) const;

  /// Evaluate the trigonometric polynomial at x (real part; imaginary part
  /// cancels for Hermitian data).
  double evaluate(double x) const;

 private:
  int max_freq_ = 0;
  std::vector<std::complex<double>> coeffs_;  // index k + K
};

/// c_k = (1/M) sum_j f(x_j) e^{-2 pi i k x_j}, k = -K..K.  Requires K <= M/2.
FourierSeries fourier_of_density(const TorusDensity& d, int max_freq);

/// c_j = sum_n w_n e^{-2 pi i j x_n}, exact to rounding.
FourierSeries fourier_of_atoms(const AtomicMeasure& a, int max_freq);

/// Inverse transform onto the grid x_j = j/M.  Requires M >= 2K+2.
TorusDensity synthesize_grid(const FourierSeries& s, int grid_size);

/// Copy of s with the mean removed (c_0 = 0).
FourierSeries minus_mean(const FourierSeries& s);

/// Elementwise multiplier c_k -> c_k * factor(k), applied for k >= 0 and
/// mirrored conjugate-symmetrically.  Correct for any multiplier with
/// factor(-k) = conj(factor(k)), e.g. heat damping or 2 pi i k derivatives.
template <typename F>
FourierSeries map_coeffs(const FourierSeries& s, F&& factor) {
  std::vector<std::complex<double>> out(static_cast<std::size_t>(s.max_freq() + 1));
  for (int k = 0; k <= s.max_freq(); ++k)
    out[static_cast<std::size_t>(k)] = s.coeff(k) * factor(k);
  return FourierSeries::hermitian(s.max_freq(), out);
}

}  // namespace torus_transport
