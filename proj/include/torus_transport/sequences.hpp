#pragma once

#include <cstdint>
#include <string>

#include "torus_transport/measures.hpp"

namespace torus_transport {

bool is_prime(long long n);
/// Smallest prime >= n (n >= 2).
long long next_prime(long long n);

/// An odd prime p >= 3, primality verified at construction.
struct PrimeResidueSpec {
  explicit PrimeResidueSpec(long long prime);
  long long p;
};

/// The measure (1/p) sum of point masses at {k^2/p}, k = 1..p.  Coincident
/// squares stack, so every location except 0 carries weight 2/p.
AtomicMeasure quadratic_residue_measure(const PrimeResidueSpec& spec);

/// max_j | |mu_hat(j)| - predicted | for j = 1..j_max, where the Gauss-sum
/// magnitude predicts 1 when p | j and p^{-1/2} otherwise.
double gauss_magnitude_check(const PrimeResidueSpec& spec, int j_max);

/// An irrational rotation number carried to 128 fractional bits, so that
/// {n alpha} stays accurate far beyond double precision.
class KroneckerAlpha {
 public:
  /// "sqrt2", "golden", or a decimal literal such as "0.33333333333333333333".
  static KroneckerAlpha from_tag(const std::string& tag);

  double value() const;
  const std::string& tag() const { return tag_; }
  unsigned __int128 frac_bits() const { return frac_bits_; }

 private:
  KroneckerAlpha(std::string tag, unsigned __int128 frac_bits)
      : tag_(std::move(tag)), frac_bits_(frac_bits) {}

  std::string tag_;
  unsigned __int128 frac_bits_ = 0;
};

/// N equal atoms at {n alpha}, n = 1..N, accumulated in 128-bit fixed point.
/// Rational alpha degenerates to stacked atoms, which is allowed.
AtomicMeasure kronecker_measure(const KroneckerAlpha& alpha, long long count);

/// Distance from x to the nearest integer, in [0, 1/2].
double nearest_int_distance(double x);

/// min over 1 <= k <= k_max of k * ||k alpha||.
double badly_approximable_floor(const KroneckerAlpha& alpha, long long k_max);

}  // namespace torus_transport
