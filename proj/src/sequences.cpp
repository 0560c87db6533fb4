#include "torus_transport/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <vector>

#include "torus_transport/errors.hpp"
#include "torus_transport/fourier.hpp"

namespace torus_transport {

namespace {

using uint128 = unsigned __int128;

// 50 fractional digits; 128 bits need just under 39.
constexpr const char* kSqrt2Frac = "41421356237309504880168872420969807856967187537694";
constexpr const char* kGoldenFrac = "61803398874989484820458683436563811772030917980576";

// floor(0.d1 d2 ... * 2^128) by repeated doubling of the decimal fraction.
uint128 frac_bits_from_digits(const std::string& digits) {
  std::vector<int> d;
  d.reserve(digits.size());
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw invalid_input("KroneckerAlpha: bad digit in decimal literal");
    d.push_back(c - '0');
  }
  uint128 bits = 0;
  for (int iter = 0; iter < 128; ++iter) {
    int carry = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
      const int t = 2 * (*it) + carry;
      *it = t % 10;
      carry = t / 10;
    }
    bits = (bits << 1) | static_cast<unsigned>(carry);
  }
  return bits;
}

double unit_from_bits(uint128 bits) {
  const auto hi = static_cast<unsigned long long>(bits >> 64);
  const auto lo = static_cast<unsigned long long>(bits);
  double x = static_cast<double>(hi) * 0x1p-64 + static_cast<double>(lo) * 0x1p-128;
  return x >= 1.0 ? 0.0 : x;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

long long next_prime(long long n) {
  if (n <= 2) return 2;
  long long c = (n % 2 == 0) ? n + 1 : n;
  while (!is_prime(c)) c += 2;
  return c;
}

PrimeResidueSpec::PrimeResidueSpec(long long prime) : p(prime) {
  if (p < 3 || !is_prime(p)) throw invalid_input("PrimeResidueSpec: need an odd prime >= 3");
}

AtomicMeasure quadratic_residue_measure(const PrimeResidueSpec& spec) {
  const long long p = spec.p;
  std::vector<double> locs(static_cast<std::size_t>(p));
  std::vector<double> weights(static_cast<std::size_t>(p), 1.0 / static_cast<double>(p));
  for (long long k = 1; k <= p; ++k)
    locs[static_cast<std::size_t>(k - 1)] =
        static_cast<double>((k * k) % p) / static_cast<double>(p);
  return AtomicMeasure(std::move(locs), std::move(weights));
}

double gauss_magnitude_check(const PrimeResidueSpec& spec, int j_max) {
  if (j_max < 1) throw invalid_input("gauss_magnitude_check: j_max must be >= 1");
  const auto mu = quadratic_residue_measure(spec);
  const auto series = fourier_of_atoms(mu, j_max);
  const double off = 1.0 / std::sqrt(static_cast<double>(spec.p));
  double worst = 0.0;
  for (int j = 1; j <= j_max; ++j) {
    const double predicted = (j % spec.p == 0) ? 1.0 : off;
    worst = std::max(worst, std::fabs(std::abs(series.coeff(j)) - predicted));
  }
  return worst;
}

KroneckerAlpha KroneckerAlpha::from_tag(const std::string& tag) {
  if (tag == "sqrt2") return KroneckerAlpha(tag, frac_bits_from_digits(kSqrt2Frac));
  if (tag == "golden") return KroneckerAlpha(tag, frac_bits_from_digits(kGoldenFrac));
  const auto dot = tag.find('.');
  const std::string int_part = (dot == std::string::npos) ? tag : tag.substr(0, dot);
  const std::string frac_part = (dot == std::string::npos) ? "" : tag.substr(dot + 1);
  if (int_part.empty() && frac_part.empty())
    throw invalid_input("KroneckerAlpha: empty decimal literal");
  for (char c : int_part)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw invalid_input("KroneckerAlpha: expected sqrt2, golden, or a decimal literal");
  return KroneckerAlpha(tag, frac_bits_from_digits(frac_part.empty() ? "0" : frac_part));
}

double KroneckerAlpha::value() const { return unit_from_bits(frac_bits_); }

AtomicMeasure kronecker_measure(const KroneckerAlpha& alpha, long long count) {
  if (count < 1) throw invalid_input("kronecker_measure: N must be >= 1");
  if (count > 10000000)
    throw invalid_input("kronecker_measure: N > 1e7 exhausts the location precision budget");
  std::vector<double> locs(static_cast<std::size_t>(count));
  uint128 acc = 0;
  for (long long n = 0; n < count; ++n) {
    acc += alpha.frac_bits();  // wraps mod 2^128 = mod 1
    locs[static_cast<std::size_t>(n)] = unit_from_bits(acc);
  }
  std::vector<double> weights(static_cast<std::size_t>(count), 1.0 / static_cast<double>(count));
  return AtomicMeasure(std::move(locs), std::move(weights));
}

double nearest_int_distance(double x) {
  if (!std::isfinite(x)) throw invalid_input("nearest_int_distance: non-finite input");
  const double f = x - std::floor(x);
  return std::min(f, 1.0 - f);
}

double badly_approximable_floor(const KroneckerAlpha& alpha, long long k_max) {
  if (k_max < 1) throw invalid_input("badly_approximable_floor: k_max must be >= 1");
  uint128 acc = 0;
  double best = std::numeric_limits<double>::infinity();
  for (long long k = 1; k <= k_max; ++k) {
    acc += alpha.frac_bits();
    const uint128 down = acc;
    const uint128 up = ~acc + 1;  // 2^128 - acc
    const double dist = unit_from_bits(std::min(down, up));
    best = std::min(best, static_cast<double>(k) * dist);
    if (best == 0.0) break;
  }
  return best;
}

}  // namespace torus_transport
