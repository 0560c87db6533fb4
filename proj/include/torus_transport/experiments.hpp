#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "torus_transport/cdf.hpp"
#include "torus_transport/fit.hpp"
#include "torus_transport/fourier.hpp"

namespace torus_transport {

/// Uniform double in [0,1) from the engine's raw bits; the standard
/// distributions are implementation-defined, this is not.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}

/// Random trigonometric density series: c_0 = 1, random decaying oscillation
/// with a guaranteed first-frequency component, rescaled so the synthesized
/// function stays >= 0.05 sup-norm margin above zero.
FourierSeries random_positive_density_series(std::mt19937_64& rng, int max_degree);

/// Random mean-zero real trigonometric polynomial of the given degree.
FourierSeries random_mean_zero_series(std::mt19937_64& rng, int max_degree);

/// Equal-mass atoms at the quantiles ((i+1/2)/count) of a measure.
AtomicMeasure quantile_quantization(const Cdf& c, int count);

struct ExperimentConfig {
  std::string name;
  std::uint64_t seed = 42;
  int grid = 4096;
  std::map<std::string, std::string> params;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, SlopeFit>> fits;
  std::vector<std::pair<std::string, double>> scalars;
};

struct ExperimentInfo {
  std::string name;
  std::string description;
  std::string expected;
  std::map<std::string, std::string> defaults;
};

const std::vector<ExperimentInfo>& experiment_manifest();

/// Deterministic for a fixed config; rows are sorted by the leading column.
Table run_experiment(const ExperimentConfig& cfg);

std::string table_to_csv(const Table& t);
std::string table_to_json(const Table& t);

/// "a..b" inclusive.
std::pair<long long, long long> parse_range(const std::string& text);
/// Comma-separated reals.
std::vector<double> parse_real_list(const std::string& text);
/// count primes spread geometrically across [lo, hi].
std::vector<long long> geometric_primes(long long lo, long long hi, int count);

}  // namespace torus_transport
