#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chaos01/chaos_test.hpp"
#include "chaos01/maps.hpp"
#include "chaos01/series.hpp"

namespace chaos01 {

// Initial condition per realization: a fixed value, or (when x0 is empty) a
// uniform draw in (0, 1) from random_initial_condition(seed_base + i).
struct X0Policy {
  std::optional<double> fixed;

  static X0Policy random() { return {}; }
  static X0Policy at(double x0) { return {x0}; }
};

struct BenchConfig {
  MapSpec map;
  NoiseKind noise_kind = NoiseKind::dynamical;
  std::vector<double> pct_levels{0.0, 2.0, 5.0, 10.0, 15.0, 20.0};
  std::size_t realizations = 100;
  std::size_t n = 10000;
  std::size_t discard = 0;  // initial samples dropped before testing
  std::uint64_t seed_base = 0;
  X0Policy x0_policy;
  TestConfig test;

  void validate() const;
};

struct Boxplot {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_lo = 0.0;
  double whisker_hi = 0.0;
};

struct RealizationResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  double x0 = 0.0;
  double sigma = 0.0;
  double k = 0.0;
};

struct BenchRow {
  std::string map_label;
  NoiseKind noise_kind = NoiseKind::dynamical;
  double pct = 0.0;
  GroupStats stats;
  Boxplot boxplot;
  std::vector<RealizationResult> realizations;  // sorted by index
};

const char* to_string(NoiseKind kind);

// Tukey box: linear-interpolated quartiles, whiskers at the most extreme
// values within 1.5 IQR of the quartiles.
Boxplot tukey_boxplot(std::span<const double> values);

// One realization: calibrate sigma from the noise-free orbit at its x0,
// generate, test with sigma set to the calibrated value.
RealizationResult run_realization(const BenchConfig& cfg, double pct, std::size_t index);

// Rows in pct_levels order. Realizations may run concurrently (`threads` = 0
// picks the hardware concurrency); the output does not depend on it.
std::vector<BenchRow> run_benchmark(const BenchConfig& cfg, unsigned threads = 0);

}  // namespace chaos01
