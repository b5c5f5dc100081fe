#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "chaos01/series.hpp"

namespace chaos01 {

enum class MapKind { logistic, pomeau_manneville };

// Logistic: x -> mu x (1 - x), mu in [0, 4].
// Pomeau-Manneville: x -> x + x^(gamma+1) reduced modulo 1, gamma > 0.
struct MapSpec {
  MapKind kind = MapKind::logistic;
  double param = 3.97;

  static MapSpec logistic(double mu);
  static MapSpec pomeau_manneville(double gamma);

  void validate() const;
  std::string label() const;
};

enum class NoiseKind { none, dynamical, output };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::none;
  double sigma = 0.0;             // absolute standard deviation
  std::optional<double> pct;      // percentage of the noise-free range that produced sigma, if any
  std::uint64_t seed = 0;

  static NoiseSpec none();
  static NoiseSpec dynamical(double sigma, std::uint64_t seed);
  static NoiseSpec output(double sigma, std::uint64_t seed);

  void validate() const;
};

// Reduction modulo 1 into [0, 1): y - floor(y).
double fold_unit(double y);

double map_step(const MapSpec& spec, double x);

double calibrate_sigma(const MapSpec& spec, double x0, std::size_t n, double pct);

// x(0) = x0 is the first sample. Dynamical noise is injected inside the
// recursion and the state is folded back into [0, 1); output noise is added to
// the finished noise-free orbit and is not folded.
Series generate(const MapSpec& spec, const NoiseSpec& noise, double x0, std::size_t n);

// Standard-normal stream with a fixed seed -> sequence mapping.
//
// Draws come from std::mt19937_64 (whose output sequence is fixed by the C++
// standard). Each pair of 53-bit uniforms u1 in (0, 1], u2 in [0, 1) yields two
// normals via Box-Muller: r = sqrt(-2 ln u1), z0 = r cos(2 pi u2),
// z1 = r sin(2 pi u2), emitted in that order.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  double uniform53();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Uniform draw in the open interval (0, 1), used for random initial conditions.
// The generator is std::mt19937_64 seeded with seed ^ 0x9E3779B97F4A7C15 so it
// never shares a stream with the noise of the same seed.
double random_initial_condition(std::uint64_t seed);

}  // namespace chaos01
