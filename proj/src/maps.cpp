#include "chaos01/maps.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "chaos01/error.hpp"

namespace chaos01 {

MapSpec MapSpec::logistic(double mu) {
  MapSpec s{MapKind::logistic, mu};
  s.validate();
  return s;
}

MapSpec MapSpec::pomeau_manneville(double gamma) {
  MapSpec s{MapKind::pomeau_manneville, gamma};
  s.validate();
  return s;
}

void MapSpec::validate() const {
  if (kind == MapKind::logistic && !(param >= 0.0 && param <= 4.0)) {
    throw Error(ErrorCode::DomainError, "logistic parameter must lie in [0, 4]");
  }
  if (kind == MapKind::pomeau_manneville && !(param > 0.0 && std::isfinite(param))) {
    throw Error(ErrorCode::DomainError, "Pomeau-Manneville exponent must be > 0");
  }
}

std::string MapSpec::label() const {
  std::ostringstream os;
  os << (kind == MapKind::logistic ? "logistic(mu=" : "pm(gamma=") << param << ")";
  return os.str();
}

NoiseSpec NoiseSpec::none() { return {}; }

NoiseSpec NoiseSpec::dynamical(double sigma, std::uint64_t seed) {
  NoiseSpec n{NoiseKind::dynamical, sigma, std::nullopt, seed};
  n.validate();
  return n;
}

NoiseSpec NoiseSpec::output(double sigma, std::uint64_t seed) {
  NoiseSpec n{NoiseKind::output, sigma, std::nullopt, seed};
  n.validate();
  return n;
}

void NoiseSpec::validate() const {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw Error(ErrorCode::DomainError, "noise sigma must be >= 0");
  if (kind == NoiseKind::none && sigma != 0.0) {
    throw Error(ErrorCode::DomainError, "noise kind 'none' requires sigma = 0");
  }
  if (pct && !(*pct >= 0.0)) throw Error(ErrorCode::DomainError, "noise percentage must be >= 0");
}

double fold_unit(double y) { return y - std::floor(y); }

double map_step(const MapSpec& spec, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::DomainError, "map state must lie in [0, 1]");
  switch (spec.kind) {
    case MapKind::logistic:
      return spec.param * x * (1.0 - x);
    case MapKind::pomeau_manneville:
      return fold_unit(x + std::pow(x, spec.param + 1.0));
  }
  return x;
}

namespace {

std::vector<double> iterate(const MapSpec& spec, double x0, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  double x = x0;
  out.push_back(x);
  for (std::size_t i = 1; i < n; ++i) {
    x = map_step(spec, x);
    out.push_back(x);
  }
  return out;
}

void check_x0(double x0) {
  if (!(x0 >= 0.0 && x0 <= 1.0)) throw Error(ErrorCode::DomainError, "initial condition must lie in [0, 1]");
}

}  // namespace

double calibrate_sigma(const MapSpec& spec, double x0, std::size_t n, double pct) {
  spec.validate();
  check_x0(x0);
  if (!(pct >= 0.0)) throw Error(ErrorCode::DomainError, "percentage must be >= 0");
  if (n < 2) throw Error(ErrorCode::TooShort, "calibration needs at least 2 samples");
  if (pct == 0.0) return 0.0;
  return pct / 100.0 * range_of(Series(iterate(spec, x0, n)));
}

Series generate(const MapSpec& spec, const NoiseSpec& noise, double x0, std::size_t n) {
  spec.validate();
  noise.validate();
  check_x0(x0);
  if (n == 0) throw Error(ErrorCode::TooShort, "series length must be >= 1");

  if (noise.kind == NoiseKind::none) return Series(iterate(spec, x0, n));

  GaussianStream eps(noise.seed);
  if (noise.kind == NoiseKind::output) {
    std::vector<double> out = iterate(spec, x0, n);
    for (double& v : out) v += noise.sigma * eps.next();
    return Series(std::move(out));
  }

  std::vector<double> out;
  out.reserve(n);
  double x = x0;
  out.push_back(x);
  for (std::size_t i = 1; i < n; ++i) {
    x = fold_unit(map_step(spec, x) + noise.sigma * eps.next());
    out.push_back(x);
  }
  return Series(std::move(out));
}

double GaussianStream::uniform53() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform53();  // (0, 1]
  const double u2 = uniform53();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double random_initial_condition(std::uint64_t seed) {
  std::mt19937_64 engine(seed ^ 0x9E3779B97F4A7C15ULL);
  for (;;) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    if (u > 0.0) return u;
  }
}

}  // namespace chaos01
