#include "chaos01/bench.hpp"

#include <algorithm>
#include <cmath>

#include "chaos01/error.hpp"
#include "detail/parallel.hpp"

namespace chaos01 {

void BenchConfig::validate() const {
  map.validate();
  if (realizations < 1) throw Error(ErrorCode::InvalidConfig, "realizations must be >= 1");
  if (n < 20) throw Error(ErrorCode::TooShort, "benchmark series need at least 20 samples");
  if (noise_kind == NoiseKind::none) throw Error(ErrorCode::InvalidConfig, "noise kind must be dynamical or output");
  if (pct_levels.empty()) throw Error(ErrorCode::InvalidConfig, "at least one noise level is required");
  for (double p : pct_levels) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidConfig, "noise levels must be >= 0");
  }
  if (x0_policy.fixed && !(*x0_policy.fixed >= 0.0 && *x0_policy.fixed <= 1.0)) {
    throw Error(ErrorCode::DomainError, "fixed x0 must lie in [0, 1]");
  }
  test.validate(n);
}

const char* to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::none: return "none";
    case NoiseKind::dynamical: return "dynamical";
    case NoiseKind::output: return "output";
  }
  return "none";
}

Boxplot tukey_boxplot(std::span<const double> values) {
  Boxplot b;
  b.q1 = quantile(values, 0.25);
  b.median = median(values);
  b.q3 = quantile(values, 0.75);
  const double reach = 1.5 * (b.q3 - b.q1);
  b.whisker_lo = b.q1;
  b.whisker_hi = b.q3;
  for (double v : values) {
    if (v >= b.q1 - reach) b.whisker_lo = std::min(b.whisker_lo, v);
    if (v <= b.q3 + reach) b.whisker_hi = std::max(b.whisker_hi, v);
  }
  return b;
}

RealizationResult run_realization(const BenchConfig& cfg, double pct, std::size_t index) {
  RealizationResult r;
  r.index = index;
  r.seed = cfg.seed_base + index;
  r.x0 = cfg.x0_policy.fixed ? *cfg.x0_policy.fixed : random_initial_condition(r.seed);

  const std::size_t total = cfg.n + cfg.discard;
  r.sigma = calibrate_sigma(cfg.map, r.x0, total, pct);

  NoiseSpec noise;
  noise.kind = r.sigma > 0.0 ? cfg.noise_kind : NoiseKind::none;
  noise.sigma = r.sigma;
  noise.pct = pct;
  noise.seed = r.seed;
  Series series = generate(cfg.map, noise, r.x0, total);
  if (cfg.discard > 0) series = series.slice(cfg.discard, cfg.n);

  TestConfig test = cfg.test;
  test.sigma = r.sigma;
  r.k = k_statistic(series, test).k;
  return r;
}

std::vector<BenchRow> run_benchmark(const BenchConfig& cfg, unsigned threads) {
  cfg.validate();
  std::vector<BenchRow> rows;
  rows.reserve(cfg.pct_levels.size());
  for (double pct : cfg.pct_levels) {
    BenchRow row;
    row.map_label = cfg.map.label();
    row.noise_kind = cfg.noise_kind;
    row.pct = pct;
    row.realizations.resize(cfg.realizations);
    detail::parallel_for(cfg.realizations, threads,
                         [&](std::size_t i) { row.realizations[i] = run_realization(cfg, pct, i); });

    std::vector<double> ks;
    ks.reserve(row.realizations.size());
    for (const auto& r : row.realizations) ks.push_back(r.k);
    row.stats = summary_stats(ks, cfg.test.threshold);
    row.boxplot = tukey_boxplot(ks);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace chaos01
