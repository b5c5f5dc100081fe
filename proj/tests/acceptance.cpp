// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails. Lines tagged "info" never gate.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "chaos01/bench.hpp"
#include "chaos01/chaos_test.hpp"
#include "chaos01/hrv.hpp"
#include "chaos01/noise.hpp"
#include "oracles.hpp"

using namespace chaos01;

namespace {

int failures = 0;

void report(const char* id, const char* title, bool pass, const std::string& detail) {
  std::printf("%-5s %s  %s  [%s]\n", id, pass ? "PASS" : "FAIL", title, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void info(const char* id, const std::string& detail) {
  std::printf("%-5s info  %s\n", id, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

BenchRow ensemble(MapSpec map, NoiseKind kind, double pct, std::size_t realizations, const TestConfig& test,
                  std::uint64_t seed_base = 1000) {
  BenchConfig c;
  c.map = map;
  c.noise_kind = kind;
  c.pct_levels = {pct};
  c.realizations = realizations;
  c.n = 10000;
  c.seed_base = seed_base;
  c.test = test;
  return run_benchmark(c).front();
}

std::vector<double> ks(const BenchRow& row) {
  std::vector<double> out;
  for (const auto& r : row.realizations) out.push_back(r.k);
  return out;
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome ac1(const TestConfig& t) {
  const BenchRow row = ensemble(MapSpec::logistic(3.97), NoiseKind::dynamical, 0.0, 20, t);
  return {row.stats.median >= 0.99 && row.stats.min >= 0.98,
          fmt("median %.4f (>= 0.99), min %.4f (>= 0.98)", row.stats.median, row.stats.min)};
}

Outcome ac2(const TestConfig& t) {
  std::vector<double> a = ks(ensemble(MapSpec::logistic(3.5), NoiseKind::dynamical, 0.0, 20, t));
  for (double& k : a) k = std::abs(k);
  const double med = median(a), mx = *std::max_element(a.begin(), a.end());
  return {med <= 0.05 && mx <= 0.1, fmt("median |K| %.4f (<= 0.05), max |K| %.4f (<= 0.1)", med, mx)};
}

Outcome ac3(const TestConfig& t) {
  const BenchRow row = ensemble(MapSpec::pomeau_manneville(0.2), NoiseKind::dynamical, 0.0, 20, t);
  return {row.stats.median >= 0.99, fmt("median %.4f (>= 0.99)", row.stats.median)};
}

Outcome ac4(const TestConfig& t) {
  std::size_t total = 0, above = 0;
  double worst = 1.0;
  for (const MapSpec& map : {MapSpec::logistic(3.97), MapSpec::pomeau_manneville(0.2)}) {
    for (NoiseKind kind : {NoiseKind::dynamical, NoiseKind::output}) {
      for (double pct : {2.0, 5.0, 10.0, 15.0, 20.0}) {
        for (double k : ks(ensemble(map, kind, pct, 20, t))) {
          ++total;
          above += k > 0.9;
          worst = std::min(worst, k);
        }
      }
    }
  }
  const double frac = static_cast<double>(above) / static_cast<double>(total);
  return {frac >= 0.99, fmt("%zu/%zu above 0.9 (%.1f%%, need >= 99%%), min %.4f", above, total, 100 * frac, worst)};
}

Outcome ac5(const TestConfig& t) {
  const BenchRow row = ensemble(MapSpec::logistic(3.5), NoiseKind::dynamical, 5.0, 100, t);
  const double f = row.stats.frac_below;
  return {f >= 0.78 && f <= 0.98, fmt("fraction below 0.9 = %.2f (need [0.78, 0.98]), median %.4f", f, row.stats.median)};
}

Outcome ac6(const TestConfig& t) {
  const BenchRow row = ensemble(MapSpec::logistic(3.5), NoiseKind::output, 2.0, 20, t);
  return {row.stats.median <= 0.1, fmt("median %.4f (<= 0.1)", row.stats.median)};
}

std::vector<double> to_vec(const Series& s) { return {s.begin(), s.end()}; }

Outcome ac7() {
  std::vector<std::vector<double>> series;
  for (std::uint64_t s = 0; s < 4; ++s) series.push_back(oracle::normal_series(3000, 1.0, 70 + s, 0.5));
  for (std::uint64_t s = 0; s < 3; ++s) {
    series.push_back(to_vec(generate(MapSpec::logistic(3.97), NoiseSpec::none(), 0.1 + 0.2 * s, 3000)));
  }
  series.push_back(to_vec(generate(MapSpec::logistic(3.5), NoiseSpec::none(), 0.3, 3000)));
  for (std::uint64_t s = 0; s < 2; ++s) {
    NoiseSpec ns;
    ns.kind = NoiseKind::output;
    ns.sigma = 0.02;
    ns.seed = s;
    series.push_back(to_vec(generate(MapSpec::pomeau_manneville(0.2), ns, 0.4, 3000)));
  }
  series.push_back(oracle::ar1_rr_surrogate(3000, 0.7, 5));

  double worst = 0.0;
  for (const auto& v : series) {
    TestConfig lit, off;
    lit.ig_mode = IgMode::constant_literal;
    off.ig_mode = IgMode::off;
    const Series s(v);
    const double a = k_statistic(s, lit).k, b = k_statistic(s, off).k;
    worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
  }
  return {worst < 1e-9, fmt("%zu series, max relative difference %.3g (< 1e-9)", series.size(), worst)};
}

Outcome ac8() {
  double msd_dev = 0.0, traj_dev = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto x = oracle::uniform_series(500, -1.0, 1.0, 5000 + seed);
    const double c = 0.05 + 6.1 * static_cast<double>(seed) / 50.0;
    const Trajectory2D t = translation_vars(Series(x), c);
    const auto ref = oracle::brute_force_msd(t.p, t.q, 50);
    const auto got = mean_square_displacement(t, 50);
    for (std::size_t i = 0; i < ref.size(); ++i) msd_dev = std::max(msd_dev, std::abs(got[i] - ref[i]) / std::abs(ref[i]));

    std::vector<double> p, q;
    oracle::closed_form_trajectory(x, c, p, q);
    const double scale = std::max({oracle::max_abs(p), oracle::max_abs(q), 1.0});
    for (std::size_t i = 0; i < x.size(); ++i) {
      traj_dev = std::max({traj_dev, std::abs(t.p[i] - p[i]) / scale, std::abs(t.q[i] - q[i]) / scale});
    }
  }
  return {msd_dev < 1e-10 && traj_dev < 1e-12,
          fmt("MSD max rel dev %.3g (< 1e-10), trajectory max rel dev %.3g (< 1e-12)", msd_dev, traj_dev)};
}

Outcome ac9() {
  int inside = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const double est = estimate_sigma(Series(oracle::normal_series(10000, 0.05, 9000 + seed)));
    const double rel = std::abs(est - 0.05) / 0.05;
    inside += rel <= 0.05;
    worst = std::max(worst, rel);
  }
  return {inside >= 95, fmt("%d/100 within 5%% (>= 95), worst %.2f%%", inside, 100 * worst)};
}

Outcome ac10(const TestConfig& t) {
  int regular = 0;
  double worst = -1.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RrRecord rec = make_rr_record("surrogate" + std::to_string(seed), oracle::ar1_rr_surrogate(10000, 0.9, 300 + seed));
    const LongTermReport r = analyze_long_term(rec, t);
    regular += r.k_full.k < 0.9 && r.k_full.classification == Classification::regular;
    worst = std::max(worst, r.k_full.k);
  }
  return {regular == 10, fmt("%d/10 regular with K < 0.9, max K %.4f", regular, worst)};
}

template <class F>
void timed(const char* id, const char* title, F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  const Outcome o = fn();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, title, o.pass, o.detail + fmt(", %.1f s", s));
}

}  // namespace

int main() {
  const TestConfig def;
  const TestConfig literal = TestConfig::strict_paper();

  timed("AC1", "noise-free chaotic logistic", [&] { return ac1(def); });
  timed("AC2", "noise-free regular logistic", [&] { return ac2(def); });
  timed("AC3", "noise-free Pomeau-Manneville", [&] { return ac3(def); });
  timed("AC4", "chaotic robustness under noise", [&] { return ac4(def); });
  timed("AC5", "regular logistic, dynamical noise 5%", [&] { return ac5(def); });
  timed("AC6", "regular logistic, output noise 2%", [&] { return ac6(def); });
  timed("AC7", "regularization constant does not move K", [] { return ac7(); });
  timed("AC8", "displacement and trajectory oracles", [] { return ac8(); });
  timed("AC9", "noise estimator on white noise", [] { return ac9(); });
  timed("AC10", "hrv pipeline on AR(1) surrogates", [&] { return ac10(def); });

  // Same ensembles with the mean entering the oscillation term linearly and a
  // constant regularization term.
  std::printf("\nliteral mode (informational):\n");
  const std::pair<const char*, Outcome (*)(const TestConfig&)> lit[] = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5}, {"AC6", ac6}, {"AC10", ac10}};
  for (const auto& [id, fn] : lit) {
    const Outcome o = fn(literal);
    info(id, std::string(o.pass ? "would pass: " : "would fail: ") + o.detail);
  }

  std::printf("\n%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
