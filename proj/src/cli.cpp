#include "chaos01/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chaos01/bench.hpp"
#include "chaos01/chaos_test.hpp"
#include "chaos01/error.hpp"
#include "chaos01/hrv.hpp"
#include "chaos01/io.hpp"
#include "chaos01/maps.hpp"
#include "detail/parallel.hpp"

namespace chaos01 {

namespace {

struct TestFlags {
  std::string sigma = "auto";
  std::optional<std::size_t> n_cut;
  std::string ig_mode = "oscillatory";
  int osc_exponent = 2;
  double threshold = 0.9;
  std::size_t c_grid_size = 100;
  double c_halfwidth = 0.5;
  bool strict_paper = false;

  void attach(CLI::App& app, bool with_sigma) {
    if (with_sigma) app.add_option("--sigma", sigma, "Noise standard deviation, or 'auto' to estimate");
    app.add_option("--n-cut", n_cut, "Largest displacement lag (default N/10)");
    app.add_option("--ig-mode", ig_mode, "Regularization term")
        ->check(CLI::IsMember({"oscillatory", "constant-literal", "off"}));
    app.add_option("--osc-exponent", osc_exponent, "Power of the mean in the oscillation term")
        ->check(CLI::IsMember({1, 2}));
    app.add_option("--threshold", threshold, "Chaotic if K exceeds this")->check(CLI::Range(0.0, 1.0));
    app.add_option("--c-grid-size", c_grid_size, "Frequencies evaluated around c_bar");
    app.add_option("--c-halfwidth", c_halfwidth, "Half-width of the frequency interval");
    app.add_flag("--strict-paper", strict_paper, "Oscillation exponent 1 and constant regularization term");
  }

  TestConfig build() const {
    TestConfig cfg;
    cfg.n_cut = n_cut;
    cfg.ig_mode = parse_ig_mode(ig_mode);
    cfg.osc_exponent = osc_exponent;
    cfg.threshold = threshold;
    cfg.c_grid_size = c_grid_size;
    cfg.c_halfwidth = c_halfwidth;
    if (strict_paper) {
      cfg.osc_exponent = 1;
      cfg.ig_mode = IgMode::constant_literal;
    }
    if (sigma != "auto") {
      try {
        std::size_t used = 0;
        cfg.sigma = std::stod(sigma, &used);
        if (used != sigma.size()) throw std::invalid_argument(sigma);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidConfig, "--sigma must be a number or 'auto'");
      }
    }
    return cfg;
  }
};

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

int cmd_simulate(const std::string& map, double param, const std::string& noise, double pct,
                 std::optional<double> sigma, std::size_t n, std::uint64_t seed, double x0, const std::string& out_path,
                 std::ostream& out) {
  const MapSpec spec = map == "logistic" ? MapSpec::logistic(param) : MapSpec::pomeau_manneville(param);
  NoiseSpec ns;
  ns.seed = seed;
  if (noise != "none") {
    ns.kind = noise == "dynamical" ? NoiseKind::dynamical : NoiseKind::output;
    if (sigma) {
      ns.sigma = *sigma;
    } else {
      ns.sigma = calibrate_sigma(spec, x0, std::max<std::size_t>(n, 2), pct);
      ns.pct = pct;
    }
  }
  emit(out_path, series_to_csv(generate(spec, ns, x0, n)), out);
  return kExitOk;
}

int cmd_test(const std::string& input, const TestFlags& flags, const std::string& out_path,
             const std::string& dump_kc, std::ostream& out, std::ostream& err) {
  const Series series = read_series(input);
  const KResult r = k_statistic(series, flags.build());
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  emit(out_path, to_json(r).dump(2) + '\n', out);
  if (!dump_kc.empty()) write_file_atomic(dump_kc, k_per_c_to_csv(r));
  return kExitOk;
}

int cmd_hrv(const std::vector<std::string>& inputs, const std::string& format, std::optional<std::size_t> take,
            std::size_t window, std::size_t shift, const TestFlags& flags, const std::string& out_path,
            const std::string& table_path, unsigned threads, std::ostream& out, std::ostream& err) {
  TestConfig cfg = flags.build();
  std::vector<RrRecord> records;
  for (const auto& path : inputs) {
    const RrFormat f = format == "auto" ? guess_rr_format(path) : (format == "csv" ? RrFormat::csv : RrFormat::plain);
    RrRecord rec = read_rr_series(path, f);
    records.push_back(take ? take_prefix(rec, *take) : std::move(rec));
  }

  LongTermOptions opts;
  opts.window = window;
  opts.shift = shift;
  std::vector<std::optional<LongTermReport>> reports(records.size());
  detail::parallel_for(records.size(), threads,
                       [&](std::size_t i) { reports[i] = analyze_long_term(records[i], cfg, opts); });

  std::string jsonl;
  std::string table = hrv_table_header();
  for (const auto& r : reports) {
    for (const auto& w : r->k_full.warnings) err << "warning: " << r->id << ": " << w << '\n';
    jsonl += to_json(*r).dump() + '\n';
    table += hrv_table_row(*r);
  }
  emit(out_path, jsonl, out);
  if (!table_path.empty()) write_file_atomic(table_path, table);
  return kExitOk;
}

int cmd_bench(const std::string& config, const std::string& out_dir, unsigned threads) {
  namespace fs = std::filesystem;
  const std::vector<BenchConfig> runs = read_bench_config(config);
  std::vector<BenchRow> rows;
  for (const auto& run : runs) {
    std::vector<BenchRow> r = run_benchmark(run, threads);
    rows.insert(rows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + out_dir + ": " + ec.message());

  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : rows) j.push_back(to_json(row));
  const fs::path dir(out_dir);
  write_file_atomic((dir / "bench_rows.csv").string(), bench_rows_csv(rows));
  write_file_atomic((dir / "bench_rows.json").string(), j.dump(2) + '\n');
  write_file_atomic((dir / "bench_k_values.csv").string(), bench_realizations_csv(rows));
  return kExitOk;
}

int cmd_phase(const std::string& input, double c, const std::string& out_path, std::ostream& out) {
  emit(out_path, trajectory_to_csv(translation_vars(read_series(input), c)), out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noise-aware 0-1 test for chaos on scalar time series", "chaos01"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Generate a logistic or Pomeau-Manneville series");
  std::string sim_map = "logistic", sim_noise = "none", sim_out;
  double sim_param = 3.97, sim_pct = 0.0, sim_x0 = 0.5;
  std::optional<double> sim_sigma;
  std::size_t sim_n = 10000;
  std::uint64_t sim_seed = 0;
  sim->add_option("--map", sim_map, "Map family")->check(CLI::IsMember({"logistic", "pm"}));
  sim->add_option("--param", sim_param, "mu for logistic, gamma for pm");
  sim->add_option("--noise", sim_noise, "Noise kind")->check(CLI::IsMember({"none", "dynamical", "output"}));
  sim->add_option("--pct", sim_pct, "Noise sd as a percentage of the noise-free range");
  sim->add_option("--sigma", sim_sigma, "Absolute noise sd (overrides --pct)");
  sim->add_option("--n", sim_n, "Series length");
  sim->add_option("--seed", sim_seed, "Noise seed");
  sim->add_option("--x0", sim_x0, "Initial condition in [0, 1]");
  sim->add_option("--out", sim_out, "Output CSV (stdout if omitted)");

  // test
  auto* test = app.add_subcommand("test", "Compute K for a series");
  std::string test_in, test_out, test_dump;
  TestFlags test_flags;
  test->add_option("--input", test_in, "Series file, one value per line")->required();
  test_flags.attach(*test, true);
  test->add_option("--out", test_out, "Result JSON (stdout if omitted)");
  test->add_option("--dump-kc", test_dump, "Write the per-frequency K_c table as CSV");

  // hrv
  auto* hrv = app.add_subcommand("hrv", "Long-term analysis of RR-interval recordings");
  std::vector<std::string> hrv_in;
  std::string hrv_format = "auto", hrv_out, hrv_table;
  std::optional<std::size_t> hrv_take;
  std::size_t hrv_window = 5000, hrv_shift = 2500;
  unsigned hrv_threads = 0;
  TestFlags hrv_flags;
  hrv->add_option("--input", hrv_in, "RR file(s), seconds")->required();
  hrv->add_option("--format", hrv_format, "Input format")->check(CLI::IsMember({"auto", "plain", "csv"}));
  hrv->add_option("--take", hrv_take, "Analyse only the first N intervals");
  hrv->add_option("--window", hrv_window, "Sigma window length");
  hrv->add_option("--shift", hrv_shift, "Sigma window shift");
  hrv_flags.attach(*hrv, false);
  hrv->add_option("--out", hrv_out, "One JSON object per record (stdout if omitted)");
  hrv->add_option("--table", hrv_table, "Batch CSV: id,sigma_mean,k_full,k_lf,k_hf,classification");
  hrv->add_option("--threads", hrv_threads, "Worker threads (0 = all cores)");

  // bench
  auto* bench = app.add_subcommand("bench", "Synthetic validation ensembles");
  std::string bench_config, bench_out;
  unsigned bench_threads = 0;
  bench->add_option("--config", bench_config, "Bench configuration JSON")->required();
  bench->add_option("--out", bench_out, "Output directory")->required();
  bench->add_option("--threads", bench_threads, "Worker threads (0 = all cores)");

  // phase
  auto* phase = app.add_subcommand("phase", "p-q trajectory of a series at one frequency");
  std::string phase_in, phase_out;
  double phase_c = 1.0;
  phase->add_option("--input", phase_in, "Series file")->required();
  phase->add_option("--c", phase_c, "Normalized frequency in (0, 2 pi)")->required();
  phase->add_option("--out", phase_out, "Output CSV (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (*sim) return cmd_simulate(sim_map, sim_param, sim_noise, sim_pct, sim_sigma, sim_n, sim_seed, sim_x0, sim_out, out);
    if (*test) return cmd_test(test_in, test_flags, test_out, test_dump, out, err);
    if (*hrv) {
      return cmd_hrv(hrv_in, hrv_format, hrv_take, hrv_window, hrv_shift, hrv_flags, hrv_out, hrv_table, hrv_threads,
                     out, err);
    }
    if (*bench) return cmd_bench(bench_config, bench_out, bench_threads);
    if (*phase) return cmd_phase(phase_in, phase_c, phase_out, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical_degeneracy(e.code()) ? kExitDegenerate : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace chaos01
